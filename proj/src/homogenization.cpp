#include "maxgenus/homogenization.hpp"

#include <algorithm>

#include "maxgenus/errors.hpp"

namespace maxgenus {

Polynomial homogenize(const Polynomial& g0, int d) {
  if (g0.ring() != Ring::XYZ) throw AmbientMismatch("homogenize expects a polynomial in k[x,y,z]");
  std::vector<Term> terms;
  terms.reserve(g0.size());
  for (const auto& t : g0.terms()) {
    int deg = t.mono.degree();
    if (deg > d - 1)
      throw DegreeOverflow("term " + to_string(t.mono, Ring::XYZ) + " has degree " + std::to_string(deg) +
                           " > d-1 = " + std::to_string(d - 1));
    terms.push_back(Term{Monomial(t.mono[0], t.mono[1], t.mono[2], d - 1 - deg), t.coeff});
  }
  return Polynomial::from_terms(g0.field(), Ring::XYZW, std::move(terms));
}

Polynomial dehomogenize_at_z(const Polynomial& G) {
  if (G.ring() != Ring::XYZW) throw AmbientMismatch("dehomogenize_at_z expects a polynomial in k[X,Y,Z,W]");
  std::vector<Term> terms;
  terms.reserve(G.size());
  for (const auto& t : G.terms()) terms.push_back(Term{Monomial(t.mono[0], t.mono[1], t.mono[3]), t.coeff});
  return Polynomial::from_terms(G.field(), Ring::XYW, std::move(terms));
}

std::vector<Polynomial> w_coefficients(const Polynomial& f) {
  if (f.ring() != Ring::XYW) throw AmbientMismatch("w_coefficients expects a polynomial in k[x,y,w]");
  int top = 0;
  for (const auto& t : f.terms()) top = std::max(top, t.mono[2]);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(top) + 1);
  for (const auto& t : f.terms())
    buckets[static_cast<std::size_t>(top - t.mono[2])].push_back(Term{Monomial(t.mono[0], t.mono[1], 0), t.coeff});
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.field(), Ring::XYW, std::move(b)));
  return out;
}

Polynomial from_w_coefficients(const std::vector<Polynomial>& coeffs, int top, const Field& field) {
  Polynomial out(field, Ring::XYW);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    int e = top - static_cast<int>(j);
    if (e < 0) throw DomainError("negative w-exponent in from_w_coefficients");
    out = out + coeffs[j].times(Monomial(0, 0, e));
  }
  return out;
}

std::vector<Monomial> top_degree_weight_monomials(int m) {
  const int ell = 3 * m - 2;
  const int weight = 3 * m;
  int best = -1;
  std::vector<Monomial> found;
  for (int c = 0; 3 * c <= weight; ++c)
    for (int b = 0; 3 * c + 2 * b <= weight; ++b) {
      int a = weight - 3 * c - 2 * b;
      if (a + b >= ell) continue;
      int deg = a + b + c;
      if (deg > best) {
        best = deg;
        found.clear();
      }
      if (deg == best) found.emplace_back(a, b, c);
    }
  return found;
}

}  // namespace maxgenus
