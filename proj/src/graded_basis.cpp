#include "maxgenus/graded_basis.hpp"

#include <algorithm>
#include <sstream>

#include "maxgenus/errors.hpp"

namespace maxgenus {

std::vector<Monomial> monomials_of_weight(int n) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  for (int c = 0; 3 * c <= n; ++c)
    for (int b = 0; 3 * c + 2 * b <= n; ++b) out.emplace_back(n - 3 * c - 2 * b, b, c);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

GradedBasis basis_R_shifted(const ParamSet& params, int n) {
  GradedBasis basis{n, BasisSpace::RShifted, {}};
  for (const auto& mono : monomials_of_weight(n - params.g_weight()))
    if (mono.xy_degree() < params.ell) basis.monomials.push_back(mono);
  return basis;
}

GradedBasis basis_M(const ParamSet& params, int n) {
  GradedBasis basis{n, BasisSpace::M, {}};
  for (const auto& mono : monomials_of_weight(n))
    if (mono.xy_degree() < params.ell && mono.degree() >= params.ell) basis.monomials.push_back(mono);
  return basis;
}

Monomial psi(const Monomial& mono, const ParamSet& params) {
  const int i = mono[0], j = mono[1], k = mono[2];
  if (i + j >= params.ell)
    throw DomainError("psi: " + to_string(mono, Ring::XYZ) + " vanishes in R (i+j >= l)");
  return Monomial(params.ell - i - j - 1, i, 1 + j + k);
}

Monomial psi_inverse(const Monomial& mono, const ParamSet& params) {
  const int a = mono[0], b = mono[1], c = mono[2];
  if (a + b >= params.ell || a + b + c < params.ell)
    throw DomainError("psi_inverse: " + to_string(mono, Ring::XYZ) + " is not a basis monomial of M");
  return Monomial(b, params.ell - 1 - a - b, a + b + c - params.ell);
}

void require_weight_3m(const Polynomial& g, const ParamSet& params) {
  if (g.ring() != Ring::XYZ) throw PreconditionError("g must lie in k[x,y,z]");
  if (g.is_zero() || !g.is_wt_homogeneous(params.g_weight()))
    throw PreconditionError("g must be WT-homogeneous of weight " + std::to_string(params.g_weight()));
}

FieldElement z_power_coefficient(const Polynomial& g, const ParamSet& params) {
  return g.coefficient(Monomial(0, 0, params.m));
}

std::vector<HilbertRow> hilbert_table(const ParamSet& params, const Polynomial& g, int max_weight) {
  require_weight_3m(g, params);
  if (!g.field().is_one(z_power_coefficient(g, params)))
    throw PreconditionError("hilbert_table requires g monic in z^m");
  if (max_weight < 0) max_weight = params.weight_cap();
  std::vector<HilbertRow> rows;
  for (int n = 0; n <= max_weight; ++n) {
    HilbertRow row{n, 0, 0};
    for (const auto& mono : monomials_of_weight(n)) {
      if (mono.xy_degree() < params.ell && mono[2] < params.m) ++row.dim_S;
      if (mono.degree() < params.ell) ++row.dim_T;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string hilbert_csv(const std::vector<HilbertRow>& rows) {
  std::ostringstream out;
  out << "weight,dim_S,dim_T\n";
  for (const auto& r : rows) out << r.weight << ',' << r.dim_S << ',' << r.dim_T << '\n';
  return out.str();
}

}  // namespace maxgenus
