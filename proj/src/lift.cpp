#include "maxgenus/lift.hpp"

#include <algorithm>

#include "maxgenus/errors.hpp"
#include "maxgenus/graded_basis.hpp"
#include "maxgenus/homogenization.hpp"

namespace maxgenus {

// ---------------------------------------------------------------------------
// ParamPolynomial

ParamPolynomial ParamPolynomial::from(const Polynomial& f, int k) {
  ParamPolynomial out(f.field(), f.ring());
  for (const auto& t : f.terms()) out.terms_.emplace(t.mono, TParamPoly::monomial(f.field(), t.coeff, k));
  return out;
}

void ParamPolynomial::add_term(const Monomial& mono, const TParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

int ParamPolynomial::t_degree() const {
  int deg = -1;
  for (const auto& [mono, c] : terms_) deg = std::max(deg, c.degree());
  return deg;
}

Polynomial ParamPolynomial::coefficient_of_t(int k) const {
  std::vector<Term> terms;
  for (const auto& [mono, c] : terms_) {
    FieldElement v = c.coefficient(k);
    if (!v.is_zero()) terms.push_back(Term{mono, std::move(v)});
  }
  return Polynomial::from_terms(field_, ring_, std::move(terms));
}

Polynomial ParamPolynomial::evaluate(const FieldElement& t) const {
  std::vector<Term> terms;
  for (const auto& [mono, c] : terms_) terms.push_back(Term{mono, c.evaluate(t)});
  return Polynomial::from_terms(field_, ring_, std::move(terms));
}

ParamPolynomial ParamPolynomial::truncated_xy(int r) const {
  ParamPolynomial out(field_, ring_);
  for (const auto& [mono, c] : terms_)
    if (mono.xy_degree() < r) out.terms_.emplace(mono, c);
  return out;
}

ParamPolynomial operator+(const ParamPolynomial& f, const ParamPolynomial& g) {
  require_same_field(f.field_, g.field_);
  if (f.ring_ != g.ring_) throw AmbientMismatch("ParamPolynomial operands live in different rings");
  ParamPolynomial out = f;
  for (const auto& [mono, c] : g.terms_) out.add_term(mono, c);
  return out;
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial out(field_, ring_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

ParamPolynomial operator-(const ParamPolynomial& f, const ParamPolynomial& g) { return f + (-g); }

ParamPolynomial mul_mod_xy_power(const ParamPolynomial& f, const ParamPolynomial& g, int r) {
  require_same_field(f.field_, g.field_);
  if (f.ring_ != g.ring_) throw AmbientMismatch("ParamPolynomial operands live in different rings");
  ParamPolynomial out(f.field_, f.ring_);
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) {
      Monomial mono = mf * mg;
      if (mono.xy_degree() >= r) continue;
      out.add_term(mono, cf * cg);
    }
  return out;
}

std::string ParamPolynomial::to_string() const {
  std::string out;
  for (const auto& [mono, c] : terms_) {
    for (int k = 0; k <= c.degree(); ++k) {
      FieldElement v = c.coefficient(k);
      if (v.is_zero()) continue;
      std::string s = field_.to_string(v);
      bool negative = !s.empty() && s[0] == '-';
      if (negative) s.erase(0, 1);
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      std::vector<std::string> factors;
      bool is_const = mono == Monomial{};
      if (s != "1" || (k == 0 && is_const)) factors.push_back(s);
      if (k == 1) factors.push_back("t");
      if (k > 1) factors.push_back("t^" + std::to_string(k));
      if (!is_const) factors.push_back(maxgenus::to_string(mono, ring_));
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// construction

namespace {

Monomial w_power(int e) { return Monomial(0, 0, e); }

// c_0..c_{count-1} with c_j the k[x,y]-coefficient of w^(top-j).  Throws
// ConstructionFailure if f has a w-exponent outside [top-count+1, top].
std::vector<Polynomial> coefficients_at(const Polynomial& f, int top, int count, const char* what) {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(count, 0)));
  for (const auto& t : f.terms()) {
    int j = top - t.mono[2];
    if (j < 0 || j >= count)
      throw ConstructionFailure(std::string(what) + " has an unexpected term " + to_string(t.mono, Ring::XYW));
    buckets[static_cast<std::size_t>(j)].push_back(Term{Monomial(t.mono[0], t.mono[1], 0), t.coeff});
  }
  std::vector<Polynomial> out;
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.field(), Ring::XYW, std::move(b)));
  return out;
}

Polynomial assemble(const std::vector<Polynomial>& coeffs, int top, const Field& field) {
  Polynomial out(field, Ring::XYW);
  for (std::size_t j = 0; j < coeffs.size(); ++j) out = out + coeffs[j].times(w_power(top - static_cast<int>(j)));
  return out;
}

Polynomial g_infinity(const Polynomial& g0, const ParamSet& params) {
  return dehomogenize_at_z(homogenize(g0, params.d));
}

}  // namespace

LiftWitness::LiftWitness(const Field& field)
    : g_inf(field, Ring::XYW),
      gbar(field, Ring::XYW),
      k(field, Ring::XYW),
      kbar(field, Ring::XYW),
      g1(field, Ring::XYW),
      h(field, Ring::XYW),
      h1(field, Ring::XYW) {}

void require_lift_input(const Polynomial& g0, const ParamSet& params) {
  require_weight_3m(g0, params);
  if (!g0.field().is_one(z_power_coefficient(g0, params)))
    throw PreconditionError("g0 must be monic in z^" + std::to_string(params.m));
  for (const auto& t : g0.terms())
    if (t.mono.xy_degree() >= params.ell)
      throw PreconditionError("g0 has the term " + to_string(t.mono, Ring::XYZ) + " in (x,y)^" +
                              std::to_string(params.ell));
  if (g0.coefficient(Monomial(3 * (params.m - 1), 0, 1)).is_zero())
    throw PreconditionError("g0 needs a nonzero coefficient of x^" + std::to_string(3 * (params.m - 1)) + "*z");
}

LiftWitness construct_lift(const Polynomial& g0, const ParamSet& params) {
  require_lift_input(g0, params);
  const int m = params.m;
  const int d = params.d;
  const int a = params.shift();
  const Field& field = g0.field();
  const Polynomial one = Polynomial::constant(field, Ring::XYW, field.one());

  LiftWitness wit(field);
  wit.a = a;

  // (1)
  wit.g_inf = g_infinity(g0, params);
  wit.p = coefficients_at(wit.g_inf, 2 * m - 2, 2 * m - 1, "g_inf");

  // (2)
  wit.q.push_back(one);
  for (int r = 1; r <= m; ++r) {
    Polynomial acc(field, Ring::XYW);
    for (int j = 0; j < r; ++j) acc = acc - wit.p[static_cast<std::size_t>(r - j)] * wit.q[static_cast<std::size_t>(j)];
    wit.q.push_back(acc);
  }
  wit.gbar = assemble(wit.q, m, field);

  // (3)
  Polynomial prod = (wit.g_inf * wit.gbar - Polynomial::monomial(field, Ring::XYW, w_power(3 * m - 2)))
                        .truncated_y(d + 4);
  auto quotient = prod.divided_by(Monomial(1, 0, 0));
  if (!quotient) throw ConstructionFailure("g_inf*gbar - w^(3m-2) is not divisible by x modulo y^(d+4)");
  wit.k = quotient->truncated_xy(d - 1);
  wit.c = coefficients_at(wit.k, 2 * m - 3, m - 2, "k");

  // (4)
  Polynomial f = -mul_mod_xy_power(wit.gbar, wit.k, d - 1);
  wit.e = coefficients_at(f, 3 * m - 3, m - 2, "-gbar*k");

  // (5)
  for (int i = 0; i <= m - 3; ++i) {
    Polynomial acc = wit.e[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j)
      acc = acc - mul_mod_xy_power(wit.b[static_cast<std::size_t>(j)], wit.p[static_cast<std::size_t>(i - j)], d - 1);
    wit.b.push_back(acc.truncated_xy(d - 1));
  }
  wit.kbar = assemble(wit.b, m - 1, field);

  // (6)  h1 carries w^(2a): the t^2 coefficient is then
  // -y^2 w^(2a) (k gbar + g_inf kbar), which vanishes; with w^a it does not
  // once a > 0 and kbar != 0.
  wit.g1 = wit.gbar.times(w_power(a));
  wit.h = wit.k.times(Monomial(0, 1, a));
  wit.h1 = wit.kbar.times(Monomial(0, 1, 2 * a));
  return wit;
}

std::array<Polynomial, 4> congruence_residuals(const LiftWitness& wit, const Polynomial& g0, const ParamSet& params) {
  const Field& field = g0.field();
  const int d = params.d;
  const Polynomial g_inf = g_infinity(g0, params);
  const Polynomial x = Polynomial::monomial(field, Ring::XYW, Monomial(1, 0, 0));
  const Polynomial y = Polynomial::monomial(field, Ring::XYW, Monomial(0, 1, 0));

  auto lhs_left = ParamPolynomial::from(g_inf) + ParamPolynomial::from(wit.h, 1);
  auto inner = ParamPolynomial::from(wit.g1) + ParamPolynomial::from(wit.h1, 1);
  auto lhs_right = ParamPolynomial::from(x) - mul_mod_xy_power(ParamPolynomial::from(y, 1), inner, d);
  auto lhs = mul_mod_xy_power(lhs_left, lhs_right, d);
  auto rhs = ParamPolynomial::from(x * g_inf) -
             ParamPolynomial::from(Polynomial::monomial(field, Ring::XYW, Monomial(0, 1, wit.a + d - 1)), 1);
  auto diff = (lhs - rhs).truncated_xy(d);
  if (diff.t_degree() > 3) throw InvariantViolation("congruence residual has t-degree above 3");
  return {diff.coefficient_of_t(0), diff.coefficient_of_t(1), diff.coefficient_of_t(2), diff.coefficient_of_t(3)};
}

bool verify_congruence(const LiftWitness& wit, const Polynomial& g0, const ParamSet& params) {
  for (const auto* f : {&wit.gbar, &wit.k, &wit.kbar, &wit.g1, &wit.h, &wit.h1})
    if (f->ring() != Ring::XYW || !(f->field() == g0.field())) return false;
  auto res = congruence_residuals(wit, g0, params);
  return std::all_of(res.begin(), res.end(), [](const Polynomial& r) { return r.is_zero(); });
}

SurfaceData surface_equation(const Polynomial& g0, const ParamSet& params, const std::optional<FieldElement>& t) {
  require_lift_input(g0, params);
  const Field& field = g0.field();
  const int a = params.shift();
  const int d = params.d;
  if (t && t->is_zero()) throw PreconditionError("the surface needs t != 0");

  Polynomial G = homogenize(g0, d);
  auto F = ParamPolynomial::from(G.times(Monomial(1, 0, a, 0))) -
           ParamPolynomial::from(Polynomial::monomial(field, Ring::XYZW, Monomial(0, 1, 0, a + d - 1)), 1);
  SurfaceData out{G, F, t, std::nullopt, a + d, params.e(), true};
  for (int k = 0; k <= F.t_degree(); ++k)
    for (const auto& term : F.coefficient_of_t(k).terms())
      if (term.mono.xy_degree() == 0) out.contains_line = false;
  if (t) out.F_at_t = F.evaluate(*t);
  return out;
}

}  // namespace maxgenus
