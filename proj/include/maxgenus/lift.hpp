#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxgenus/params.hpp"
#include "maxgenus/polynomial.hpp"
#include "maxgenus/tparam_poly.hpp"

namespace maxgenus {

// Polynomial whose coefficients are polynomials in a free parameter t.
class ParamPolynomial {
 public:
  ParamPolynomial(Field field, Ring ring) : field_(field), ring_(ring) {}
  // f viewed as constant in t, times t^k.
  static ParamPolynomial from(const Polynomial& f, int k = 0);

  const Field& field() const { return field_; }
  Ring ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  int t_degree() const;

  // Coefficient of t^k as an ordinary polynomial.
  Polynomial coefficient_of_t(int k) const;
  Polynomial evaluate(const FieldElement& t) const;
  ParamPolynomial truncated_xy(int r) const;

  friend ParamPolynomial operator+(const ParamPolynomial& f, const ParamPolynomial& g);
  friend ParamPolynomial operator-(const ParamPolynomial& f, const ParamPolynomial& g);
  ParamPolynomial operator-() const;

  // Terms are written as [c*]t^k*monomial, grlex-descending in the monomial.
  std::string to_string() const;

 private:
  friend ParamPolynomial mul_mod_xy_power(const ParamPolynomial& f, const ParamPolynomial& g, int r);
  void add_term(const Monomial& mono, const TParamPoly& c);

  Field field_;
  Ring ring_;
  std::map<Monomial, TParamPoly, GrlexGreater> terms_;
};

ParamPolynomial mul_mod_xy_power(const ParamPolynomial& f, const ParamPolynomial& g, int r);

struct LiftWitness {
  int a = 0;
  Polynomial g_inf;
  // g1 = w^a gbar, h = y w^a k, h1 = y w^(2a) kbar
  Polynomial gbar, k, kbar, g1, h, h1;
  std::vector<Polynomial> p;  // g_inf = sum p_j w^(2m-2-j)
  std::vector<Polynomial> q;  // gbar = sum_{j<=m} q_j w^(m-j)
  std::vector<Polynomial> c;  // k = sum_{j<=m-3} c_j w^(2m-3-j)
  std::vector<Polynomial> e;  // f = -gbar k = sum e_j w^(3m-3-j) + ...
  std::vector<Polynomial> b;  // kbar = sum_{i<=m-3} b_i w^(m-1-i)

  explicit LiftWitness(const Field& field);
};

// Requirements on g0 shared by construct_lift and surface_equation: weight 3m,
// z^m coefficient 1, no term in (x,y)^l and a nonzero x^(3(m-1)) z term.
// Throws PreconditionError otherwise.
void require_lift_input(const Polynomial& g0, const ParamSet& params);

// Needs params.a.  Throws ConstructionFailure if a step of the recipe yields
// something of the wrong shape.
LiftWitness construct_lift(const Polynomial& g0, const ParamSet& params);

// [t^k] of (g_inf + t h)(x - t y (g1 + t h1)) - (x g_inf - t y w^(a+d-1)),
// reduced mod (x,y)^d, for k = 0..3.  g_inf is recomputed from g0.
std::array<Polynomial, 4> congruence_residuals(const LiftWitness& wit, const Polynomial& g0, const ParamSet& params);

bool verify_congruence(const LiftWitness& wit, const Polynomial& g0, const ParamSet& params);

struct SurfaceData {
  Polynomial G;  // degree d-1 in k[X,Y,Z,W]
  ParamPolynomial F;
  std::optional<FieldElement> t;  // empty: symbolic
  std::optional<Polynomial> F_at_t;
  int degree = 0;
  int type = 0;
  bool contains_line = false;  // F lies in (X, Y)
};

// F = X G Z^a - t Y W^(a+d-1).  A numeric t must be nonzero.
SurfaceData surface_equation(const Polynomial& g0, const ParamSet& params,
                             const std::optional<FieldElement>& t = std::nullopt);

}  // namespace maxgenus
