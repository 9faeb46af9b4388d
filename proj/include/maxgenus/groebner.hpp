#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "maxgenus/params.hpp"
#include "maxgenus/parallel.hpp"
#include "maxgenus/polynomial.hpp"

namespace maxgenus {

enum class TermOrderKind { GradedLex, GradedRevLex };

// Degree-compatible term order on k[x,y,z]: total degree first, ties broken
// lexicographically or reverse-lexicographically along `precedence`
// (slots listed from most to least significant variable).
struct TermOrder {
  TermOrderKind kind = TermOrderKind::GradedLex;
  std::array<int, 3> precedence{0, 1, 2};

  static TermOrder grlex() { return {}; }
  static TermOrder grevlex() { return {TermOrderKind::GradedRevLex, {0, 1, 2}}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  std::string name() const;
};

Monomial leading_monomial(const Polynomial& f, const TermOrder& order);

// Generators x^l, x^(l-1) y, ..., y^l of (x,y)^l.
std::vector<Polynomial> xy_power_generators(const Field& field, int ell);

// Fully reduced remainder of f modulo `basis`: no term of the result is
// divisible by a leading monomial of the basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& order);

struct GroebnerBasis {
  std::vector<Polynomial> generators;  // monic, WT-homogeneous, ascending leads
  TermOrder order;
  int weight_cap = 0;

  std::vector<Monomial> leads() const;
};

// Buchberger's algorithm for WT-homogeneous generators, processing S-pairs by
// increasing WT-weight and discarding pairs above weight_cap.  The leading
// monomials of the result generate the initial ideal in every weight up to
// the cap.  Throws PreconditionError on a non-homogeneous generator.
GroebnerBasis buchberger_truncated(const std::vector<Polynomial>& gens, const TermOrder& order, int weight_cap,
                                   const Deadline& deadline = {});

struct InitialIdealVerdict {
  // True iff no leading monomial has standard degree <= l-1, i.e. the initial
  // ideal of (x,y)^l + (g) is (x,y,z)^l.
  bool good = false;
  std::size_t basis_size = 0;
  std::map<int, std::size_t> leads_by_degree;
  std::vector<Monomial> low_degree_leads;  // degree <= l-1
};

// Runs the truncated computation on (x,y)^l + (g) with cap 3(l-1).  Any member
// of degree <= l-1 is WT-homogeneous of weight <= 3(l-1), so it forces a
// leading monomial of degree <= l-1 below the cap.
InitialIdealVerdict initial_ideal_verdict(const Polynomial& g, const ParamSet& params,
                                          const TermOrder& order = TermOrder::grlex(), const Deadline& deadline = {});

}  // namespace maxgenus
