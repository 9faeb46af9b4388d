#pragma once

#include <string>
#include <vector>

#include "maxgenus/monomial.hpp"
#include "maxgenus/params.hpp"
#include "maxgenus/polynomial.hpp"

namespace maxgenus {

// R = k[x,y,z]/(x,y)^l with l = 3m-2, graded by WT.  M is R modulo the span of
// monomials of standard degree < l.
enum class BasisSpace { RShifted, M };

// Monomial basis of one graded piece, in decreasing grlex order (x > y > z).
struct GradedBasis {
  int weight = 0;
  BasisSpace space = BasisSpace::RShifted;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
};

// Every monomial x^a y^b z^c of WT-weight n, in decreasing grlex order.
std::vector<Monomial> monomials_of_weight(int n);

// Basis of R[-3m]_n: x^i y^j z^k with i+j < l and i+2j+3k = n-3m.
GradedBasis basis_R_shifted(const ParamSet& params, int n);
// Basis of M_n: x^a y^b z^c with a+b < l, a+b+c >= l and a+2b+3c = n.
GradedBasis basis_M(const ParamSet& params, int n);

// psi(x^i y^j z^k) = x^(l-i-j-1) y^i z^(1+j+k); DomainError unless i+j < l.
Monomial psi(const Monomial& mono, const ParamSet& params);
// psi^-1(x^a y^b z^c) = x^b y^(l-1-a-b) z^(a+b+c-l); DomainError outside M.
Monomial psi_inverse(const Monomial& mono, const ParamSet& params);

struct HilbertRow {
  int weight = 0;
  long dim_S = 0;  // k[x,y,z]/((x,y)^l + (g))
  long dim_T = 0;  // k[x,y,z]/(x,y,z)^l
};

// Weights 0..max_weight (default: 9(m-1)).  g must be WT-homogeneous of weight
// 3m with z^m coefficient 1, otherwise PreconditionError.
std::vector<HilbertRow> hilbert_table(const ParamSet& params, const Polynomial& g, int max_weight = -1);
std::string hilbert_csv(const std::vector<HilbertRow>& rows);

// Shared precondition checks for a weight-3m polynomial g in k[x,y,z].
void require_weight_3m(const Polynomial& g, const ParamSet& params);
FieldElement z_power_coefficient(const Polynomial& g, const ParamSet& params);

}  // namespace maxgenus
