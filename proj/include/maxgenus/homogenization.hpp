#pragma once

#include <vector>

#include "maxgenus/polynomial.hpp"

namespace maxgenus {

// G(X,Y,Z,W) = W^(d-1) g0(X/W, Y/W, Z/W).  Throws DegreeOverflow if a term of
// g0 has standard degree above d-1 and AmbientMismatch unless g0 is in k[x,y,z].
Polynomial homogenize(const Polynomial& g0, int d);

// g_inf(x,y,w) = G(x,y,1,w).
Polynomial dehomogenize_at_z(const Polynomial& G);

// Coefficients c_0..c_D in k[x,y] of f = sum_j c_j w^(D-j), D the top
// w-exponent of f.  The zero polynomial yields a single zero coefficient.
std::vector<Polynomial> w_coefficients(const Polynomial& f);

// Inverse of w_coefficients: sum_j c_j w^(top-j).
Polynomial from_w_coefficients(const std::vector<Polynomial>& coeffs, int top, const Field& field);

// Unique monomial of weight 3m outside (x,y)^(3m-2) with standard degree
// 3m-2, as found by exhaustive enumeration (x^(3(m-1)) z).
std::vector<Monomial> top_degree_weight_monomials(int m);

}  // namespace maxgenus
