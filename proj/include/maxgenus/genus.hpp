#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace maxgenus {

// C(n, r), zero when n < r or r < 0.
std::int64_t binom(std::int64_t n, std::int64_t r);

// P(d, s): (s-1)d + 1 - C(s+2,3) for s <= d <= 2s, C(d-s,2) - C(s-1,3) for
// d >= 2s+1.  DomainError unless d >= s >= 1.
std::int64_t max_genus_bound(std::int64_t d, std::int64_t s);

// Arithmetic genus of a primitive multiple line of multiplicity d and type e.
std::int64_t primitive_genus(std::int64_t d, std::int64_t e);

// chi F(n) = (n - e - (2d-1)/3) C(d,2).
mpq_class hilbert_poly_F(std::int64_t d, std::int64_t e, std::int64_t n);
// Root a+d-1 of chi F for e = a+m-1, d = 3m-1.  DomainError unless d = 2 mod 3.
std::int64_t n0(std::int64_t d, std::int64_t a);

struct Component {
  std::string kind;  // "primitive", "line" or "double line"
  std::int64_t degree = 0;
  std::int64_t type = 0;
  std::int64_t genus = 0;
};

struct Assembly {
  std::int64_t d = 0;
  std::vector<Component> components;
  std::int64_t genus = 0;  // disjoint union of the components
  std::int64_t bound = 0;  // P(d, d)
  bool matches() const { return genus == bound; }
};

// Curve of degree d reaching P(d,d), chosen by d mod 3.  DomainError for d < 5.
Assembly conjectureA_assembly(std::int64_t d);

std::int64_t biliaison_genus(std::int64_t gY, std::int64_t degY, std::int64_t t);
std::int64_t union_genus(std::int64_t pX, std::int64_t pY, std::int64_t meet_length);

// Genus of the union D u L, deg D = d-1 with genus P(d-1,s), meeting in length s.
std::int64_t line_extension_genus(std::int64_t d, std::int64_t s);
// Y of degree s and genus P(s,s) union a plane curve of degree k = d-s meeting
// Y in length ks - k(k-1)/2.
std::int64_t plane_extension_genus(std::int64_t d, std::int64_t s);
// Y of degree s-1 and genus P(s-1,s-1) union a plane curve of degree k+1
// meeting Y in length (s-1) - (k-s)(k-s+1)/2, d = s+k.  That length is
// negative unless k is close to s; DomainError then.
std::int64_t plane_union_genus(std::int64_t s, std::int64_t k);

struct BoundRow {
  std::int64_t d, s, bound;
};
// Rows with s in [s_min, s_max] and s <= d <= d_max.
std::vector<BoundRow> bounds_table(std::int64_t s_min, std::int64_t s_max, std::int64_t d_max);
std::string bounds_csv(const std::vector<BoundRow>& rows);

}  // namespace maxgenus
