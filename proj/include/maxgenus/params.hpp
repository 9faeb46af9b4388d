#pragma once

#include <optional>

namespace maxgenus {

// Integer frame of a construction: d = 3m - 1, l = 3m - 2 = d - 1 and, when a
// shift a is given, the type e = a + m - 1.
struct ParamSet {
  int m = 2;
  int d = 5;
  int ell = 4;
  std::optional<int> a;

  // Throws DomainError for m < 2 or a < 0.
  static ParamSet from_m(int m, std::optional<int> a = std::nullopt);

  // Throws DomainError when no shift was given.
  int e() const;
  int shift() const;

  // Weight of g.
  int g_weight() const { return 3 * m; }
  // 9(m-1) = 3(l-1): the largest weight of a monomial of degree l-1, and the
  // top of the range of graded pieces that has to be checked.
  int weight_cap() const { return 9 * (m - 1); }
};

}  // namespace maxgenus
