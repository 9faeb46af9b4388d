#pragma once

#include <optional>
#include <vector>

#include "maxgenus/linalg.hpp"
#include "maxgenus/params.hpp"
#include "maxgenus/parallel.hpp"
#include "maxgenus/polynomial.hpp"

namespace maxgenus {

// Weight-n piece of I = (x,y)^l + (g) as a spanning set of column vectors in
// the monomial basis of k[x,y,z]_n.  Rows are in decreasing grlex order, so
// all rows of degree >= l ("high") precede the rows of degree <= l-1 ("low").
struct WeightSlice {
  int weight = 0;
  std::vector<Monomial> rows;
  std::size_t high_rows = 0;
  DenseMatrix matrix;

  WeightSlice(Field field, int n) : weight(n), matrix(field, 0, 0) {}
};

// Columns: every weight-n monomial in (x,y)^l, then g*mu for every monomial
// mu of weight n-3m.
WeightSlice build_weight_slice(const Polynomial& g, const ParamSet& params, int n);

struct SliceResult {
  int weight = 0;
  std::size_t rank_high = 0;
  std::size_t rank_full = 0;

  // The column space meets the span of the low rows iff projecting away the
  // low rows loses rank.
  bool intersects() const { return rank_full > rank_high; }
};

SliceResult analyze_slice(const WeightSlice& slice);

// Nonzero element of I of standard degree <= l-1 inside this slice, if any.
std::optional<Polynomial> slice_witness(const WeightSlice& slice);

struct LowDegreeVerdict {
  // True when I contains a nonzero polynomial of degree <= l-1 (g is bad).
  bool member_exists = false;
  std::vector<int> checked_weights;
  std::vector<int> intersecting_weights;
  std::vector<SliceResult> slices;
  std::optional<Polynomial> witness;
};

struct DirectOptions {
  unsigned jobs = 1;
  bool want_witness = true;
  // Stop at the first intersecting weight (scanned in increasing order).
  bool early_exit = false;
  Deadline deadline{};
};

// Scans weights 3m..9(m-1).  Requires a nonzero z^m coefficient.
LowDegreeVerdict low_degree_member_verdict(const Polynomial& g, const ParamSet& params,
                                           const DirectOptions& options = {});

}  // namespace maxgenus
