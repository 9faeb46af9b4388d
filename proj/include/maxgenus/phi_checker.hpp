#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maxgenus/graded_basis.hpp"
#include "maxgenus/parallel.hpp"
#include "maxgenus/polynomial.hpp"

namespace maxgenus {

// Matrix of (phi_g)_n : R[-3m]_n -> M_n, phi_g(h) = [g h].
//
// Columns are indexed by the source basis R[-3m]_n and rows by M_n, so the
// matrix is the transpose of the row-vector convention (images written as
// rows); determinants agree up to sign.
struct GradedBlockMatrix {
  int weight = 0;
  GradedBasis rows;  // basis of M_n
  GradedBasis cols;  // basis of R[-3m]_n
  // Sparse columns: (row index, value) sorted by row index.
  std::vector<std::vector<std::pair<std::size_t, FieldElement>>> columns;

  std::size_t dim() const { return cols.size(); }
  FieldElement entry(std::size_t row, std::size_t col, const Field& field) const;
};

struct BlockRecord {
  int weight = 0;
  std::size_t dim = 0;
  std::size_t rank = 0;
  // Recorded over F_p only.
  std::optional<FieldElement> det;

  bool invertible() const { return rank == dim; }
};

struct PhiVerdict {
  bool good = false;
  std::vector<int> singular_weights;  // ascending
  std::vector<BlockRecord> blocks;    // ascending weight
};

struct PhiOptions {
  // Last weight scanned; -1 means 9(m-1).
  int max_weight = -1;
  unsigned jobs = 1;
  Deadline deadline{};
};

// Throws PreconditionError unless g is WT-homogeneous of weight 3m in k[x,y,z],
// and InvariantViolation if the block is not square.
GradedBlockMatrix build_phi_block(const Polynomial& g, const ParamSet& params, int n);

// Rank (and, over F_p, determinant) of one block.
BlockRecord analyze_block(const GradedBlockMatrix& block, const Field& field);

// Decides whether phi_g is an isomorphism by checking every block with
// 3m <= n <= max_weight.  Requires a nonzero z^m coefficient.
PhiVerdict phi_iso_verdict(const Polynomial& g, const ParamSet& params, const PhiOptions& options = {});

}  // namespace maxgenus
