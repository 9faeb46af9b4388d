#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "maxgenus/field.hpp"

namespace maxgenus {

struct ModpElimination {
  std::size_t rank = 0;
  // Determinant for square input (0 when singular); 0 for rectangular input.
  std::uint32_t det = 0;
};

// Gaussian elimination over F_p on a dense row-major matrix with entries in
// [0, p).  Row updates are accumulated in 64 bits and reduced only when the
// accumulated bound could overflow.
ModpElimination eliminate_mod_p(const std::vector<std::uint32_t>& entries, std::size_t rows, std::size_t cols,
                                std::uint32_t p);

struct BareissElimination {
  std::size_t rank = 0;
  // Determinant for square input, 0 otherwise.
  mpz_class det = 0;
};

// Fraction-free elimination over Z.
BareissElimination bareiss(std::vector<mpz_class> entries, std::size_t rows, std::size_t cols);

// Dense matrix over an arbitrary Field.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Rows [begin, end) as a new matrix.
  DenseMatrix row_block(std::size_t begin, std::size_t end) const;

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

std::size_t rank(const DenseMatrix& a);

// Basis of {v : a v = 0}.
std::vector<std::vector<FieldElement>> nullspace(const DenseMatrix& a);

// Incremental row-echelon basis: feed rows one at a time and observe the rank.
class RowEchelon {
 public:
  RowEchelon(Field field, std::size_t cols) : field_(field), cols_(cols) {}

  // Returns true when the row is independent of the rows inserted so far.
  bool insert(std::vector<FieldElement> row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  Field field_;
  std::size_t cols_;
  std::vector<std::vector<FieldElement>> basis_;  // each row normalised at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace maxgenus
