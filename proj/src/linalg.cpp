#include "maxgenus/linalg.hpp"

#include <algorithm>
#include <limits>

#include "maxgenus/errors.hpp"

namespace maxgenus {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t0 = 0, t1 = 1, r0 = p, r1 = a;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw DivisionByZero();
  return static_cast<std::uint32_t>(t0 < 0 ? t0 + p : t0);
}

}  // namespace

ModpElimination eliminate_mod_p(const std::vector<std::uint32_t>& entries, std::size_t rows, std::size_t cols,
                                std::uint32_t p) {
  if (entries.size() != rows * cols) throw InvariantViolation("eliminate_mod_p: entry count mismatch");
  const std::uint64_t pm1 = p - 1;
  // Number of lazy updates a row can absorb before it must be reduced.
  const std::uint64_t budget = (std::numeric_limits<std::uint64_t>::max() - p) / (pm1 * pm1 == 0 ? 1 : pm1 * pm1);

  std::vector<std::uint64_t> a(entries.begin(), entries.end());
  std::vector<std::uint64_t> pending(rows, 0);
  std::vector<std::uint32_t> pivot_row(cols);

  auto row = [&](std::size_t r) { return a.data() + r * cols; };
  auto reduce_row = [&](std::size_t r, std::size_t from) {
    std::uint64_t* x = row(r);
    for (std::size_t j = from; j < cols; ++j) x[j] %= p;
    pending[r] = 0;
  };

  ModpElimination out;
  std::uint64_t det = 1;
  bool negate = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      row(i)[c] %= p;
      if (row(i)[c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) {
      det = 0;
      continue;
    }
    if (piv != r) {
      std::swap_ranges(row(piv) + c, row(piv) + cols, row(r) + c);
      std::swap(pending[piv], pending[r]);
      negate = !negate;
    }
    reduce_row(r, c);
    const std::uint64_t* pr = row(r);
    for (std::size_t j = c; j < cols; ++j) pivot_row[j] = static_cast<std::uint32_t>(pr[j]);
    const std::uint32_t pv = pivot_row[c];
    det = det * pv % p;
    const std::uint64_t inv = inverse_mod(pv, p);

    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t* x = row(i);
      std::uint64_t f = x[c] % p;
      if (f == 0) {
        x[c] = 0;
        continue;
      }
      if (pending[i] + 1 > budget) reduce_row(i, c);
      const std::uint32_t factor = static_cast<std::uint32_t>((p - f) * inv % p);
      for (std::size_t j = c; j < cols; ++j) x[j] += std::uint64_t{factor} * pivot_row[j];
      ++pending[i];
    }
    ++r;
  }
  out.rank = r;
  if (rows == cols && r == rows) {
    std::uint64_t d = det % p;
    out.det = static_cast<std::uint32_t>(negate && d != 0 ? p - d : d);
  }
  return out;
}

BareissElimination bareiss(std::vector<mpz_class> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw InvariantViolation("bareiss: entry count mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };
  mpz_class prev = 1;
  bool negate = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
      negate = !negate;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  BareissElimination out;
  out.rank = r;
  if (rows == cols && r == rows) out.det = negate ? mpz_class(-prev) : prev;
  return out;
}

DenseMatrix DenseMatrix::row_block(std::size_t begin, std::size_t end) const {
  DenseMatrix out(field_, end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i - begin, j) = at(i, j);
  return out;
}

std::vector<FieldElement> DenseMatrix::apply(const std::vector<FieldElement>& v) const {
  std::vector<FieldElement> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
  return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(DenseMatrix& a) {
  const Field& k = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    FieldElement inv = k.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = k.mul(a.at(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      FieldElement f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a.at(r, j).is_zero()) a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const DenseMatrix& a) {
  DenseMatrix copy = a;
  return rref(copy).size();
}

std::vector<std::vector<FieldElement>> nullspace(const DenseMatrix& a) {
  const Field& k = a.field();
  DenseMatrix e = a;
  auto pivots = rref(e);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(a.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(e.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RowEchelon::insert(std::vector<FieldElement> row) {
  if (row.size() != cols_) throw InvariantViolation("RowEchelon: row length mismatch");
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t c = pivots_[b];
    if (row[c].is_zero()) continue;
    FieldElement f = row[c];
    for (std::size_t j = c; j < cols_; ++j)
      if (!basis_[b][j].is_zero()) row[j] = field_.sub(row[j], field_.mul(f, basis_[b][j]));
  }
  std::size_t lead = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!row[j].is_zero()) {
      lead = j;
      break;
    }
  if (lead == cols_) return false;
  FieldElement inv = field_.inv(row[lead]);
  for (std::size_t j = lead; j < cols_; ++j) row[j] = field_.mul(row[j], inv);
  // keep the stored rows fully reduced against each other's pivots
  for (auto& other : basis_) {
    if (other[lead].is_zero()) continue;
    FieldElement f = other[lead];
    for (std::size_t j = lead; j < cols_; ++j)
      if (!row[j].is_zero()) other[j] = field_.sub(other[j], field_.mul(f, row[j]));
  }
  basis_.push_back(std::move(row));
  pivots_.push_back(lead);
  return true;
}

}  // namespace maxgenus
