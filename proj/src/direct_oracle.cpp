#include "maxgenus/direct_oracle.hpp"

#include <unordered_map>

#include "maxgenus/errors.hpp"
#include "maxgenus/graded_basis.hpp"

namespace maxgenus {

WeightSlice build_weight_slice(const Polynomial& g, const ParamSet& params, int n) {
  require_weight_3m(g, params);
  const Field& k = g.field();
  WeightSlice slice(k, n);
  slice.rows = monomials_of_weight(n);  // grlex-descending, hence degree-descending
  std::unordered_map<std::uint64_t, std::size_t> row_index;
  for (std::size_t i = 0; i < slice.rows.size(); ++i) {
    row_index.emplace(slice.rows[i].key(), i);
    if (slice.rows[i].degree() >= params.ell) slice.high_rows = i + 1;
  }

  std::vector<std::vector<std::pair<std::size_t, FieldElement>>> columns;
  for (std::size_t i = 0; i < slice.rows.size(); ++i)
    if (slice.rows[i].xy_degree() >= params.ell) columns.push_back({{i, k.one()}});
  for (const auto& mu : monomials_of_weight(n - params.g_weight())) {
    std::vector<std::pair<std::size_t, FieldElement>> col;
    for (const auto& t : g.terms()) col.emplace_back(row_index.at((t.mono * mu).key()), t.coeff);
    columns.push_back(std::move(col));
  }

  slice.matrix = DenseMatrix(k, slice.rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (auto& [i, v] : columns[j]) slice.matrix.at(i, j) = v;
  return slice;
}

SliceResult analyze_slice(const WeightSlice& slice) {
  SliceResult res;
  res.weight = slice.weight;
  const DenseMatrix& a = slice.matrix;
  RowEchelon echelon(a.field(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<FieldElement> row(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a.at(i, j);
    echelon.insert(std::move(row));
    if (i + 1 == slice.high_rows) res.rank_high = echelon.rank();
  }
  res.rank_full = echelon.rank();
  return res;
}

std::optional<Polynomial> slice_witness(const WeightSlice& slice) {
  const DenseMatrix& a = slice.matrix;
  const Field& k = a.field();
  const DenseMatrix high = a.row_block(0, slice.high_rows);
  const DenseMatrix low = a.row_block(slice.high_rows, a.rows());
  for (const auto& v : nullspace(high)) {
    auto image = low.apply(v);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < image.size(); ++i)
      if (!image[i].is_zero()) terms.push_back(Term{slice.rows[slice.high_rows + i], image[i]});
    if (!terms.empty()) return Polynomial::from_terms(k, Ring::XYZ, std::move(terms));
  }
  return std::nullopt;
}

LowDegreeVerdict low_degree_member_verdict(const Polynomial& g, const ParamSet& params, const DirectOptions& options) {
  require_weight_3m(g, params);
  if (z_power_coefficient(g, params).is_zero())
    throw PreconditionError("low_degree_member_verdict requires a nonzero coefficient of z^m");
  const int first = params.g_weight();
  const int last = params.weight_cap();

  LowDegreeVerdict verdict;
  if (options.early_exit) {
    for (int n = first; n <= last; ++n) {
      options.deadline.check();
      auto slice = build_weight_slice(g, params, n);
      auto res = analyze_slice(slice);
      verdict.checked_weights.push_back(n);
      verdict.slices.push_back(res);
      if (res.intersects()) {
        verdict.intersecting_weights.push_back(n);
        if (options.want_witness) verdict.witness = slice_witness(slice);
        break;
      }
    }
  } else {
    const std::size_t count = static_cast<std::size_t>(last - first + 1);
    verdict.slices.resize(count);
    parallel_for(count, options.jobs, [&](std::size_t i) {
      options.deadline.check();
      verdict.slices[i] = analyze_slice(build_weight_slice(g, params, first + static_cast<int>(i)));
    });
    for (const auto& s : verdict.slices) {
      verdict.checked_weights.push_back(s.weight);
      if (s.intersects()) verdict.intersecting_weights.push_back(s.weight);
    }
    if (options.want_witness && !verdict.intersecting_weights.empty())
      verdict.witness = slice_witness(build_weight_slice(g, params, verdict.intersecting_weights.front()));
  }
  verdict.member_exists = !verdict.intersecting_weights.empty();
  if (verdict.member_exists && options.want_witness && !verdict.witness)
    throw InvariantViolation("intersecting slice produced no witness");
  return verdict;
}

}  // namespace maxgenus
