#include "maxgenus/phi_checker.hpp"

#include <algorithm>
#include <unordered_map>

#include "maxgenus/errors.hpp"
#include "maxgenus/linalg.hpp"

namespace maxgenus {

FieldElement GradedBlockMatrix::entry(std::size_t row, std::size_t col, const Field& field) const {
  for (const auto& [r, v] : columns[col])
    if (r == row) return v;
  return field.zero();
}

GradedBlockMatrix build_phi_block(const Polynomial& g, const ParamSet& params, int n) {
  require_weight_3m(g, params);
  GradedBlockMatrix block;
  block.weight = n;
  block.rows = basis_M(params, n);
  block.cols = basis_R_shifted(params, n);
  if (block.rows.size() != block.cols.size())
    throw InvariantViolation("phi block at weight " + std::to_string(n) + " is " + std::to_string(block.rows.size()) +
                             "x" + std::to_string(block.cols.size()));

  std::unordered_map<std::uint64_t, std::size_t> row_index;
  row_index.reserve(block.rows.size());
  for (std::size_t i = 0; i < block.rows.size(); ++i) row_index.emplace(block.rows.monomials[i].key(), i);

  block.columns.resize(block.cols.size());
  for (std::size_t j = 0; j < block.cols.size(); ++j) {
    const Monomial& nu = block.cols.monomials[j];
    auto& column = block.columns[j];
    for (const auto& t : g.terms()) {
      Monomial mu = t.mono * nu;
      // zero in R, or killed by the projection R -> M
      if (mu.xy_degree() >= params.ell || mu.degree() < params.ell) continue;
      auto it = row_index.find(mu.key());
      if (it == row_index.end())
        throw InvariantViolation("phi block: image monomial " + to_string(mu, Ring::XYZ) + " not in M_" +
                                 std::to_string(n));
      column.emplace_back(it->second, t.coeff);
    }
    std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return block;
}

BlockRecord analyze_block(const GradedBlockMatrix& block, const Field& field) {
  BlockRecord rec;
  rec.weight = block.weight;
  rec.dim = block.dim();
  const std::size_t n = rec.dim;
  if (n == 0) {
    if (field.is_prime_field()) rec.det = field.one();
    return rec;
  }
  if (field.is_prime_field()) {
    std::vector<std::uint32_t> dense(n * n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [i, v] : block.columns[j]) dense[i * n + j] = field.residue(v);
    auto elim = eliminate_mod_p(dense, n, n, field.characteristic());
    rec.rank = elim.rank;
    rec.det = field.from_residue(elim.det);
    return rec;
  }
  // Clear denominators column by column; column scaling preserves the rank.
  std::vector<mpz_class> dense(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    mpz_class den = 1;
    for (const auto& [i, v] : block.columns[j]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), field.rational(v).get_den_mpz_t());
    for (const auto& [i, v] : block.columns[j]) {
      const mpq_class& q = field.rational(v);
      dense[i * n + j] = q.get_num() * (den / q.get_den());
    }
  }
  rec.rank = bareiss(std::move(dense), n, n).rank;
  return rec;
}

PhiVerdict phi_iso_verdict(const Polynomial& g, const ParamSet& params, const PhiOptions& options) {
  require_weight_3m(g, params);
  if (z_power_coefficient(g, params).is_zero())
    throw PreconditionError("phi_iso_verdict requires a nonzero coefficient of z^m");
  const int first = params.g_weight();
  const int last = options.max_weight < 0 ? params.weight_cap() : options.max_weight;
  const std::size_t count = last >= first ? static_cast<std::size_t>(last - first + 1) : 0;

  PhiVerdict verdict;
  verdict.blocks.resize(count);
  parallel_for(count, options.jobs, [&](std::size_t i) {
    options.deadline.check();
    auto block = build_phi_block(g, params, first + static_cast<int>(i));
    verdict.blocks[i] = analyze_block(block, g.field());
  });
  for (const auto& rec : verdict.blocks)
    if (!rec.invertible()) verdict.singular_weights.push_back(rec.weight);
  verdict.good = verdict.singular_weights.empty();
  return verdict;
}

}  // namespace maxgenus
