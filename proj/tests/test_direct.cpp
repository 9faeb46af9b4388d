#include <doctest.h>

#include <random>

#include "maxgenus/direct_oracle.hpp"
#include "maxgenus/errors.hpp"
#include "maxgenus/groebner.hpp"
#include "maxgenus/phi_checker.hpp"
#include "maxgenus/verifier.hpp"
#include "support.hpp"

using namespace maxgenus;
using testing::P;

namespace {

bool in_ideal(const Polynomial& f, const Polynomial& g, const ParamSet& p) {
  auto gens = xy_power_generators(g.field(), p.ell);
  gens.push_back(g);
  auto gb = buchberger_truncated(gens, TermOrder::grlex(), p.weight_cap());
  return normal_form(f, gb.generators, TermOrder::grlex()).is_zero();
}

}  // namespace

TEST_CASE("direct verdicts for m = 2") {
  auto f5 = Field::prime(5);
  auto p = ParamSet::from_m(2);
  auto bad = low_degree_member_verdict(P("z^2", f5), p);
  CHECK(bad.member_exists);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->degree() <= p.ell - 1);
  CHECK_FALSE(low_degree_member_verdict(P("z^2 + x^3*z + x*y*z + y^3", f5), p).member_exists);
  CHECK_THROWS_AS(low_degree_member_verdict(P("x^3*z", f5), p), PreconditionError);
}

TEST_CASE("the weight-17 witness for m = 3") {
  auto f = Field::prime(32003);
  auto p = ParamSet::from_m(3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    std::array<FieldElement, 9> b;
    for (auto& v : b) v = testing::random_nonzero(f, rng);
    b[8] = f.div(f.mul(f.from_int(2), f.mul(b[2], b[6])), b[0]);
    const std::array<Monomial, 9> mons = {Monomial(0, 0, 3), Monomial(3, 0, 2), Monomial(1, 1, 2),
                                          Monomial(6, 0, 1), Monomial(4, 1, 1), Monomial(2, 2, 1),
                                          Monomial(0, 3, 1), Monomial(3, 3, 0), Monomial(1, 4, 0)};
    std::vector<Term> terms;
    for (std::size_t k = 0; k < 9; ++k) terms.push_back({mons[k], b[k]});
    auto g = Polynomial::from_terms(f, Ring::XYZ, terms);
    auto v = low_degree_member_verdict(g, p);
    CHECK(v.member_exists);
    CHECK(std::find(v.intersecting_weights.begin(), v.intersecting_weights.end(), 17) != v.intersecting_weights.end());
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->degree() <= p.ell - 1);
    CHECK(in_ideal(*v.witness, g, p));
    auto slice = build_weight_slice(g, p, 17);
    auto w17 = slice_witness(slice);
    REQUIRE(w17.has_value());
    CHECK(w17->is_wt_homogeneous(17));
    CHECK(in_ideal(*w17, g, p));
  }
}

TEST_CASE("slices are homogeneous and ordered high rows first") {
  auto f = Field::prime(32003);
  auto p = ParamSet::from_m(3);
  auto g = random_g(3, f, 5);
  for (int n = 9; n <= 18; ++n) {
    auto s = build_weight_slice(g, p, n);
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      CHECK(wt_weight(s.rows[i]) == n);
      CHECK((i < s.high_rows) == (s.rows[i].degree() >= p.ell));
    }
  }
}

TEST_CASE("property: redundant columns never change a slice verdict") {
  auto f = Field::prime(32003);
  std::mt19937_64 rng(8);
  for (int m = 2; m <= 4; ++m) {
    auto p = ParamSet::from_m(m);
    for (int i = 0; i < 5; ++i) {
      auto g = random_g(m, f, rng());
      for (int n = 3 * m; n <= p.weight_cap(); ++n) {
        auto s = build_weight_slice(g, p, n);
        auto base = analyze_slice(s);
        // append a random combination of existing columns
        DenseMatrix wider(f, s.matrix.rows(), s.matrix.cols() + 1);
        std::vector<FieldElement> mix(s.matrix.cols());
        for (auto& c : mix) c = testing::random_element(f, rng);
        auto extra = s.matrix.apply(mix);
        for (std::size_t r = 0; r < s.matrix.rows(); ++r) {
          for (std::size_t c = 0; c < s.matrix.cols(); ++c) wider.at(r, c) = s.matrix.at(r, c);
          wider.at(r, s.matrix.cols()) = extra[r];
        }
        s.matrix = wider;
        auto again = analyze_slice(s);
        CHECK(again.rank_full == base.rank_full);
        CHECK(again.rank_high == base.rank_high);
      }
    }
  }
}

TEST_CASE("early exit reports only the weights it checked") {
  auto f = Field::prime(32003);
  auto p = ParamSet::from_m(3);
  DirectOptions opts;
  opts.early_exit = true;
  auto v = low_degree_member_verdict(P("z^3 + y^3*z", f), p, opts);
  CHECK(v.member_exists);
  CHECK(v.checked_weights.back() == v.intersecting_weights.front());
  CHECK(v.checked_weights.size() < static_cast<std::size_t>(p.weight_cap() - 3 * 3 + 1));
}
