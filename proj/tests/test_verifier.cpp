#include <doctest.h>

#include <set>

#include "maxgenus/errors.hpp"
#include "maxgenus/verifier.hpp"
#include "support.hpp"

using namespace maxgenus;

TEST_CASE("random_g support") {
  auto f = Field::prime(32003);
  auto g = random_g(2, f, 1);
  std::set<Monomial> allowed = {Monomial(0, 0, 2), Monomial(3, 0, 1), Monomial(1, 1, 1), Monomial(0, 3, 0)};
  for (const auto& t : g.terms()) CHECK(allowed.count(t.mono) == 1);
  CHECK(f.is_one(g.coefficient(Monomial(0, 0, 2))));
  CHECK(random_g_support(2).size() == 3);

  std::set<Monomial> allowed3 = {Monomial(0, 0, 3), Monomial(3, 0, 2), Monomial(1, 1, 2),
                                 Monomial(6, 0, 1), Monomial(4, 1, 1), Monomial(2, 2, 1),
                                 Monomial(0, 3, 1), Monomial(3, 3, 0), Monomial(1, 4, 0)};
  CHECK(random_g_support(3).size() == 8);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g3 = random_g(3, f, seed);
    for (const auto& t : g3.terms()) CHECK(allowed3.count(t.mono) == 1);
  }
  CHECK_THROWS_AS(random_g(1, f, 1), DomainError);
}

TEST_CASE("random_g is deterministic and keeps the x^(3(m-1)) z term") {
  for (auto field : {Field::prime(32003), Field::prime(2), Field::rationals()})
    for (int m = 2; m <= 10; ++m)
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_g(m, field, seed);
        CHECK(g == random_g(m, field, seed));
        CHECK_FALSE(g.coefficient(Monomial(3 * (m - 1), 0, 1)).is_zero());
        CHECK(g.is_wt_homogeneous(3 * m));
        for (const auto& t : g.terms()) {
          CHECK(t.mono.xy_degree() <= 3 * (m - 1));
          if (!(t.mono == Monomial(0, 0, m))) CHECK(t.mono[2] < m);
        }
      }
}

TEST_CASE("method names") {
  CHECK(parse_methods("all").size() == 3);
  CHECK(parse_methods("groebner") == std::vector<Method>{Method::Groebner});
  CHECK_THROWS_AS(parse_methods("magic"), ParseError);
}

TEST_CASE("config validation") {
  VerifyConfig c;
  c.trials = 0;
  CHECK_THROWS_AS(run_verify(c), PreconditionError);
  c = {};
  c.methods.clear();
  CHECK_THROWS_AS(run_verify(c), PreconditionError);
  c = {};
  c.m_min = 1;
  CHECK_THROWS_AS(run_verify(c), PreconditionError);
  c = {};
  c.prime = 32004;
  CHECK_THROWS_AS(run_verify(c), InvalidField);
}

TEST_CASE("small sweep with every method") {
  VerifyConfig c;
  c.m_min = 2;
  c.m_max = 4;
  c.trials = 2;
  c.methods = parse_methods("all");
  auto r = run_verify(c);
  CHECK(r.records.size() == 6);
  CHECK(r.verified_m == std::vector<int>{2, 3, 4});
  CHECK(r.exit_code() == 0);
  for (const auto& rec : r.records) CHECK(rec.verdicts.size() == 3);
}

TEST_CASE("cross check adds the direct oracle for small m") {
  VerifyConfig c;
  c.m_min = 5;
  c.m_max = 6;
  c.trials = 1;
  c.cross_check_small_m = true;
  auto r = run_verify(c);
  CHECK(r.records[0].verdicts.count("direct") == 1);
  CHECK(r.records[1].verdicts.count("direct") == 0);
}

TEST_CASE("report is independent of parallelism") {
  VerifyConfig c;
  c.m_min = 2;
  c.m_max = 7;
  c.trials = 3;
  c.seed = 99;
  auto one = report_json(run_verify(c), false);
  c.jobs = 4;
  auto four = report_json(run_verify(c), false);
  CHECK(four["records"] == one["records"]);
  CHECK(four["summary"] == one["summary"]);
  CHECK(report_csv(run_verify(c), false) == report_csv(run_verify(c), false));
}

TEST_CASE("report schema") {
  VerifyConfig c;
  c.m_min = 2;
  c.m_max = 3;
  c.trials = 1;
  c.methods = {Method::Phi, Method::Direct};
  auto j = report_json(run_verify(c));
  REQUIRE(j.contains("config"));
  REQUIRE(j.contains("summary"));
  REQUIRE(j["records"].size() == 2);
  for (const auto& rec : j["records"])
    for (const char* key : {"m", "trial", "seed", "prime", "g", "verdicts", "singular_weights", "block_dims", "elapsed_ms"})
      CHECK(rec.contains(key));
  CHECK(j["records"][0]["block_dims"] == nlohmann::json::array({1, 1, 2, 3}));
  CHECK(j["summary"]["verified_m"] == nlohmann::json::array({2, 3}));
}

TEST_CASE("a tiny timeout makes trials inconclusive") {
  VerifyConfig c;
  c.m_min = 14;
  c.m_max = 14;
  c.trials = 1;
  c.timeout_ms = 1;
  c.methods = {Method::Direct};
  auto r = run_verify(c);
  CHECK(r.records[0].timed_out);
  CHECK(r.inconclusive_m == std::vector<int>{14});
  CHECK(r.exit_code() == 1);
}

TEST_CASE("rationals") {
  VerifyConfig c;
  c.m_min = 2;
  c.m_max = 3;
  c.trials = 4;
  c.prime.reset();
  c.methods = parse_methods("all");
  auto r = run_verify(c);
  CHECK(r.exit_code() == 0);
  CHECK(report_json(r)["records"][0]["prime"].is_null());
}

TEST_CASE("random_g over QQ has no zero coefficients") {
  auto q = Field::rationals();
  for (int m = 2; m <= 8; ++m)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto g = random_g(m, q, seed);
      CHECK(g.size() == random_g_support(m).size() + 1);
    }
}
