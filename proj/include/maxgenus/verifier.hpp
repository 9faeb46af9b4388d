#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxgenus/field.hpp"
#include "maxgenus/polynomial.hpp"

namespace maxgenus {

enum class Method { Phi, Direct, Groebner };

std::string method_name(Method m);
// "phi", "direct", "groebner" or "all".  Throws ParseError otherwise.
std::vector<Method> parse_methods(const std::string& text);

// Monic in z^m; every other term x^a y^b z^c has a+2b+3c = 3m, c < m and
// a+b <= 3(m-1).  Coefficients are uniform in F_p, or n/d with |n| <= 9 and
// 1 <= d <= 9 over QQ.  The x^(3(m-1)) z coefficient is redrawn until nonzero.
Polynomial random_g(int m, const Field& field, std::uint64_t seed);

// Monomials other than z^m that random_g may use, grlex-descending.
std::vector<Monomial> random_g_support(int m);

// Seed for one (m, trial) task, derived from the run seed.
std::uint64_t trial_seed(std::uint64_t seed, int m, int trial);

struct VerifyConfig {
  int m_min = 2;
  int m_max = 2;
  std::optional<std::uint32_t> prime = 32003;  // empty: QQ
  std::uint64_t seed = 1;
  int trials = 3;
  std::vector<Method> methods{Method::Phi};
  // Add the direct oracle for m <= 5 when it is not selected already.
  bool cross_check_small_m = false;
  unsigned jobs = 1;
  std::optional<long> timeout_ms;

  // Throws PreconditionError when the configuration is unusable.
  void validate() const;
  Field field() const;
};

struct TrialRecord {
  int m = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string g;
  std::map<std::string, bool> verdicts;
  std::vector<int> singular_weights;
  std::vector<std::size_t> block_dims;
  std::optional<std::string> witness;
  bool timed_out = false;
  double elapsed_ms = 0;

  // Completed, and every method reports GOOD.
  bool good() const;
};

struct VerificationReport {
  VerifyConfig config;
  std::vector<TrialRecord> records;  // sorted by (m, trial)
  std::vector<int> verified_m;
  std::vector<int> inconclusive_m;

  // 0 when every m has a GOOD trial, 1 otherwise.
  int exit_code() const { return inconclusive_m.empty() ? 0 : 1; }
};

// Throws InvariantViolation, with the input and every method's diagnostics in
// the message, if two methods disagree on a trial.
VerificationReport run_verify(const VerifyConfig& config);

nlohmann::json report_json(const VerificationReport& report, bool with_timing = true);
std::string report_csv(const VerificationReport& report, bool with_timing = true);

}  // namespace maxgenus
