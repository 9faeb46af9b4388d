#include "maxgenus/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "maxgenus/direct_oracle.hpp"
#include "maxgenus/errors.hpp"
#include "maxgenus/graded_basis.hpp"
#include "maxgenus/groebner.hpp"
#include "maxgenus/parallel.hpp"
#include "maxgenus/phi_checker.hpp"

namespace maxgenus {

std::string method_name(Method m) {
  switch (m) {
    case Method::Phi:
      return "phi";
    case Method::Direct:
      return "direct";
    case Method::Groebner:
      return "groebner";
  }
  return "?";
}

std::vector<Method> parse_methods(const std::string& text) {
  if (text == "phi") return {Method::Phi};
  if (text == "direct") return {Method::Direct};
  if (text == "groebner") return {Method::Groebner};
  if (text == "all") return {Method::Phi, Method::Direct, Method::Groebner};
  throw ParseError("unknown method '" + text + "'");
}

std::vector<Monomial> random_g_support(int m) {
  std::vector<Monomial> out;
  for (const auto& mono : monomials_of_weight(3 * m))
    if (mono[2] < m && mono.xy_degree() <= 3 * (m - 1)) out.push_back(mono);
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

FieldElement random_element(const Field& field, std::mt19937_64& rng) {
  if (field.is_prime_field()) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
    return field.from_residue(dist(rng));
  }
  // nonzero n/d with |n|, d <= 9
  std::uniform_int_distribution<int> num(1, 18), den(1, 9);
  int n = num(rng);
  if (n > 9) n = 9 - n;
  return field.from_fraction(n, den(rng));
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int m, int trial) {
  return splitmix64(splitmix64(seed ^ (static_cast<std::uint64_t>(m) << 32)) + static_cast<std::uint64_t>(trial));
}

Polynomial random_g(int m, const Field& field, std::uint64_t seed) {
  if (m < 2) throw DomainError("random_g needs m >= 2");
  std::mt19937_64 rng(seed);
  const Monomial special(3 * (m - 1), 0, 1);
  std::vector<Term> terms{Term{Monomial(0, 0, m), field.one()}};
  for (const auto& mono : random_g_support(m)) {
    FieldElement c = random_element(field, rng);
    while (mono == special && c.is_zero()) c = random_element(field, rng);
    terms.push_back(Term{mono, std::move(c)});
  }
  return Polynomial::from_terms(field, Ring::XYZ, std::move(terms));
}

void VerifyConfig::validate() const {
  if (m_min < 2 || m_max < m_min) throw PreconditionError("need 2 <= m-min <= m-max");
  if (trials < 1) throw PreconditionError("need at least one trial");
  if (methods.empty()) throw PreconditionError("no method selected");
  if (prime && !is_prime(*prime)) throw InvalidField(std::to_string(*prime) + " is not prime");
  if (timeout_ms && *timeout_ms <= 0) throw PreconditionError("timeout must be positive");
}

Field VerifyConfig::field() const { return prime ? Field::prime(*prime) : Field::rationals(); }

bool TrialRecord::good() const {
  if (timed_out || verdicts.empty()) return false;
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second; });
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

TrialRecord run_trial(const VerifyConfig& config, int m, int trial, unsigned inner_jobs) {
  const auto start = std::chrono::steady_clock::now();
  const Field field = config.field();
  const ParamSet params = ParamSet::from_m(m);
  TrialRecord rec;
  rec.m = m;
  rec.trial = trial;
  rec.seed = trial_seed(config.seed, m, trial);
  Polynomial g = random_g(m, field, rec.seed);
  rec.g = g.to_string();

  std::vector<Method> methods = config.methods;
  if (config.cross_check_small_m && m <= 5 && std::find(methods.begin(), methods.end(), Method::Direct) == methods.end())
    methods.push_back(Method::Direct);
  std::sort(methods.begin(), methods.end());

  const Deadline deadline = config.timeout_ms ? Deadline::after(std::chrono::milliseconds(*config.timeout_ms)) : Deadline{};
  std::ostringstream diag;
  try {
    for (Method method : methods) {
      switch (method) {
        case Method::Phi: {
          auto v = phi_iso_verdict(g, params, PhiOptions{-1, inner_jobs, deadline});
          rec.verdicts["phi"] = v.good;
          rec.singular_weights = v.singular_weights;
          for (const auto& b : v.blocks) rec.block_dims.push_back(b.dim);
          diag << "phi: singular weights [" << join(v.singular_weights) << "]\n";
          break;
        }
        case Method::Direct: {
          DirectOptions opts;
          opts.jobs = inner_jobs;
          opts.deadline = deadline;
          auto v = low_degree_member_verdict(g, params, opts);
          rec.verdicts["direct"] = !v.member_exists;
          if (v.witness) rec.witness = v.witness->to_string();
          diag << "direct: intersecting weights [" << join(v.intersecting_weights) << "]\n";
          break;
        }
        case Method::Groebner: {
          auto v = initial_ideal_verdict(g, params, TermOrder::grlex(), deadline);
          rec.verdicts["groebner"] = v.good;
          diag << "groebner: basis size " << v.basis_size << ", " << v.low_degree_leads.size()
               << " leads of degree <= " << params.ell - 1 << "\n";
          break;
        }
      }
    }
  } catch (const Timeout&) {
    rec.timed_out = true;
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!rec.verdicts.empty()) {
    const bool first = rec.verdicts.begin()->second;
    for (const auto& [name, v] : rec.verdicts)
      if (v != first) {
        std::ostringstream msg;
        msg << "methods disagree for m=" << m << " trial=" << trial << " seed=" << rec.seed << " over "
            << field.name() << "\ng = " << rec.g << "\n";
        for (const auto& [n2, v2] : rec.verdicts) msg << n2 << ": " << (v2 ? "GOOD" : "BAD") << "\n";
        msg << diag.str();
        throw InvariantViolation(msg.str());
      }
  }
  return rec;
}

}  // namespace

VerificationReport run_verify(const VerifyConfig& config) {
  config.validate();
  VerificationReport report;
  report.config = config;
  std::vector<std::pair<int, int>> tasks;
  for (int m = config.m_min; m <= config.m_max; ++m)
    for (int t = 0; t < config.trials; ++t) tasks.emplace_back(m, t);

  const unsigned jobs = std::max(1u, config.jobs);
  const unsigned outer = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
  const unsigned inner = std::max(1u, jobs / std::max(1u, outer));
  report.records.resize(tasks.size());
  parallel_for(tasks.size(), outer, [&](std::size_t i) {
    report.records[i] = run_trial(config, tasks[i].first, tasks[i].second, inner);
  });

  for (int m = config.m_min; m <= config.m_max; ++m) {
    bool ok = std::any_of(report.records.begin(), report.records.end(),
                          [m](const TrialRecord& r) { return r.m == m && r.good(); });
    (ok ? report.verified_m : report.inconclusive_m).push_back(m);
  }
  return report;
}

nlohmann::json report_json(const VerificationReport& report, bool with_timing) {
  using nlohmann::json;
  const auto& c = report.config;
  json methods = json::array();
  for (Method m : c.methods) methods.push_back(method_name(m));
  json config = {{"m_min", c.m_min},
                 {"m_max", c.m_max},
                 {"field", c.field().name()},
                 {"seed", c.seed},
                 {"trials", c.trials},
                 {"methods", methods},
                 {"cross_check_small_m", c.cross_check_small_m},
                 {"jobs", c.jobs}};
  config["timeout_ms"] = c.timeout_ms ? json(*c.timeout_ms) : json(nullptr);

  json records = json::array();
  for (const auto& r : report.records) {
    json rec = {{"m", r.m},
                {"trial", r.trial},
                {"seed", r.seed},
                {"prime", c.prime ? json(*c.prime) : json(nullptr)},
                {"g", r.g},
                {"verdicts", r.verdicts},
                {"singular_weights", r.singular_weights},
                {"block_dims", r.block_dims},
                {"timed_out", r.timed_out}};
    if (r.witness) rec["witness_low_degree_member"] = *r.witness;
    if (with_timing) rec["elapsed_ms"] = r.elapsed_ms;
    records.push_back(std::move(rec));
  }
  return json{{"config", config},
              {"records", records},
              {"summary", {{"verified_m", report.verified_m}, {"inconclusive_m", report.inconclusive_m}}}};
}

std::string report_csv(const VerificationReport& report, bool with_timing) {
  std::ostringstream out;
  out << "m,trial,seed,prime,phi,direct,groebner,timed_out,singular_weights,g";
  if (with_timing) out << ",elapsed_ms";
  out << "\n";
  auto verdict = [](const TrialRecord& r, const char* name) -> std::string {
    auto it = r.verdicts.find(name);
    if (it == r.verdicts.end()) return "";
    return it->second ? "GOOD" : "BAD";
  };
  for (const auto& r : report.records) {
    out << r.m << "," << r.trial << "," << r.seed << "," << (report.config.prime ? std::to_string(*report.config.prime) : "")
        << "," << verdict(r, "phi") << "," << verdict(r, "direct") << "," << verdict(r, "groebner") << ","
        << (r.timed_out ? "true" : "false") << "," << join(r.singular_weights) << ",\"" << r.g << "\"";
    if (with_timing) out << "," << r.elapsed_ms;
    out << "\n";
  }
  return out.str();
}

}  // namespace maxgenus
