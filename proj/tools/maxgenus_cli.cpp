// Command line front end: verification sweeps, bounds tables, lift witnesses,
// the psi bijection, genus assemblies and Hilbert tables.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "maxgenus/errors.hpp"
#include "maxgenus/genus.hpp"
#include "maxgenus/graded_basis.hpp"
#include "maxgenus/lift.hpp"
#include "maxgenus/verifier.hpp"

namespace {

using namespace maxgenus;

constexpr int kUsageError = 3;
constexpr int kInvariantError = 2;

struct FieldChoice {
  std::uint32_t prime = Field::kDefaultPrime;
  bool rationals = false;

  void add_to(CLI::App* cmd) {
    auto* p = cmd->add_option("--prime", prime, "characteristic of the coefficient field");
    cmd->add_flag("--rationals", rationals, "work over QQ")->excludes(p);
  }
  Field field() const { return rationals ? Field::rationals() : Field::prime(prime); }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

Monomial parse_monomial(const std::string& text) {
  Polynomial p = parse_polynomial(text, Field::rationals(), Ring::XYZ);
  if (p.size() != 1 || !p.field().is_one(p.terms().front().coeff))
    throw ParseError("expected a single monomial in x, y, z, got '" + text + "'");
  return p.terms().front().mono;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maxgenus: weighted ideals, primitive multiple lines and genus bounds"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "check that random g of weight 3m are good");
  VerifyConfig vcfg;
  FieldChoice vfield;
  std::string method;
  std::string vout, vformat = "json";
  long timeout_ms = 0;
  verify->add_option("--m-min", vcfg.m_min)->required();
  verify->add_option("--m-max", vcfg.m_max)->required();
  vfield.add_to(verify);
  verify->add_option("--seed", vcfg.seed);
  verify->add_option("--trials", vcfg.trials);
  verify->add_option("--method", method, "phi, direct, groebner or all (default phi, with direct also run for m <= 5)")
      ->check(CLI::IsMember({"phi", "direct", "groebner", "all"}));
  verify->add_option("--jobs", vcfg.jobs);
  verify->add_option("--out", vout);
  verify->add_option("--format", vformat)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--timeout-ms", timeout_ms, "per-trial limit; a trial that runs out is inconclusive");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "CSV table of P(d,s)");
  std::int64_t d_max = 0, s_max = 0, s_min = 1;
  std::string bout;
  bounds->add_option("--d-max", d_max)->required();
  bounds->add_option("--s-max", s_max)->required();
  bounds->add_option("--s-min", s_min);
  bounds->add_option("--out", bout);

  // lift
  auto* lift = app.add_subcommand("lift", "lift witness and surface equation for a random or given g0");
  int lm = 2, la = 0;
  FieldChoice lfield;
  std::uint64_t lseed = 1;
  std::string lg, lt;
  bool lcheck = false;
  lift->add_option("--m", lm)->required();
  lift->add_option("--a", la)->required();
  lfield.add_to(lift);
  lift->add_option("--seed", lseed);
  lift->add_option("--g", lg, "g0 in k[x,y,z]; random when omitted");
  lift->add_option("--t", lt, "numeric value for t");
  lift->add_flag("--check", lcheck, "verify the factorization congruence");

  // psi
  auto* psi_cmd = app.add_subcommand("psi", "apply psi or its inverse to a monomial");
  int pm = 2;
  std::string pmono;
  bool pinverse = false;
  psi_cmd->add_option("--m", pm)->required();
  psi_cmd->add_option("--monomial", pmono)->required();
  psi_cmd->add_flag("--inverse", pinverse);

  // genus assembly
  auto* genus = app.add_subcommand("genus", "genus computations");
  genus->require_subcommand(1);
  auto* assembly = genus->add_subcommand("assembly", "components reaching P(d,d)");
  std::int64_t ad = 5;
  assembly->add_option("--d", ad)->required();

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert functions of S and T as CSV");
  int hm = 2, hmax = -1;
  FieldChoice hfield;
  std::uint64_t hseed = 1;
  std::string hout;
  hilbert->add_option("--m", hm)->required();
  hfield.add_to(hilbert);
  hilbert->add_option("--seed", hseed);
  hilbert->add_option("--max-weight", hmax);
  hilbert->add_option("--out", hout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify) {
      vcfg.prime = vfield.rationals ? std::nullopt : std::optional<std::uint32_t>(vfield.prime);
      if (method.empty()) {
        vcfg.methods = {Method::Phi};
        vcfg.cross_check_small_m = true;
      } else {
        vcfg.methods = parse_methods(method);
      }
      if (timeout_ms > 0) vcfg.timeout_ms = timeout_ms;
      auto report = run_verify(vcfg);
      emit(vformat == "json" ? report_json(report).dump(2) + "\n" : report_csv(report), vout);
      std::cerr << "verified m: " << report.verified_m.size() << ", inconclusive m: " << report.inconclusive_m.size()
                << "\n";
      return report.exit_code();
    }
    if (*bounds) {
      emit(bounds_csv(bounds_table(s_min, s_max, d_max)), bout);
      return 0;
    }
    if (*lift) {
      const Field field = lfield.field();
      const ParamSet params = ParamSet::from_m(lm, la);
      Polynomial g0 = lg.empty() ? random_g(lm, field, lseed) : parse_polynomial(lg, field, Ring::XYZ);
      std::optional<FieldElement> t;
      if (!lt.empty()) t = field.parse(lt);
      auto wit = construct_lift(g0, params);
      auto surface = surface_equation(g0, params, t);
      std::cout << "field: " << field.name() << "\n"
                << "g0: " << g0.to_string() << "\n"
                << "g_inf: " << wit.g_inf.to_string() << "\n"
                << "gbar: " << wit.gbar.to_string() << "\n"
                << "k: " << wit.k.to_string() << "\n"
                << "kbar: " << wit.kbar.to_string() << "\n"
                << "g1: " << wit.g1.to_string() << "\n"
                << "h: " << wit.h.to_string() << "\n"
                << "h1: " << wit.h1.to_string() << "\n"
                << "G: " << surface.G.to_string() << "\n"
                << "F: " << surface.F.to_string() << "\n";
      if (surface.F_at_t) std::cout << "F(t=" << field.to_string(*surface.t) << "): " << surface.F_at_t->to_string() << "\n";
      std::cout << "degree: " << surface.degree << "\n"
                << "type: " << surface.type << "\n"
                << "contains X=Y=0: " << (surface.contains_line ? "yes" : "no") << "\n";
      if (lcheck) {
        auto residuals = congruence_residuals(wit, g0, params);
        bool ok = true;
        for (std::size_t k = 0; k < residuals.size(); ++k) {
          std::cout << "[t^" << k << "] residual: " << residuals[k].to_string() << "\n";
          ok = ok && residuals[k].is_zero();
        }
        std::cout << "congruence: " << (ok ? "holds" : "FAILS") << "\n";
        if (!ok) return kInvariantError;
      }
      return 0;
    }
    if (*psi_cmd) {
      const ParamSet params = ParamSet::from_m(pm);
      Monomial mono = parse_monomial(pmono);
      Monomial image = pinverse ? psi_inverse(mono, params) : psi(mono, params);
      std::cout << to_string(image, Ring::XYZ) << "\n";
      return 0;
    }
    if (*assembly) {
      auto a = conjectureA_assembly(ad);
      for (const auto& c : a.components)
        std::cout << c.kind << " degree=" << c.degree << " type=" << c.type << " genus=" << c.genus << "\n";
      std::cout << "total genus: " << a.genus << "\nP(d,d): " << a.bound << "\n"
                << "identity: " << (a.matches() ? "holds" : "FAILS") << "\n";
      return a.matches() ? 0 : kInvariantError;
    }
    if (*hilbert) {
      const ParamSet params = ParamSet::from_m(hm);
      emit(hilbert_csv(hilbert_table(params, random_g(hm, hfield.field(), hseed), hmax)), hout);
      return 0;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariantError;
  } catch (const ConstructionFailure& e) {
    std::cerr << "construction failure: " << e.what() << "\n";
    return kInvariantError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
