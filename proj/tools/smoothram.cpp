// smoothram command-line tool. Each subcommand writes its CSV/JSON
// artifacts and prints a short summary.
//
// Exit codes: 0 pass, 1 failure, 2 undecided, 3 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "smoothram/reporting.hpp"

namespace fs = std::filesystem;
using namespace smoothram;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUndecided = 2;
constexpr int kUsage = 3;

struct Common {
  std::string out_dir = ".";
  bool out_given = false;
};

fs::path resolve_out(const Common& common) {
  return common.out_given ? fs::path(common.out_dir) : output_directory(common.out_dir);
}

// "file:<path>" loads a function table file; anything else is a catalog id.
ArithmeticFunction load_function(const std::string& spec) {
  constexpr std::string_view prefix = "file:";
  if (spec.rfind(prefix, 0) == 0) return parse_function_file(spec.substr(prefix.size()));
  return ArithmeticFunction::from_catalog(spec);
}

Rational parse_rational_arg(const std::string& text) { return parse_rational(text); }

// Collects failures and writes failures.json next to the other artifacts.
class Outcome {
 public:
  void fail(std::string check, std::string detail) {
    failures_.push_back({std::move(check), "failed", std::move(detail)});
  }
  void undecided(std::string check, std::string detail) {
    failures_.push_back({std::move(check), "undecided", std::move(detail)});
  }
  int finish(const fs::path& dir) const {
    write_text(dir / "failures.json", failures_json(failures_).dump(2) + "\n");
    bool any_failed = false;
    for (const auto& f : failures_) any_failed = any_failed || f.status == "failed";
    if (any_failed) return kFail;
    return failures_.empty() ? kPass : kUndecided;
  }

 private:
  std::vector<Failure> failures_;
};

// ---- coeffs ---------------------------------------------------------------

struct CoeffsArgs {
  std::string function = "indicator:6";
  u64 v = 3;
  u64 max_index = 50;
  u64 cutoff = 10000;
  std::string target;
};

int run_coeffs(const CoeffsArgs& args, const Common& common) {
  const auto spec = load_function(args.function);
  const SmoothContext ctx(args.v);
  const Truncation trunc{args.cutoff, std::nullopt};
  Outcome outcome;
  std::vector<CoefficientRecord> records;
  for (u64 ell = 1; ell <= args.max_index; ++ell) {
    if (!args.target.empty() && is_smooth(ell, ctx)) {
      try {
        records.push_back(
            coefficient_record_to_target(spec, ctx, ell, parse_rational_arg(args.target), trunc));
      } catch (const TruncationError& e) {
        outcome.undecided("coefficient radius l=" + std::to_string(ell), e.what());
        records.push_back(coefficient_record(spec, ctx, ell, trunc));
      }
    } else {
      records.push_back(coefficient_record(spec, ctx, ell, trunc));
    }
    const auto& r = records.back();
    if (!r.wintner.intersects(r.carmichael)) {
      outcome.fail("Car = Win l=" + std::to_string(ell),
                   "Win " + to_string(r.wintner.center) + " +- " + to_string(r.wintner.radius) +
                       " vs Car " + to_string(r.carmichael.center) + " +- " +
                       to_string(r.carmichael.radius));
    }
  }
  const fs::path dir = resolve_out(common);
  write_text(dir / "coeffs.csv", coefficients_csv(records));
  std::size_t exact = 0;
  for (const auto& r : records) exact += r.method != "truncated";
  std::cout << spec.name() << ", V=" << args.v << ": " << records.size() << " coefficients ("
            << exact << " exact) -> " << (dir / "coeffs.csv").string() << "\n";
  return outcome.finish(dir);
}

// ---- expand ---------------------------------------------------------------

struct ExpandArgs {
  std::string function = "indicator:6";
  u64 v = 3;
  u64 a = 1;
  u64 max_index = 100;
  u64 cutoff = 10000;
};

int run_expand(const ExpandArgs& args, const Common& common) {
  const auto spec = load_function(args.function);
  const SmoothContext ctx(args.v);
  const auto res = re_expansion_partial(spec, ctx, args.a, args.max_index, {args.cutoff, {}});
  Json j{{"function", spec.name()},
         {"V", args.v},
         {"a", args.a},
         {"L", args.max_index},
         {"X", args.cutoff},
         {"partial", to_json(res.partial)},
         {"target", to_json(res.target)},
         {"residual", to_json(res.residual)}};
  std::cout << j.dump(2) << "\n";
  Outcome outcome;
  // The partial sum is complete once L covers the finite support of F'.
  const auto& support = spec.transform_support();
  if (support && args.max_index >= *support && res.residual != 0) {
    outcome.fail("expansion", "F_(V)(a) not reproduced with L >= support");
  }
  return outcome.finish(resolve_out(common));
}

// ---- orthogonality --------------------------------------------------------

struct OrthArgs {
  u64 q = 3;
  u64 max_index = 30;
  u64 cutoff = 10000;
};

int run_orthogonality(const OrthArgs& args, const Common& common) {
  const SmoothContext ctx(args.q);
  const auto matrix = orthogonality_matrix(ctx, args.max_index);
  Outcome outcome;
  const Truncation trunc{args.cutoff, std::nullopt};
  for (std::size_t i = 0; i < matrix.indices.size(); ++i) {
    for (std::size_t j = 0; j < matrix.indices.size(); ++j) {
      const u64 q = matrix.indices[i];
      const u64 ell = matrix.indices[j];
      const Rational expected = q == ell ? make_rational(euler_phi(ell), u64{1}) : Rational(0);
      const std::string where = "q=" + std::to_string(q) + " l=" + std::to_string(ell);
      if (matrix.values[i][j] != expected) {
        outcome.fail("orthogonality exact " + where, to_string(matrix.values[i][j]));
      }
      if (!prop2_truncated(ctx, q, ell, trunc).contains(expected)) {
        outcome.fail("orthogonality truncated " + where, "interval excludes expected value");
      }
    }
  }
  const fs::path dir = resolve_out(common);
  write_text(dir / "orthogonality.csv", orthogonality_csv(matrix));
  std::cout << matrix.indices.size() << "x" << matrix.indices.size() << " matrix for Q="
            << args.q << " -> " << (dir / "orthogonality.csv").string() << "\n";
  return outcome.finish(dir);
}

// ---- correlation ----------------------------------------------------------

struct CorrelationArgs {
  std::string f = "indicator:2";
  std::string g = "ramanujan-sum:3";
  u64 range = 5;
  u64 length = 10;
  u64 v = 2;
};

int run_correlation(const CorrelationArgs& args, const Common& common) {
  const CorrelationTable table(load_function(args.f),
                               RangeQFunction::from_spec(load_function(args.g), args.range),
                               args.length);
  const SmoothContext ctx(args.v);
  Outcome outcome;
  Rational max_dev = 0;
  for (u64 a = 1; a <= table.period(); ++a) {
    max_dev = std::max(max_dev, abs_value(prop1_decomposition(table, a) - table.value(a)));
  }
  if (max_dev != 0) outcome.fail("decomposition", "max deviation " + to_string(max_dev));

  Json coeffs = Json::array();
  std::string csv = "ell,coefficient,carmichael_mean,wintner_center,wintner_radius\n";
  for (u64 ell = 1; ell <= args.range; ++ell) {
    const Rational coef = correlation_coefficient(table, ell);
    const Rational mean = correlation_carmichael_mean(table, ell);
    if (coef != mean) outcome.fail("Carmichael mean l=" + std::to_string(ell), to_string(mean));
    const auto win = correlation_wintner_exact(table, ell);
    if (!win) {
      outcome.undecided("Wintner l=" + std::to_string(ell), "C not even: no certified bound");
    } else if (*win != coef) {
      outcome.fail("Wintner l=" + std::to_string(ell), to_string(*win));
    }
    csv += std::to_string(ell) + "," + to_string(coef) + "," + to_string(mean) + "," +
           (win ? to_string(*win) + ",0/1" : std::string("uncertified,uncertified")) + "\n";
    coeffs.push_back(to_json(corollary2_identity(table, ctx, ell)));
  }
  const fs::path dir = resolve_out(common);
  write_text(dir / "correlation.csv", correlation_csv(table, 2 * table.period()));
  write_text(dir / "correlation_coeffs.csv", csv);
  Json summary{{"instance",
                {{"f", args.f}, {"g", args.g}, {"Q", args.range}, {"N", args.length}}},
               {"period", table.period()},
               {"even", table.is_even()},
               {"max_abs", to_json(table.max_abs())},
               {"decomposition_max_deviation", to_json(max_dev)},
               {"V", args.v},
               {"smooth_split", std::move(coeffs)}};
  write_text(dir / "correlation_summary.json", summary.dump(2) + "\n");
  std::cout << "period " << table.period() << (table.is_even() ? " (even)" : "")
            << ", decomposition deviation " << to_string(max_dev) << " -> "
            << dir.string() << "\n";
  return outcome.finish(dir);
}

// ---- counterexample -------------------------------------------------------

struct CounterexampleArgs {
  u64 length = 10;
  u64 range = 5;
  u64 n0 = 2;
  u64 q0 = 3;
};

int run_counterexample(const CounterexampleArgs& args, const Common& common) {
  const auto report = counterexample1(args.length, args.range, args.n0, args.q0);
  const Rational phi = make_rational(euler_phi(args.q0), u64{1});
  const Rational mu2 = mobius(args.q0) == 0 ? Rational(0) : Rational(1);
  Outcome outcome;
  if (report.lhs != phi || report.rhs != mu2 / phi) {
    outcome.fail("counterexample", "lhs " + to_string(report.lhs) + ", rhs " +
                                       to_string(report.rhs));
  }
  Json j{{"experiment", "counterexample"},
         {"instance",
          {{"N", args.length}, {"Q", args.range}, {"n0", args.n0}, {"q0", args.q0}, {"a", 1}}},
         {"report", to_json(report)}};
  const fs::path dir = resolve_out(common);
  write_text(dir / "reef_report.json", j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return outcome.finish(dir);
}

// ---- conjecture1 ----------------------------------------------------------

struct Conjecture1Args {
  u64 q = 3;
  SweepOptions sweep;
};

int run_conjecture1(const Conjecture1Args& args, const Common& common) {
  const SmoothContext ctx(args.q);
  const auto result = conjecture1_sweep(ctx, args.sweep);
  Json j{{"experiment", "conjecture1"},
         {"Q", args.q},
         {"max_index", args.sweep.max_index},
         {"max_shift", args.sweep.max_shift},
         {"start_X", args.sweep.start_cutoff},
         {"X_cap", args.sweep.cutoff_cap},
         {"sweep", to_json(result)}};
  const fs::path dir = resolve_out(common);
  write_text(dir / "reef_report.json", j.dump(2) + "\n");
  std::cout << result.points << " points, " << result.witnesses.size() << " witnesses, "
            << result.undecided.size() << " undecided\n";
  for (const auto& w : result.witnesses) {
    std::cout << "  witness q=" << w.q << " l=" << w.ell << " n=" << w.n << ": "
              << to_string(w.interval.center) << " +- " << to_string(w.interval.radius)
              << " excludes " << to_string(w.expected) << " (X=" << w.cutoff << ")\n";
  }
  // The experiment succeeds when it falsifies.
  Outcome outcome;
  if (result.witnesses.empty()) {
    if (result.undecided.empty()) {
      outcome.fail("conjecture1", "no violation within the sweep bounds");
    } else {
      outcome.undecided("conjecture1", "no certified violation; undecided points remain");
    }
  }
  return outcome.finish(dir);
}

// ---- reef-residual --------------------------------------------------------

struct ResidualArgs {
  std::string f = "indicator:2";
  std::string g = "ramanujan-sum:3";
  u64 range = 5;
  u64 length = 10;
  u64 max_shift = 0;
  std::string delta = "1/2";
  bool random = false;
  u64 seed = 1;
};

int run_reef_residual(const ResidualArgs& args, const Common& common) {
  const Rational delta = parse_rational_arg(args.delta);
  Json instance;
  ResidualTable table;
  if (args.random) {
    std::mt19937_64 rng(args.seed);
    auto inst = random_bh_instance(rng, args.length, args.range);
    const u64 shifts = args.max_shift ? args.max_shift : inst.length;
    table = approximate_reef_residual(inst.f, inst.g, inst.length, shifts, delta);
    instance = {{"random", true}, {"seed", args.seed}, {"label", inst.label}};
  } else {
    const u64 shifts = args.max_shift ? args.max_shift : args.length;
    table = approximate_reef_residual(load_function(args.f),
                                      RangeQFunction::from_spec(load_function(args.g), args.range),
                                      args.length, shifts, delta);
    instance = {{"f", args.f}, {"g", args.g}, {"Q", args.range}, {"N", args.length}};
  }
  Json j{{"experiment", "reef-residual"}, {"instance", instance}, {"residuals", to_json(table)}};
  const fs::path dir = resolve_out(common);
  write_text(dir / "reef_report.json", j.dump(2) + "\n");
  std::cout << table.rows.size() << " shifts, max |defect| " << to_string(table.max_abs_defect)
            << ", within a <= N^(1-delta): " << to_string(table.max_abs_defect_in_range) << "\n";
  // Measurement only: no pass/fail verdict.
  return Outcome{}.finish(dir);
}

// ---- verify-all -----------------------------------------------------------

int run_verify_all(u64 seed, const Common& common) {
  Outcome outcome;
  std::size_t checks = 0;
  auto check = [&](bool ok, const std::string& name, const std::string& detail) {
    ++checks;
    if (!ok) outcome.fail(name, detail);
  };

  // Counterexample family.
  for (u64 q0 = 3; q0 <= 12; ++q0) {
    const auto r = counterexample1(std::max<u64>(q0, 10), q0, q0 - 1, q0);
    const Rational phi = make_rational(euler_phi(q0), u64{1});
    const Rational mu2 = mobius(q0) == 0 ? Rational(0) : Rational(1);
    check(r.lhs == phi && r.rhs == mu2 / phi, "counterexample q0=" + std::to_string(q0),
          to_string(r.lhs) + " vs " + to_string(r.rhs));
  }

  // Orthogonality, exact and truncated.
  for (u64 q : {2, 3, 5}) {
    const SmoothContext ctx(q);
    for (u64 a : smooth_up_to(ctx, 30)) {
      for (u64 b : smooth_up_to(ctx, 30)) {
        const auto res = orthogonality_result(ctx, a, b);
        check(res.exact_value == res.expected && res.truncated.contains(res.expected),
              "orthogonality Q=" + std::to_string(q) + " q=" + std::to_string(a) +
                  " l=" + std::to_string(b),
              to_string(res.exact_value));
      }
    }
  }

  // Smooth restriction through the Mobius switch, and coefficient
  // agreement: exact when F' has finite support, interval overlap otherwise.
  const std::vector<std::string> catalog = {"constant-one", "indicator:6", "indicator:12",
                                            "ramanujan-sum:6", "zero", "mu-squared",
                                            "phi-over-n"};
  for (const auto& id : catalog) {
    const auto spec = ArithmeticFunction::from_catalog(id);
    for (u64 v : {2, 3, 5}) {
      const SmoothContext ctx(v);
      for (u64 a = 1; a <= 200; ++a) {
        check(smooth_restrict(spec, ctx, a) == mobius_switch_rhs(spec, ctx, a),
              "mobius switch " + id + " a=" + std::to_string(a), "");
      }
      for (u64 ell = 1; ell <= 50; ++ell) {
        const auto r = coefficient_record(spec, ctx, ell);
        const bool ok = spec.transform_support()
                            ? r.wintner.is_exact() && r.carmichael.is_exact() &&
                                  r.wintner.center == r.carmichael.center
                            : r.wintner.intersects(r.carmichael);
        check(ok,
              "Car = Win " + id + " V=" + std::to_string(v) + " l=" + std::to_string(ell),
              to_string(r.wintner.center) + " vs " + to_string(r.carmichael.center));
      }
    }
  }

  // Correlation decomposition and coefficients on catalog and seeded random pairs.
  auto instances = catalog_bh_instances();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20; ++i) instances.push_back(random_bh_instance(rng, 40, 8));
  for (const auto& inst : instances) {
    const CorrelationTable table(inst.f, inst.g, inst.length, 1);
    for (u64 a = 1; a <= table.period(); ++a) {
      check(prop1_decomposition(table, a) == table.value(a), "decomposition " + inst.label,
            "a=" + std::to_string(a));
    }
    for (u64 ell = 1; ell <= inst.g.range(); ++ell) {
      check(correlation_coefficient(table, ell) == correlation_carmichael_mean(table, ell),
            "Carmichael mean " + inst.label, "l=" + std::to_string(ell));
    }
  }

  // One certified violation of the shifted orthogonality conjecture.
  const auto sweep = conjecture1_sweep(SmoothContext(3), {});
  check(!sweep.witnesses.empty(), "conjecture1 witness Q=3", "none found");

  const fs::path dir = resolve_out(common);
  std::cout << checks << " checks, seed " << seed << "\n";
  return outcome.finish(dir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of smooth-restricted Ramanujan expansions"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--out", common.out_dir,
                 "Output directory (default: $SMOOTHRAM_OUTPUT_DIR, else the current directory)")
      ->each([&](const std::string&) { common.out_given = true; });

  CoeffsArgs coeffs;
  auto* c = app.add_subcommand("coeffs", "Carmichael and Wintner coefficients of F_(V)");
  c->add_option("--function", coeffs.function, "Catalog id or file:<path>");
  c->add_option("--V", coeffs.v, "Smoothness bound")->check(CLI::PositiveNumber);
  c->add_option("--L", coeffs.max_index, "Largest index l")->check(CLI::PositiveNumber);
  c->add_option("--X", coeffs.cutoff, "Truncation cutoff")->check(CLI::PositiveNumber);
  c->add_option("--target", coeffs.target, "Target radius p/q; doubles X until met");

  ExpandArgs expand;
  auto* e = app.add_subcommand("expand", "Smooth Ramanujan expansion at one point");
  e->add_option("--function", expand.function, "Catalog id or file:<path>");
  e->add_option("--V", expand.v)->check(CLI::PositiveNumber);
  e->add_option("--a", expand.a)->check(CLI::PositiveNumber);
  e->add_option("--L", expand.max_index)->check(CLI::PositiveNumber);
  e->add_option("--X", expand.cutoff)->check(CLI::PositiveNumber);

  OrthArgs orth;
  auto* o = app.add_subcommand("orthogonality", "Smooth-twisted orthogonality matrix");
  o->add_option("--Q", orth.q)->check(CLI::PositiveNumber);
  o->add_option("--max", orth.max_index, "Largest smooth index")->check(CLI::PositiveNumber);
  o->add_option("--X", orth.cutoff)->check(CLI::PositiveNumber);

  CorrelationArgs corr;
  auto* r = app.add_subcommand("correlation", "Shifted convolution sums and their coefficients");
  r->add_option("--f", corr.f, "Catalog id or file:<path>");
  r->add_option("--g", corr.g, "Catalog id or file:<path>; truncated to range Q");
  r->add_option("--Q", corr.range)->check(CLI::PositiveNumber);
  r->add_option("--N", corr.length)->check(CLI::PositiveNumber);
  r->add_option("--V", corr.v, "Smoothness bound for the smooth/non-smooth split")
      ->check(CLI::PositiveNumber);

  CounterexampleArgs cex;
  auto* x = app.add_subcommand("counterexample", "Exact Reef counterexample at a = 1");
  x->add_option("--N", cex.length)->check(CLI::PositiveNumber);
  x->add_option("--Q", cex.range)->check(CLI::PositiveNumber);
  x->add_option("--n0", cex.n0)->check(CLI::PositiveNumber);
  x->add_option("--q0", cex.q0)->check(CLI::PositiveNumber);

  Conjecture1Args conj;
  auto* k = app.add_subcommand("conjecture1", "Certified falsifier sweep");
  k->add_option("--Q", conj.q)->check(CLI::PositiveNumber);
  k->add_option("--max-index", conj.sweep.max_index, "0 means lcm(1..Q)");
  k->add_option("--max-shift", conj.sweep.max_shift, "0 means lcm(1..Q)");
  k->add_option("--X", conj.sweep.start_cutoff)->check(CLI::PositiveNumber);
  k->add_option("--X-cap", conj.sweep.cutoff_cap)->check(CLI::PositiveNumber);
  k->add_option("--stop-after", conj.sweep.stop_after, "Witnesses to collect; 0 sweeps all");

  ResidualArgs res;
  auto* a = app.add_subcommand("reef-residual", "Approximate Reef residual profile");
  a->add_option("--f", res.f, "Catalog id or file:<path>");
  a->add_option("--g", res.g, "Catalog id or file:<path>");
  a->add_option("--Q", res.range)->check(CLI::PositiveNumber);
  a->add_option("--N", res.length)->check(CLI::PositiveNumber);
  a->add_option("--a-max", res.max_shift, "Largest shift; 0 means N");
  a->add_option("--delta", res.delta, "delta in [0, 1) as p/q");
  a->add_flag("--random", res.random, "Draw a seeded random pair with N <= --N, Q <= --Q");
  a->add_option("--seed", res.seed);

  u64 seed = 1;
  auto* v = app.add_subcommand("verify-all", "Run the built-in verification battery");
  v->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }

  try {
    if (*c) return run_coeffs(coeffs, common);
    if (*e) return run_expand(expand, common);
    if (*o) return run_orthogonality(orth, common);
    if (*r) return run_correlation(corr, common);
    if (*x) return run_counterexample(cex, common);
    if (*k) return run_conjecture1(conj, common);
    if (*a) return run_reef_residual(res, common);
    if (*v) return run_verify_all(seed, common);
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kUsage;
  } catch (const CertificateError& err) {
    std::cerr << "certificate: " << err.what() << "\n";
    return kFail;
  } catch (const PeriodicityError& err) {
    std::cerr << "periodicity: " << err.what() << "\n";
    return kFail;
  } catch (const TruncationError& err) {
    std::cerr << "undecided: " << err.what() << "\n";
    return kUndecided;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kFail;
  }
  return kUsage;
}
