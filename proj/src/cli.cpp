#include "cubicloop/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <climits>
#include <ostream>
#include <vector>

#include "cubicloop/export.hpp"
#include "cubicloop/lambda.hpp"
#include "cubicloop/literal.hpp"
#include "cubicloop/properties.hpp"
#include "cubicloop/report.hpp"
#include "cubicloop/table_builder.hpp"

namespace cubicloop {

namespace {

struct Config {
  int precision = kDefaultPrecision;
  std::uint64_t seed = 0;
  int lift_samples = 20;
  unsigned threads = 0;
};

BuildOptions build_options(const Config& c, int admissibility_cells) {
  BuildOptions o;
  o.precision = c.precision;
  o.seed = c.seed;
  o.lift_samples = c.lift_samples;
  o.admissibility_cells = admissibility_cells;
  o.threads = c.threads;
  return o;
}

std::string margin_text(Precision p) { return p.is_exact() ? "exact" : std::to_string(p.digits()); }

int cmd_enumerate(std::ostream& out, int mod) {
  for (const auto& f : enumerate_classes(mod)) out << f.to_literal() << '\n';
  return exit_code::kOk;
}

int cmd_compose(std::ostream& out, const Config& cfg, const std::string& ptext, const std::string& qtext) {
  const ProjPoint P0 = parse_point(ptext);
  const ProjPoint Q0 = parse_point(qtext);
  for (int n = cfg.precision;; n *= 2) {
    try {
      const ProjPoint P = refine_to_surface(P0, n);
      const ProjPoint Q = refine_to_surface(Q0, n);
      const ChordResult r = chord(P, Q);
      const CanonicalForm f = normalize(r.point, kClassModulus);
      out << format_point(display_form(r.point)) << '\n';
      out << "canonical " << f.to_literal() << '\n';
      if (auto id = find_class(f)) out << "class " << class_label(*id) << '\n';
      out << "A = " << format_element(r.trace.A.reduced()) << '\n';
      out << "B = " << format_element(r.trace.B.reduced()) << '\n';
      out << "margin = " << margin_text(r.trace.margin) << '\n';
      return exit_code::kOk;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted || 2 * n > kMaxPrecision) throw;
    }
  }
}

int cmd_lift(std::ostream& out, const Config& cfg, const std::string& family, const std::vector<int>& params) {
  LambdaParams lp;
  if (family == "P") lp.family = Family::P;
  else if (family == "Q") lp.family = Family::Q;
  else if (family == "R") lp.family = Family::R;
  else throw Error(ErrorKind::Parse, "family must be P, Q or R");
  if (params.size() != 4) throw Error(ErrorKind::Parse, "--params takes exp,d0,d1,d2");
  lp.exp = params[0];
  lp.digits = {params[1], params[2], params[3]};
  if (!lp.valid()) throw Error(ErrorKind::Parse, "exp must be 0..2 and digits -1..1");
  const ProjPoint P = lift_representative(lp, cfg.precision);
  out << format_point(P.reduced()) << '\n';
  out << "class " << class_label(class_id(lp)) << '\n';
  out << "precision " << margin_text(P.precision()) << '\n';
  const Valuation v = valuation(eval_form(P));
  out << "v(F) " << (v.is_infinite() ? std::string("infinite") : ">= " + std::to_string(v.value())) << '\n';
  return exit_code::kOk;
}

int cmd_table(std::ostream& out, const Config& cfg, const std::string& path, const std::string& format,
              int cells, int unit) {
  const ExportFormat fmt = parse_format(format);
  const ClassTable t = build_class_table(build_options(cfg, cells));
  const LoopTable l = loop_from(t, unit < 0 ? unit_class().value : unit);
  export_tables(path, fmt, t, l, cfg.precision);
  out << "wrote " << path << " (" << t.order() << " classes, unit " << l.unit << ")\n";
  return exit_code::kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  int cells = 500;
  int ch_samples = 1000;
  bool ch_exhaustive = false;
  int geometry_samples = 500;
  int unit = -1;
};

int cmd_verify(std::ostream& out, const Config& cfg, const VerifyArgs& args) {
  const std::string& s = args.suite;
  const bool all = s == "all";
  static const std::vector<std::string> suites{"all", "quasigroup", "cml", "admissibility", "witness",
                                               "ch", "eckhardt", "tangent", "parametric"};
  if (std::find(suites.begin(), suites.end(), s) == suites.end()) {
    throw Error(ErrorKind::Parse, "unknown suite " + s);
  }
  const BuildOptions opts = build_options(cfg, args.cells);
  const ClassTable t = build_class_table(build_options(cfg, 0));
  bool ok = true;

  if (s == "quasigroup") {
    auto checks = verify_quasigroup(t);
    checks.push_back(verify_idempotent(t));
    for (const auto& c : checks) out << (c.passed ? "pass" : "FAIL") << "  " << c.law << "  (" << c.checked << ")\n";
    ok = all_passed(checks);
  }
  if (all || s == "cml" || s == "witness" || s == "admissibility" || s == "ch") {
    const LoopTable l = loop_from(t, args.unit < 0 ? unit_class().value : args.unit);
    if (all || s == "cml" || s == "admissibility" || s == "ch") {
      LoopReport r = make_report(t, l);
      if (all || s == "admissibility") r.admissibility = sample_admissibility(t, opts);
      if (all || s == "ch") {
        r.ch = ch_check(t, args.ch_exhaustive ? all_triples(t.order())
                                              : sample_triples(t.order(), static_cast<std::size_t>(args.ch_samples),
                                                               cfg.seed));
      }
      print_report(out, r);
      ok = ok && r.ok();
    }
    if (all || s == "witness") {
      const WitnessResult w = check_witness(t, l);
      print_witness(out, w);
      ok = ok && w.ok();
    }
  }
  std::vector<PropertyStats> stats;
  if (all || s == "eckhardt") {
    for (int k = 0; k < 3; ++k) stats.push_back(check_eckhardt(k, args.geometry_samples, cfg.precision, cfg.seed));
  }
  if (all || s == "tangent") {
    const int n = std::max(cfg.precision, 24);
    stats.push_back(check_tangent_contraction(20, std::max(5, args.geometry_samples / 20), n, cfg.seed));
    for (int i = 1; i <= 3; ++i) {
      stats.push_back(check_case3_contraction(i, std::max(100, args.geometry_samples / 5), cfg.precision, cfg.seed));
    }
  }
  if (all || s == "parametric") stats.push_back(check_parametric(t));
  for (const auto& st : stats) {
    print_stats(out, st);
    ok = ok && st.ok();
  }
  out << (ok ? "verification passed" : "verification FAILED") << '\n';
  return ok ? exit_code::kOk : exit_code::kVerificationFailed;
}

int cmd_witness(std::ostream& out, const Config& cfg) {
  const ClassTable t = build_class_table(build_options(cfg, 0));
  const WitnessResult w = check_witness(t, loop_from(t, unit_class().value));
  print_witness(out, w);
  return w.ok() ? exit_code::kOk : exit_code::kVerificationFailed;
}

int cmd_nucleus(std::ostream& out, const Config& cfg, int unit) {
  const ClassTable t = build_class_table(build_options(cfg, 0));
  const LoopTable l = loop_from(t, unit < 0 ? unit_class().value : unit);
  const auto nuc = nucleus(l);
  for (Element a : nuc) out << class_label(ClassId{a}) << '\n';
  out << "size " << nuc.size() << '\n';
  const bool ok = is_power_of_three(nuc.size()) && is_associative_subloop(l, nuc) &&
                  static_cast<int>(nuc.size()) < l.order();
  return ok ? exit_code::kOk : exit_code::kVerificationFailed;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::HenselCriterionFailed:
      return exit_code::kPrecisionFailure;
    case ErrorKind::AdmissibilityViolation:
    case ErrorKind::InvalidTable:
    case ErrorKind::DegenerateLine:
      return exit_code::kVerificationFailed;
    case ErrorKind::NonUnitInverse:
    case ErrorKind::NonIntegralQuotient:
    case ErrorKind::PointsCoincide:
    case ErrorKind::NotTangentDirection:
    case ErrorKind::NotOnSurface:
    case ErrorKind::Parse:
    case ErrorKind::Io:
      return exit_code::kInputError;
  }
  return exit_code::kInputError;
}

ProjPoint display_form(const ProjPoint& P) {
  if (!P.precision().is_exact()) return normalize_point(P, P.precision()).point;
  int shift = INT_MAX;
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Valuation v = valuation(P[i]);
    if (v.is_infinite()) continue;
    if (v.value() <= shift) {
      shift = v.value();
      pivot = i;
    }
  }
  if (shift == INT_MAX) return P;
  const RingElt unit = divide_by_uniformizer(P[pivot], shift);
  if (unit.norm() != 1) return P;
  ProjPoint out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = divide_by_uniformizer(P[i], shift) * unit.conjugate();
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classes of points on T0^3 + T1^3 + T2^3 + T*T3^3 = 0 modulo p^3 and their Moufang loop"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--precision", cfg.precision, "working precision N in digits of p")
      ->check(CLI::Range(6, kMaxPrecision))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  app.add_option("--lift-samples", cfg.lift_samples, "lift pairs per sampled admissibility cell")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads (0: all cores)")->capture_default_str();
  app.fallthrough();

  int mod = 3;
  auto* enumerate = app.add_subcommand("enumerate", "print the canonical residues of V mod p^n");
  enumerate->add_option("--mod", mod, "n in {1,2,3}")->check(CLI::Range(1, 3))->capture_default_str();

  std::string ptext, qtext;
  auto* compose = app.add_subcommand("compose", "third point on the line through two points");
  compose->add_option("--p", ptext, "point literal, e.g. 1:0:-1:0")->required();
  compose->add_option("--q", qtext, "point literal")->required();

  std::string family;
  std::vector<int> params;
  auto* lift = app.add_subcommand("lift", "lift a class label to a point of V");
  lift->add_option("--family", family, "P, Q or R")->required();
  lift->add_option("--params", params, "exp,d0,d1,d2")->required()->delimiter(',')->expected(4);

  std::string path, format = "json";
  int table_cells = 500, unit = -1;
  auto* table = app.add_subcommand("table", "build and export the composition and loop tables");
  table->add_option("--out", path, "output file")->required();
  table->add_option("--format", format, "json or csv")->capture_default_str();
  table->add_option("--admissibility-cells", table_cells, "cells re-checked with random lifts")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  table->add_option("--unit", unit, "unit class id (default: class of 1:-1:0:0)")->check(CLI::Range(0, kClassCount - 1));

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "run verification suites and print a report");
  verify->add_option("--suite", vargs.suite,
                     "all, quasigroup, cml, admissibility, witness, ch, eckhardt, tangent or parametric")
      ->capture_default_str();
  verify->add_option("--admissibility-cells", vargs.cells, "cells re-checked with random lifts")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--ch-samples", vargs.ch_samples, "random triples for the CH check")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_flag("--ch-exhaustive", vargs.ch_exhaustive, "check every triple x <= y <= z");
  verify->add_option("--geometry-samples", vargs.geometry_samples, "points per Eckhardt swap check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--unit", vargs.unit, "unit class id")->check(CLI::Range(0, kClassCount - 1));

  auto* witness = app.add_subcommand("witness", "the non-associative triple Q0, Q1, Q2");
  int nucleus_unit = -1;
  auto* nuc = app.add_subcommand("nucleus", "print the nucleus of the loop");
  nuc->add_option("--unit", nucleus_unit, "unit class id")->check(CLI::Range(0, kClassCount - 1));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::kInputError;
  }

  try {
    if (*enumerate) return cmd_enumerate(out, mod);
    if (*compose) return cmd_compose(out, cfg, ptext, qtext);
    if (*lift) return cmd_lift(out, cfg, family, params);
    if (*table) return cmd_table(out, cfg, path, format, table_cells, unit);
    if (*verify) return cmd_verify(out, cfg, vargs);
    if (*witness) return cmd_witness(out, cfg);
    if (*nuc) return cmd_nucleus(out, cfg, nucleus_unit);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::kVerificationFailed;
  }
  return exit_code::kInputError;
}

}  // namespace cubicloop
