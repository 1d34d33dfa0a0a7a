// diagre: normalize, canonize and compare string-diagram terms.
//
// stdout carries only results; diagnostics go to stderr.
// Exit codes: 0 success / EQUIVALENT / yes, 1 DISTINCT / no / failed
// checks, 2 parse or type errors, 3 state-effect or symmetry violations,
// 4 step budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "diagre/measures.hpp"
#include "diagre/normal_form.hpp"
#include "diagre/oracle.hpp"
#include "diagre/permutation.hpp"
#include "diagre/render.hpp"
#include "diagre/rewrite.hpp"
#include "diagre/term.hpp"
#include "diagre/textio.hpp"
#include "diagre/trace_io.hpp"

namespace {

using namespace diagre;

Signature load_signature(const std::string& path) {
  if (path.empty()) return Signature{};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open signature file: " + path, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_signature(buf.str());
}

Strategy make_strategy(const std::string& name, std::uint64_t seed) {
  if (const char* env = std::getenv("DIAGRE_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') seed = v;
  }
  if (name == "staged") return Strategy::staged();
  if (name == "li" || name == "leftmost-innermost")
    return Strategy::leftmost_innermost();
  if (name == "lo" || name == "leftmost-outermost")
    return Strategy::leftmost_outermost();
  if (name == "random") return Strategy::random_seeded(seed);
  throw ParseError("unknown strategy: " + name, 0);
}

void maybe_write_trace(const std::string& path, const RewriteTrace& trace,
                       Mode mode, const Signature& sig) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open trace file for writing: " + path, 0);
  write_trace(out, trace, mode, sig);
}

struct CommonOpts {
  std::string sig_path;
  std::string strategy = "staged";
  std::uint64_t seed = 0;
  long long max_steps = 0;  // 0 = default budget
  std::string trace_path;
  bool unicode = false;
};

std::optional<long long> step_budget(const CommonOpts& o) {
  if (o.max_steps > 0) return o.max_steps;
  return std::nullopt;
}

int run(CLI::App& app) {
  std::string term_text, term_text2;
  CommonOpts opts;
  std::string mode_name_opt = "pro";
  std::string kind;
  std::string trace_file;
  std::string trace_left, trace_right;
  bool both_conventions = false;
  int max_atoms = 3, max_wires = 4;
  int perm_size = -1;

  auto add_strategy_opts = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", opts.strategy,
                    "staged | li | lo | random (default staged)");
    cmd->add_option("--seed", opts.seed,
                    "seed for the random strategy (DIAGRE_SEED overrides)");
    cmd->add_option("--max-steps", opts.max_steps, "override the step budget");
    cmd->add_option("--trace", opts.trace_path, "write a replayable trace");
    cmd->add_flag("--unicode", opts.unicode, "print with unicode operators");
  };

  CLI::App* normalize_cmd = app.add_subcommand(
      "normalize", "rewrite a term over a signature to its normal form");
  normalize_cmd->add_option("term", term_text, "term text")->required();
  normalize_cmd->add_option("--sig", opts.sig_path, "signature file");
  add_strategy_opts(normalize_cmd);

  CLI::App* canonize_cmd = app.add_subcommand(
      "canonize", "rewrite a symmetry-only term to its canonical form");
  canonize_cmd->add_option("term", term_text, "term text")->required();
  add_strategy_opts(canonize_cmd);

  CLI::App* equiv_cmd =
      app.add_subcommand("equiv", "decide diagrammatic equivalence");
  equiv_cmd->add_option("term1", term_text, "first term")->required();
  equiv_cmd->add_option("term2", term_text2, "second term")->required();
  equiv_cmd->add_option("--sig", opts.sig_path, "signature file");
  equiv_cmd->add_option("--mode", mode_name_opt, "pro | perm (default pro)");
  equiv_cmd->add_option("--trace-left", trace_left,
                        "write the first certificate trace");
  equiv_cmd->add_option("--trace-right", trace_right,
                        "write the second certificate trace");

  CLI::App* interpret_cmd = app.add_subcommand(
      "interpret", "permutation computed by a symmetry-only term");
  interpret_cmd->add_option("term", term_text, "term text")->required();
  interpret_cmd->add_flag(
      "--both", both_conventions,
      "also print the transposed swap reading for comparison");

  CLI::App* measures_cmd =
      app.add_subcommand("measures", "termination quantities of a term");
  measures_cmd->add_option("term", term_text, "term text")->required();
  measures_cmd->add_option("--sig", opts.sig_path, "signature file");
  measures_cmd->add_option("--mode", mode_name_opt, "pro | perm");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify-trace", "replay a trace file and check every step");
  verify_cmd->add_option("file", trace_file, "trace file")->required();

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "bounded exhaustive confluence and soundness check");
  oracle_cmd->add_option("--mode", mode_name_opt, "pro | perm (default pro)");
  oracle_cmd->add_option("--max-atoms", max_atoms, "atom budget (default 3)");
  oracle_cmd->add_option("--max-wires", max_wires, "wire budget (default 4)");
  oracle_cmd->add_option("--perm-size", perm_size,
                         "also check canonical-map bijectivity at this size");
  oracle_cmd->add_option("--sig", opts.sig_path, "signature file (pro mode)");

  CLI::App* render_cmd =
      app.add_subcommand("render", "draw a term as an ASCII diagram");
  render_cmd->add_option("term", term_text, "term text")->required();
  render_cmd->add_option("--sig", opts.sig_path, "signature file");

  CLI::App* check_cmd = app.add_subcommand(
      "check", "test membership in a structural class (exit 0/1)");
  check_cmd->add_option("term", term_text, "term text")->required();
  check_cmd->add_option("--kind", kind, "nf | cf | pp")->required();
  check_cmd->add_option("--sig", opts.sig_path, "signature file");

  app.require_subcommand(1);

  PrintOptions popts;
  popts.unicode = opts.unicode;

  if (app.got_subcommand(normalize_cmd)) {
    popts.unicode = opts.unicode;
    Signature sig = load_signature(opts.sig_path);
    TermPtr t = parse_term(term_text, sig);
    if (!sig.state_and_effect_free())
      throw StateEffectError(
          "pro-mode normalization requires a state-and-effect-free signature");
    NormalizeResult res =
        normalize(preprocess(t), Mode::Pro,
                  make_strategy(opts.strategy, opts.seed), step_budget(opts));
    maybe_write_trace(opts.trace_path, res.trace, Mode::Pro, sig);
    std::cout << print_term(res.term, popts) << "\n";
    return 0;
  }
  if (app.got_subcommand(canonize_cmd)) {
    popts.unicode = opts.unicode;
    Signature sig;
    TermPtr t = parse_term(term_text, sig);
    NormalizeResult res =
        normalize(preprocess(t), Mode::Perm,
                  make_strategy(opts.strategy, opts.seed), step_budget(opts));
    maybe_write_trace(opts.trace_path, res.trace, Mode::Perm, sig);
    std::cout << print_term(res.term, popts) << "\n";
    return 0;
  }
  if (app.got_subcommand(equiv_cmd)) {
    Signature sig = load_signature(opts.sig_path);
    auto mode = mode_from_name(mode_name_opt);
    if (!mode) throw ParseError("unknown mode: " + mode_name_opt, 0);
    if (*mode == Mode::Pro && !sig.state_and_effect_free())
      throw StateEffectError(
          "pro-mode equivalence requires a state-and-effect-free signature");
    TermPtr t1 = parse_term(term_text, sig);
    TermPtr t2 = parse_term(term_text2, sig);
    EquivResult res = equivalent(t1, t2, *mode);
    if (res.left) maybe_write_trace(trace_left, *res.left, *mode, sig);
    if (res.right) maybe_write_trace(trace_right, *res.right, *mode, sig);
    std::cout << (res.equivalent ? "EQUIVALENT" : "DISTINCT") << "\n";
    return res.equivalent ? 0 : 1;
  }
  if (app.got_subcommand(interpret_cmd)) {
    Signature sig;
    TermPtr t = parse_term(term_text, sig);
    std::cout << print_permutation(interpret(t)) << "\n";
    if (both_conventions)
      std::cout << "transposed: "
                << print_permutation(
                       interpret(t, SwapConvention::BlockTransposed))
                << "\n";
    return 0;
  }
  if (app.got_subcommand(measures_cmd)) {
    Signature sig = load_signature(opts.sig_path);
    auto mode = mode_from_name(mode_name_opt);
    if (!mode) throw ParseError("unknown mode: " + mode_name_opt, 0);
    TermPtr t = parse_term(term_text, sig);
    MeasureTuple m = measure_tuple(t, *mode);
    std::cout << "α=" << m.alpha << " β=" << m.beta
              << " γ=" << m.gamma << " δ=" << m.delta
              << " D=" << m.d_param << "\n";
    return 0;
  }
  if (app.got_subcommand(verify_cmd)) {
    std::ifstream in(trace_file);
    if (!in) throw ParseError("cannot open trace file: " + trace_file, 0);
    TraceDocument doc = read_trace(in);
    TraceCheck check = check_trace(doc);
    for (const auto& line : check.step_lines) std::cout << line << "\n";
    if (check.ok) {
      std::cout << "trace OK (" << doc.trace.steps.size() << " steps)\n";
      return 0;
    }
    std::cout << "trace FAILED: " << check.failure << "\n";
    return 1;
  }
  if (app.got_subcommand(oracle_cmd)) {
    OracleOptions oopts;
    auto mode = mode_from_name(mode_name_opt);
    if (!mode) throw ParseError("unknown mode: " + mode_name_opt, 0);
    oopts.mode = *mode;
    oopts.max_atoms = max_atoms;
    oopts.max_wires = max_wires;
    oopts.sig = load_signature(opts.sig_path);
    if (perm_size >= 0) oopts.perm_size = perm_size;
    OracleReport report = run_oracle(oopts, &std::cerr);
    std::cout << format_report(report, oopts) << "\n";
    return report.failures == 0 ? 0 : 1;
  }
  if (app.got_subcommand(render_cmd)) {
    Signature sig = load_signature(opts.sig_path);
    TermPtr t = parse_term(term_text, sig);
    std::cout << render_term(t);
    return 0;
  }
  if (app.got_subcommand(check_cmd)) {
    Signature sig = load_signature(opts.sig_path);
    TermPtr t = parse_term(term_text, sig);
    bool yes = false;
    if (kind == "nf")
      yes = is_normal_form(t);
    else if (kind == "cf")
      yes = is_canonical_form(t);
    else if (kind == "pp")
      yes = is_preprocessed(t);
    else
      throw ParseError("unknown kind: " + kind, 0);
    std::cout << (yes ? "yes" : "no") << "\n";
    return yes ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string-diagram term rewriting: normal and canonical forms"};
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return run(app);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SignatureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PositionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StateEffectError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SymmetryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
