// Command-line front end: parse/print, reduction with traces, frame
// evaluation, validity decision, normal forms, and the randomized law
// runner. Line-oriented output, stable exit codes:
//   0  success / valid
//   1  decide: not valid
//   2  formula parse error
//   3  frame format or depth error
//   4  frame universe too large for the oracle
//   64 usage error

#include "gradual/decide.hpp"
#include "gradual/laws.hpp"
#include "gradual/parser.hpp"
#include "gradual/reduce.hpp"
#include "gradual/semantics.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitNotValid = 1;
constexpr int kExitParse = 2;
constexpr int kExitFrame = 3;
constexpr int kExitTooLarge = 4;
constexpr int kExitUsage = 64;

std::optional<std::string> slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return in.bad() ? std::nullopt : std::optional<std::string>(ss.str());
}

// input is a literal formula, `-` for stdin, or `@path` for a file
std::optional<std::string> resolve_input(const std::string& arg, std::string& err) {
  if (arg == "-") {
    auto s = slurp(std::cin);
    if (!s) err = "could not read stdin";
    return s;
  }
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) {
      err = "could not open '" + arg.substr(1) + "'";
      return std::nullopt;
    }
    auto s = slurp(f);
    if (!s) err = "could not read '" + arg.substr(1) + "'";
    return s;
  }
  return arg;
}

int parse_formula(const std::string& arg, gradual::Formula& out) {
  std::string io_err;
  auto text = resolve_input(arg, io_err);
  if (!text) {
    std::cerr << "error: " << io_err << "\n";
    return kExitParse;
  }
  auto r = gradual::parse(*text);
  if (!r.ok()) {
    const auto& e = r.error();
    std::cerr << "error: " << gradual::to_string(e.code) << " at " << e.span.begin << ".."
              << e.span.end << ": " << e.message << "\n";
    return kExitParse;
  }
  out = r.value();
  return 0;
}

int run_parse(const std::string& input, bool ast) {
  gradual::Formula f;
  if (int rc = parse_formula(input, f)) return rc;
  std::cout << (ast ? gradual::to_interchange(f) : gradual::pretty(f)) << "\n";
  return 0;
}

int run_reduce(const std::string& input, bool trace, const std::string& order) {
  gradual::Formula f;
  if (int rc = parse_formula(input, f)) return rc;
  gradual::ReductionStrategy strategy;
  if (order == "deterministic") {
    strategy = gradual::ReductionStrategy::deterministic();
  } else if (order.rfind("random:", 0) == 0) {
    try {
      strategy = gradual::ReductionStrategy::random(std::stoull(order.substr(7)));
    } catch (const std::exception&) {
      std::cerr << "error: bad --order seed '" << order << "'\n";
      return kExitUsage;
    }
  } else {
    std::cerr << "error: --order must be deterministic or random:<seed>\n";
    return kExitUsage;
  }
  gradual::Trace t = gradual::reduce_to_uce(f, strategy);
  if (trace)
    for (const auto& s : t.steps) std::cout << gradual::trace_line(s) << "\n";
  std::cout << gradual::pretty(t.final) << "\n";
  return 0;
}

int run_negate(const std::string& input) {
  gradual::Formula f;
  if (int rc = parse_formula(input, f)) return rc;
  std::cout << gradual::pretty(gradual::recursive_reduce(gradual::reduce(f))) << "\n";
  return 0;
}

int run_eval(const std::string& input, const std::string& frame_path) {
  gradual::Formula f;
  if (int rc = parse_formula(input, f)) return rc;
  std::ifstream file(frame_path);
  if (!file) {
    std::cerr << "error: could not open frame file '" << frame_path << "'\n";
    return kExitFrame;
  }
  auto text = slurp(file);
  if (!text) {
    std::cerr << "error: could not read frame file '" << frame_path << "'\n";
    return kExitFrame;
  }
  try {
    gradual::ValuationFrame m = gradual::frame_from_text(*text);
    std::cout << gradual::eval(m, gradual::reduce(f)) << "\n";
    return 0;
  } catch (const gradual::FrameFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFrame;
  } catch (const gradual::DepthError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFrame;
  }
}

int run_decide(const std::string& input, const std::string& engine, bool witness) {
  gradual::Formula f;
  if (int rc = parse_formula(input, f)) return rc;
  if (engine == "oracle") {
    try {
      gradual::Verdict v = gradual::classify_oracle(f);
      std::cout << gradual::to_string(v.cls) << "\n";
      if (witness) {
        if (v.witness_true)
          std::cout << "witness_true " << gradual::frame_to_json(*v.witness_true).dump() << "\n";
        if (v.witness_false)
          std::cout << "witness_false " << gradual::frame_to_json(*v.witness_false).dump() << "\n";
      }
      return v.cls == gradual::VerdictClass::Valid ? 0 : kExitNotValid;
    } catch (const gradual::UniverseTooLargeError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitTooLarge;
    }
  }
  gradual::DecideEngine eng;
  if (engine == "levelwise") {
    eng = gradual::DecideEngine::Levelwise;
  } else if (engine == "faithful") {
    eng = gradual::DecideEngine::Faithful;
  } else {
    std::cerr << "error: --engine must be levelwise, faithful, or oracle\n";
    return kExitUsage;
  }
  gradual::DecideReport rep = gradual::decide_valid(f, eng);
  std::cout << (rep.result ? "valid" : "invalid") << "\n";
  return rep.result ? 0 : kExitNotValid;
}

int run_normal_form(const std::string& input, bool dnf) {
  gradual::Formula f;
  if (int rc = parse_formula(input, f)) return rc;
  gradual::Formula uce = gradual::reduce(f);
  std::cout << gradual::pretty(dnf ? gradual::to_dnf(uce) : gradual::to_cnf(uce)) << "\n";
  return 0;
}

int run_check_laws(const gradual::laws::LawConfig& cfg) {
  bool all_ok = true;
  for (const auto& res : gradual::laws::run_laws(cfg)) {
    std::cout << res.name << ": pass=" << res.pass << " fail=" << res.fail;
    if (!res.ok()) std::cout << "  first failure: " << res.first_failure;
    std::cout << "\n";
    all_ok = all_ok && res.ok();
  }
  std::cout << (all_ok ? "all laws hold" : "LAW VIOLATIONS FOUND") << "\n";
  return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradual - reasoner for gradual classical logic"};
  app.require_subcommand(1);

  std::string input, order = "deterministic", engine = "levelwise", frame_path;
  bool ast = false, trace = false, witness = false;
  gradual::laws::LawConfig law_cfg;

  auto* cmd_parse = app.add_subcommand("parse", "parse and pretty-print a formula");
  cmd_parse->add_option("input", input, "formula, - for stdin, @file")->required();
  cmd_parse->add_flag("--ast", ast, "print the interchange tree instead");

  auto* cmd_reduce = app.add_subcommand("reduce", "normalize to unit-chain expansion");
  cmd_reduce->add_option("input", input)->required();
  cmd_reduce->add_flag("--trace", trace, "print one line per reduction step");
  cmd_reduce->add_option("--order", order, "deterministic | random:<seed>");

  auto* cmd_negate = app.add_subcommand("negate", "canonical negation of the reduct");
  cmd_negate->add_option("input", input)->required();

  auto* cmd_eval = app.add_subcommand("eval", "evaluate under a frame file");
  cmd_eval->add_option("input", input)->required();
  cmd_eval->add_option("--frame", frame_path, "frame JSON file")->required();

  auto* cmd_decide = app.add_subcommand("decide", "decide validity");
  cmd_decide->add_option("input", input)->required();
  cmd_decide->add_option("--engine", engine, "levelwise | faithful | oracle");
  cmd_decide->add_flag("--witness", witness, "print witness frame(s); oracle only");

  auto* cmd_dnf = app.add_subcommand("dnf", "disjunctive normal form of the reduct");
  cmd_dnf->add_option("input", input)->required();
  auto* cmd_cnf = app.add_subcommand("cnf", "conjunctive normal form of the reduct");
  cmd_cnf->add_option("input", input)->required();

  auto* cmd_laws = app.add_subcommand("check-laws", "run the randomized law suites");
  cmd_laws->add_option("--iters", law_cfg.iters, "instances per law");
  cmd_laws->add_option("--seed", law_cfg.seed, "random seed");
  cmd_laws->add_option("--max-atoms", law_cfg.max_atoms, "atom pool size")
      ->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  cmd_laws->add_option("--max-depth", law_cfg.max_depth, "chain depth bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e); // prints the message
    return kExitUsage;
  }

  if (witness && engine != "oracle") {
    std::cerr << "error: --witness requires --engine oracle\n";
    return kExitUsage;
  }

  if (cmd_parse->parsed()) return run_parse(input, ast);
  if (cmd_reduce->parsed()) return run_reduce(input, trace, order);
  if (cmd_negate->parsed()) return run_negate(input);
  if (cmd_eval->parsed()) return run_eval(input, frame_path);
  if (cmd_decide->parsed()) return run_decide(input, engine, witness);
  if (cmd_dnf->parsed()) return run_normal_form(input, true);
  if (cmd_cnf->parsed()) return run_normal_form(input, false);
  if (cmd_laws->parsed()) return run_check_laws(law_cfg);
  return kExitUsage;
}
