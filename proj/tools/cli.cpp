#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "conway/automaton_json.hpp"
#include "conway/error.hpp"
#include "conway/group.hpp"
#include "conway/ratexpr.hpp"
#include "conway/semiring.hpp"
#include "conway/series.hpp"
#include "conway/verify.hpp"

namespace conway::cli {
namespace {

struct Config {
  std::string semiring = "nat";
  std::string alphabet = "xy";
  std::size_t max_len = 6;
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::string out;
  std::string suite;
  std::string expr;
  std::string file;
};

const std::vector<std::string> kSemirings{"bool", "nat", "natinf", "natmat2"};
const std::vector<std::string> kSuites{"basic",      "conway", "matrix", "permutation", "block",
                                       "duality", "functorial", "group", "kleene"};

template <class F>
int with_semiring(const std::string& name, F&& f) {
  if (name == "bool") return f(BooleanSemiring{});
  if (name == "nat") return f(NatSemiring{});
  if (name == "natinf") return f(NatInfSemiring{});
  if (name == "natmat2") return f(NatMat2Semiring{});
  throw FormatError("unknown semiring \"" + name + "\"");
}

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("-s,--semiring", cfg.semiring, "coefficient semiring")->check(CLI::IsMember(kSemirings));
  cmd->add_option("-a,--alphabet", cfg.alphabet, "alphabet letters")->check([](const std::string& a) {
    if (a.empty()) return std::string("alphabet must not be empty");
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.find(a[i], i + 1) != std::string::npos) return "alphabet repeats '" + std::string(1, a[i]) + "'";
    return std::string();
  });
  cmd->add_option("-L,--maxlen", cfg.max_len, "truncation length");
}

int cmd_eval(const Config& cfg, std::ostream& out) {
  return with_semiring(cfg.semiring, [&](const auto& s0) {
    const RatExpr e = parse_expression(cfg.expr, cfg.alphabet);
    const SeriesSemiring r(s0, cfg.alphabet, cfg.max_len);
    out << r.dump(eval_series(e, r));
    return kOk;
  });
}

void write_output(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw Error("cannot write " + cfg.out);
  file << text;
}

int cmd_compile(const Config& cfg, std::ostream& out) {
  return with_semiring(cfg.semiring, [&](const auto& s0) {
    const RatExpr e = parse_expression(cfg.expr, cfg.alphabet);
    write_output(cfg, automaton_to_json(compile(e, s0, cfg.alphabet)).dump(2) + "\n", out);
    return kOk;
  });
}

/// The semiring named in the file decides the coefficients; -s is not consulted.
int cmd_behavior(const Config& cfg, std::ostream& out) {
  std::ifstream file(cfg.file);
  if (!file) throw FormatError("cannot read " + cfg.file);
  json j;
  try {
    j = json::parse(file);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("semiring") || !j["semiring"].is_string())
    throw FormatError("automaton needs a string \"semiring\" field");
  return with_semiring(j["semiring"].get<std::string>(), [&](const auto& s0) {
    const auto a = automaton_from_json(j, s0);
    const SeriesSemiring r(s0, a.alphabet(), cfg.max_len);
    out << r.dump(behavior(a, cfg.max_len));
    return kOk;
  });
}

int cmd_check(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end()) {
    err << "unknown suite \"" << cfg.suite << "\"; expected one of:";
    for (const auto& s : kSuites) err << ' ' << s;
    err << '\n';
    return kUnknownSuite;
  }
  return with_semiring(cfg.semiring, [&](const auto& s0) {
    CheckReport report;
    if (cfg.suite == "kleene") {
      report = check_kleene(s0, cfg.alphabet, cfg.max_len, cfg.seed, cfg.cases);
    } else {
      const IdentityVerifier v(SeriesSemiring(s0, cfg.alphabet, cfg.max_len), cfg.seed);
      if (cfg.suite == "basic") report = v.basic_star_laws(cfg.cases);
      else if (cfg.suite == "conway") report = v.conway_scalar(cfg.cases);
      else if (cfg.suite == "matrix") report = v.matrix_conway(cfg.cases);
      else if (cfg.suite == "permutation") report = v.permutation(cfg.cases);
      else if (cfg.suite == "block") report = v.block_invariance(cfg.cases);
      else if (cfg.suite == "duality") report = v.transpose_duality(cfg.cases);
      else if (cfg.suite == "functorial") report = v.functorial_star(cfg.cases);
      else report = v.group_identity(standard_groups(), cfg.cases);
    }
    out << report.summary();
    return report.passed() ? kOk : kCheckFailed;
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Partial Conway semiring toolkit: rational expressions, weighted automata and identity checks"};
  app.name(args.empty() ? "conway" : args[0]);
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "print the coefficients of an expression up to length L");
  eval->add_option("-e,--expr", cfg.expr, "rational expression")->required();
  add_common(eval, cfg);

  auto* comp = app.add_subcommand("compile", "compile an expression to a JSON automaton");
  comp->add_option("-e,--expr", cfg.expr, "rational expression")->required();
  comp->add_option("-o,--out", cfg.out, "output file (default: stdout)");
  add_common(comp, cfg);

  auto* beh = app.add_subcommand("behavior", "print the behavior of a JSON automaton up to length L");
  beh->add_option("file", cfg.file, "automaton JSON file")->required();
  add_common(beh, cfg);

  auto* check = app.add_subcommand("check", "run an identity suite on seeded random inputs");
  check->add_option("-t,--suite", cfg.suite, "suite name")->required();
  check->add_option("--seed", cfg.seed, "random seed");
  check->add_option("--cases", cfg.cases, "number of cases");
  add_common(check, cfg);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*eval) return cmd_eval(cfg, out);
    if (*comp) return cmd_compile(cfg, out);
    if (*beh) return cmd_behavior(cfg, out);
    return cmd_check(cfg, out, err);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kSyntaxError;
  } catch (const IllStarred& e) {
    err << "ill-starred expression: " << e.what() << '\n';
    return kIllStarred;
  } catch (const Overflow& e) {
    err << "overflow: " << e.what() << '\n';
    return kOverflow;
  } catch (const FormatError& e) {
    err << "malformed automaton: " << e.what() << '\n';
    return kMalformedJson;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kOtherError;
  }
}

}  // namespace conway::cli
