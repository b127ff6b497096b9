#include "phc/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "phc/constructive.hpp"
#include "phc/exact.hpp"
#include "phc/extremal.hpp"
#include "phc/harness.hpp"
#include "phc/io.hpp"

namespace phc {

namespace {

struct Options {
  std::string input = "-";
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
  long long budget_ms = 120'000;
  std::uint64_t budget_nodes = Budget{}.max_nodes;
  std::string theorem;
  std::string family;
  std::string certificate;
  std::string kind = "cross-check";
  std::string steer = "mixed";
  int n = 0;
  int n_max = 0;
  int c = 0;
  int c_max = 0;
  int length = 0;
  bool path = false;
  bool allow_small = false;
  std::size_t samples = 100;
  unsigned threads = 1;
};

int exit_for(Status s) {
  switch (s) {
    case Status::found: return kExitOk;
    case Status::infeasible: return kExitInfeasible;
    case Status::hypothesis_violation: return kExitHypothesis;
    case Status::timeout: return kExitTimeout;
  }
  return kExitUsage;
}

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return read_all(f);
}

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out)
      : o_(o), in_(in), out_(out) {}

  int solve() {
    const ColoredMultigraph g = graph();
    const SolveOutcome res = solve_theorem(g, parse_theorem(o_.theorem), budget());
    emit_outcome(g, res);
    return exit_for(res.status);
  }

  int check() {
    const ColoredMultigraph g = graph();
    const HypothesisReport r = check_hypotheses(g, parse_theorem(o_.theorem));
    if (o_.format == "table") {
      std::ostringstream s;
      s << o_.theorem << ": " << (r.satisfied ? "satisfied" : "violated") << '\n';
      for (const Violation& v : r.violations) {
        s << "  " << v.hypothesis << ": " << v.actual << " (required "
          << v.required << ")";
        if (v.vertex) s << " at vertex " << *v.vertex;
        s << '\n';
      }
      write(s.str());
    } else {
      write(hypothesis_json(r));
    }
    return r.satisfied ? kExitOk : kExitHypothesis;
  }

  int generate() {
    const ExtremalInstance inst = generate_family(o_.family, o_.n, o_.c);
    write(o_.format == "dot" ? export_dot(inst.graph)
                             : serialize_graph_json(inst.graph));
    return kExitOk;
  }

  int verify() {
    const ColoredMultigraph g = graph();
    const Certificate cert =
        parse_certificate_json(read_source(o_.certificate, in_));
    const Verdict v = std::visit(
        [&](const auto& c) {
          if constexpr (std::is_same_v<std::decay_t<decltype(c)>, CycleCertificate>) {
            return verify_proper_cycle(g, c);
          } else {
            return verify_proper_path(g, c);
          }
        },
        cert);
    if (o_.format == "table") {
      write(std::string(v ? "valid" : "invalid") + ": " + v.reason() + "\n");
    } else {
      std::string reason = v.reason();
      std::string escaped;
      for (char ch : reason) {
        if (ch == '"' || ch == '\\') escaped += '\\';
        escaped += ch;
      }
      write(std::string("{\"valid\":") + (v ? "true" : "false") +
            ",\"reason\":\"" + escaped + "\"}\n");
    }
    return v ? kExitOk : kExitInfeasible;
  }

  int oracle() {
    const ColoredMultigraph g = graph();
    SolveOutcome res;
    if (o_.path) {
      SearchConstraints sc;
      sc.target_length = o_.length;
      res = find_proper_path(g, sc, budget());
    } else if (o_.length > 0) {
      res = find_proper_cycle_of_length(g, o_.length, budget());
    } else {
      res = find_proper_ham_cycle(g, budget());
    }
    emit_outcome(g, res);
    return exit_for(res.status);
  }

  int sweep() {
    SweepOptions so{budget(), o_.threads};
    const int n_max = std::max(o_.n, o_.n_max);
    const int c_max = std::max(o_.c, o_.c_max);
    if (o_.kind == "tightness") {
      std::vector<std::pair<int, int>> params;
      for (int n = o_.n; n <= n_max; ++n) {
        for (int c = o_.c; c <= c_max; ++c) {
          if (family_accepts(n, c)) params.emplace_back(n, c);
        }
      }
      if (params.empty()) throw InputError("no valid (n, c) in the given ranges");
      return emit_report(tightness_sweep(o_.family, params, so));
    }
    if (o_.kind == "conjecture") {
      return emit_report(
          conjecture_sweep(o_.n, o_.c, o_.samples, o_.seed, so, o_.allow_small));
    }
    CorpusSpec spec;
    spec.n_min = o_.n;
    spec.n_max = n_max;
    spec.c_min = o_.c;
    spec.c_max = c_max;
    spec.theorem = parse_theorem(o_.theorem);
    spec.require_full_rainbow = spec.theorem == Theorem::two_color_rainbow ||
                                spec.theorem == Theorem::multi_color_rainbow;
    spec.steer = parse_steer(o_.steer);
    spec.samples = o_.samples;
    spec.seed = o_.seed;
    if (o_.kind == "coverage") {
      const CoverageTable t = branch_coverage(spec.theorem, spec, so);
      write(o_.format == "table" ? coverage_table(t) : coverage_json(t));
      return t.unhit.empty() && t.failures == 0 ? kExitOk : kExitInfeasible;
    }
    if (o_.kind == "cross-check") return emit_report(cross_check_corpus(spec, so));
    throw InputError("unknown sweep kind '" + o_.kind + "'");
  }

 private:
  static Steer parse_steer(const std::string& s) {
    static const std::map<std::string, Steer> kSteer{
        {"none", Steer::none},     {"focus", Steer::focus},
        {"sparse-color", Steer::sparse_color},
        {"spread", Steer::spread}, {"mixed", Steer::mixed}};
    auto it = kSteer.find(s);
    if (it == kSteer.end()) throw InputError("unknown steer mode '" + s + "'");
    return it->second;
  }

  bool family_accepts(int n, int c) const {
    try {
      generate_family(o_.family, n, c);
      return true;
    } catch (const InputError&) {
      return false;
    }
  }

  Budget budget() const {
    return Budget{o_.budget_nodes, std::chrono::milliseconds(o_.budget_ms)};
  }

  ColoredMultigraph graph() { return parse_graph_json(read_source(o_.input, in_)); }

  void write(const std::string& s) {
    if (o_.output.empty()) {
      out_ << s;
      return;
    }
    std::ofstream f(o_.output);
    if (!f) throw InputError("cannot write " + o_.output);
    f << s;
  }

  void emit_outcome(const ColoredMultigraph& g, const SolveOutcome& res) {
    if (o_.format == "dot") {
      std::optional<Certificate> cert;
      if (res.cycle) cert = *res.cycle;
      if (res.path) cert = *res.path;
      write(export_dot(g, cert));
    } else if (o_.format == "table") {
      std::ostringstream s;
      s << "status: " << to_string(res.status) << '\n';
      auto seq = [&](const char* name, const std::vector<int>& xs) {
        s << name << ':';
        for (int x : xs) s << ' ' << x;
        s << '\n';
      };
      if (res.cycle) {
        seq("vertices", res.cycle->vertices);
        seq("colors", res.cycle->colors);
      }
      if (res.path) {
        seq("vertices", res.path->vertices);
        seq("colors", res.path->colors);
      }
      for (const std::string& t : res.trace.steps) s << "step: " << t << '\n';
      for (const Violation& v : res.violations) {
        s << "violated: " << v.hypothesis << " (" << v.actual << " vs "
          << v.required << ")\n";
      }
      write(s.str());
    } else {
      write(outcome_json(res));
    }
  }

  int emit_report(const SweepReport& r) {
    write(o_.format == "table" ? report_table(r) : report_json(r));
    return r.summary.disagreements == 0 ? kExitOk : kExitInfeasible;
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Proper Hamiltonian cycles in edge-colored multigraphs", "phc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto common = [&](CLI::App* sub, bool reads_graph) {
    if (reads_graph) {
      sub->add_option("-i,--input", o.input, "Graph JSON path, or - for stdin")
          ->capture_default_str();
    }
    sub->add_option("-o,--output", o.output, "Write here instead of stdout");
    sub->add_option("-f,--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "table"}))
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    sub->add_option("--budget-ms", o.budget_ms, "Wall-clock budget in ms")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--budget-nodes", o.budget_nodes, "Search node budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "Run a theorem's constructive solver");
  common(solve, true);
  solve->add_option("-t,--theorem", o.theorem, "s1, 2colrd2, 3colgen or 3colrd3")
      ->required();

  CLI::App* check = app.add_subcommand("check", "Evaluate a theorem's hypotheses");
  common(check, true);
  check->add_option("-t,--theorem", o.theorem, "Theorem id")->required();

  CLI::App* generate = app.add_subcommand("generate", "Emit a generated family graph");
  common(generate, false);
  generate->add_option("--family", o.family, "Family id")->required();
  generate->add_option("--n", o.n, "Vertex count")->required();
  generate->add_option("--c", o.c, "Color count (where the family takes one)");

  CLI::App* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  common(verify, true);
  verify->add_option("--certificate", o.certificate, "Certificate JSON path")
      ->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Run the exact solver");
  common(oracle, true);
  oracle->add_option("--length", o.length, "Cycle (or path) length; default n");
  oracle->add_flag("--path", o.path, "Search for a proper path instead");

  CLI::App* sweep = app.add_subcommand("sweep", "Run a harness sweep");
  common(sweep, false);
  sweep->add_option("--kind", o.kind, "cross-check, coverage, tightness or conjecture")
      ->check(CLI::IsMember({"cross-check", "coverage", "tightness", "conjecture"}))
      ->capture_default_str();
  sweep->add_option("-t,--theorem", o.theorem, "Theorem id");
  sweep->add_option("--family", o.family, "Family id (tightness)");
  sweep->add_option("--n", o.n, "Vertex count, or range start")->required();
  sweep->add_option("--n-max", o.n_max, "Range end");
  sweep->add_option("--c", o.c, "Color count, or range start")->required();
  sweep->add_option("--c-max", o.c_max, "Range end");
  sweep->add_option("--samples", o.samples, "Corpus size")->capture_default_str();
  sweep->add_option("--steer", o.steer, "none, focus, sparse-color, spread, mixed")
      ->capture_default_str();
  sweep->add_option("--threads", o.threads, "Workers; 0 = all cores")
      ->capture_default_str();
  sweep->add_flag("--allow-small", o.allow_small, "Conjecture sweep below n = 10");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Runner run(o, in, out);
  try {
    if (*solve) return run.solve();
    if (*check) return run.check();
    if (*generate) return run.generate();
    if (*verify) return run.verify();
    if (*oracle) return run.oracle();
    if (*sweep) {
      if (o.kind == "tightness" && o.family.empty()) {
        throw InputError("--kind tightness needs --family");
      }
      if ((o.kind == "cross-check" || o.kind == "coverage") && o.theorem.empty()) {
        throw InputError("--kind " + o.kind + " needs --theorem");
      }
      return run.sweep();
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace phc
