#include "qcw/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qcw/io.hpp"
#include "qcw/svg.hpp"

namespace qcw {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  Graph graph;
  Family family;
};

int require_n(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError(cfg.subcommand + ": give --n or --in");
  return *cfg.n;
}

Inputs load_family(const RunConfig& cfg) {
  Inputs in;
  if (cfg.input) {
    json j;
    try {
      j = json::parse(read_text_file(*cfg.input));
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    in.family = family_from_json(j);
  } else {
    in.family = build_measurements(require_n(cfg));
  }
  in.graph = build_family_graph(in.family.n);
  return in;
}

Graph load_graph(const RunConfig& cfg) {
  if (cfg.input) {
    try {
      return graph_from_json(json::parse(read_text_file(*cfg.input)));
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("malformed JSON: ") + e.what());
    }
  }
  return build_family_graph(require_n(cfg));
}

// An empty format selects the subcommand's first listed format.
void check_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  if (cfg.format.empty()) return;
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError(cfg.subcommand + " does not support --format " + cfg.format);
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output) {
    write_atomic(*cfg.output, text);
  } else {
    out << text;
  }
}

void emit_json(const RunConfig& cfg, std::ostream& out, const json& j) { emit(cfg, out, j.dump(2) + "\n"); }

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(15);
  ss << x;
  return ss.str();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg, {"json"});
  const Inputs in = load_family(cfg);
  const VerificationReport r = verify(in.graph, in.family, cfg.tol);
  emit_json(cfg, out, report_to_json(r));
  if (!cfg.quiet)
    err << "verify n=" << r.n << " d=" << r.d << ": exclusivity " << (r.exclusivity.ok ? "ok" : "FAIL")
        << " (worst " << fmt(r.exclusivity.worst_edge_overlap) << "), hardy spans "
        << (r.hardy_conditions_ok ? "ok" : "FAIL") << ", P(1|1)=" << fmt(r.p11) << ", beta=" << fmt(r.beta)
        << ", alpha=" << r.classical_alpha << " -> " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_hardy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg, {"json"});
  const Inputs in = load_family(cfg);
  const VerificationReport r = hardy_quantum_report(in.graph, in.family, cfg.tol);
  const bool ok = r.hardy_conditions_ok && r.p11 > cfg.tol;
  emit_json(cfg, out,
            {{"n", r.n},
             {"hardy_applicable", r.hardy_applicable},
             {"hardy_conditions_ok", r.hardy_conditions_ok},
             {"residual_a", r.residual_a},
             {"residual_b", r.residual_b},
             {"p11", r.p11}});
  if (!cfg.quiet) err << "hardy n=" << r.n << ": P(1|1)=" << fmt(r.p11) << (ok ? " PASS" : " FAIL") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_kcbs(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg, {"json"});
  const Inputs in = load_family(cfg);
  const double beta = kcbs_value(in.family);
  const int alpha = independence_number(in.graph);
  const bool violated = beta > alpha + cfg.tol;
  emit_json(cfg, out, {{"n", in.family.n}, {"beta", beta}, {"classical_alpha", alpha}, {"violated", violated}});
  if (!cfg.quiet) err << "kcbs n=" << in.family.n << ": beta=" << fmt(beta) << " vs alpha=" << alpha << "\n";
  return violated ? kExitOk : kExitCheckFailed;
}

int cmd_classical(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg, {"json"});
  const Graph g = load_graph(cfg);
  const ClassicalAnalysis c = classical_analysis(g);
  json j = classical_to_json(c);
  j["n"] = g.n();
  j["independence_number"] = independence_number(g);
  emit_json(cfg, out, j);
  if (!cfg.quiet) err << "classical n=" << g.n() << ": alpha=" << c.alpha << "\n";
  return c.hardy_possible_with_x1.value_or(false) ? kExitCheckFailed : kExitOk;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  check_format(cfg, {"json"});
  emit_json(cfg, out, graph_to_json(build_family_graph(require_n(cfg))));
  return kExitOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg, {"json"});
  const Family fam = build_measurements(require_n(cfg));
  emit_json(cfg, out, family_to_json(fam));
  if (!cfg.quiet) err << "constructed n=" << fam.n << " d=" << fam.d << "\n";
  return kExitOk;
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg, {"json"});
  const Inputs in = load_family(cfg);
  PowerIterationOptions opts;
  opts.restarts = cfg.restarts;
  opts.iters = cfg.iters;
  opts.tol = cfg.power_tol;
  opts.seed = cfg.seed;
  const auto opt = max_violation_state(in.family, opts);
  emit_json(cfg, out, optimum_to_json(opt));
  if (!cfg.quiet)
    err << "optimize n=" << in.family.n << ": lambda_max=" << fmt(opt.lambda_max)
        << (opt.converged ? "" : " (not converged)") << "\n";
  return opt.converged ? kExitOk : kExitCheckFailed;
}

int cmd_majorana(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  check_format(cfg, {"json", "svg"});
  const Inputs in = load_family(cfg);
  std::vector<LabeledConstellation> items;
  items.push_back({"ψ", constellation(in.family.state)});
  for (const auto& [v, vec] : in.family.vectors) items.push_back({std::to_string(v), constellation(vec)});
  if (cfg.format == "svg") {
    emit(cfg, out, render_svg(items));
  } else {
    json list = json::array();
    for (const auto& item : items) {
      json c = constellation_to_json(item.stars);
      c["label"] = item.label;
      list.push_back(c);
    }
    emit_json(cfg, out, {{"n", in.family.n}, {"d", in.family.d}, {"constellations", list}});
  }
  return kExitOk;
}

int cmd_onc(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg, {"json"});
  const int n = require_n(cfg);
  double delta = 0;
  if (cfg.delta) {
    delta = *cfg.delta;
  } else {
    // Observed violation of the constructed family over the classical bound.
    delta = kcbs_value(build_measurements(n)) - independence_number(build_family_graph(n));
  }
  const OncThreshold t = onc_threshold(n, delta);
  emit_json(cfg, out, onc_to_json(t));
  if (!cfg.quiet) err << "onc n=" << n << ": epsilon < " << fmt(t.epsilon_bound) << "\n";
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg, {"json"});
  const Inputs in = load_family(cfg);
  const auto meas = perturb_family(in.graph, in.family, cfg.noise, cfg.seed);
  const SimulationResult r = simulate_contexts(meas, in.family.state, cfg.shots, cfg.seed);
  json j = simulation_to_json(r);
  j["n"] = in.family.n;
  j["eta"] = cfg.noise;
  emit_json(cfg, out, j);
  if (!cfg.quiet)
    err << "simulate n=" << in.family.n << " shots=" << r.shots << ": beta=" << fmt(r.empirical_beta)
        << " epsilon_tv=" << fmt(r.epsilon_estimate) << "\n";
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  check_format(cfg, {"csv"});
  if (cfg.seeds < 1) throw UsageError("sweep needs --seeds >= 1");
  const Inputs in = load_family(cfg);
  const int alpha = independence_number(in.graph);
  std::ostringstream csv;
  csv.precision(15);
  csv << kSweepCsvHeader << "\n";
  for (double eta : cfg.etas) {
    for (int k = 0; k < cfg.seeds; ++k) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
      const auto meas = perturb_family(in.graph, in.family, eta, seed);
      const SimulationResult r = simulate_contexts(meas, in.family.state, cfg.shots, seed);
      const double bound = onc_threshold(in.family.n, std::max(0.0, r.empirical_beta - alpha)).epsilon_bound;
      csv << in.family.n << "," << eta << "," << seed << "," << cfg.shots << "," << r.empirical_beta << ","
          << r.epsilon_estimate << "," << bound << "\n";
    }
  }
  emit(cfg, out, csv.str());
  return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const std::string& s = cfg.subcommand;
    if (s == "construct") return cmd_construct(cfg, out, err);
    if (s == "graph") return cmd_graph(cfg, out, err);
    if (s == "verify") return cmd_verify(cfg, out, err);
    if (s == "kcbs") return cmd_kcbs(cfg, out, err);
    if (s == "hardy") return cmd_hardy(cfg, out, err);
    if (s == "classical") return cmd_classical(cfg, out, err);
    if (s == "optimize") return cmd_optimize(cfg, out, err);
    if (s == "majorana") return cmd_majorana(cfg, out, err);
    if (s == "onc") return cmd_onc(cfg, out, err);
    if (s == "simulate") return cmd_simulate(cfg, out, err);
    if (s == "sweep") return cmd_sweep(cfg, out, err);
    err << "error: unknown subcommand '" << s << "'\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("QCW_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: QCW_SEED must be an unsigned integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Qudit contextuality workbench"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of graph vertices");
    sub->add_option("--in", cfg.input, "input JSON (family, or graph for classical)");
    sub->add_option("--out", cfg.output, "write output here instead of stdout");
    sub->add_option("--format", cfg.format, "json|csv|svg");
    sub->add_option("--tol", cfg.tol, "tolerance for physics checks");
    sub->add_option("--seed", cfg.seed, "RNG seed (default $QCW_SEED or 0)");
    sub->add_flag("--quiet", cfg.quiet, "suppress the summary line");
  };

  const std::vector<std::pair<const char*, const char*>> subcommands{
      {"construct", "emit the measurement family JSON"},
      {"graph", "emit the compatibility graph JSON"},
      {"verify", "run every quantum and classical check"},
      {"kcbs", "KCBS value against the classical bound"},
      {"hardy", "Hardy span conditions and P(1|1)"},
      {"classical", "exhaustive non-contextual assignment analysis"},
      {"optimize", "best KCBS value over states for fixed measurements"},
      {"majorana", "Majorana constellations (json or svg)"},
      {"onc", "epsilon-ONC precision threshold"},
      {"simulate", "finite-shot measurement simulation"},
      {"sweep", "simulation sweep over noise levels, CSV"},
  };
  for (const auto& [name, help] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    const std::string n = name;
    if (n == "optimize") {
      sub->add_option("--restarts", cfg.restarts);
      sub->add_option("--iters", cfg.iters);
      sub->add_option("--power-tol", cfg.power_tol);
    } else if (n == "onc") {
      sub->add_option("--delta", cfg.delta, "observed violation minus classical bound");
    } else if (n == "simulate" || n == "sweep") {
      sub->add_option("--shots", cfg.shots);
      if (n == "simulate") sub->add_option("--noise", cfg.noise, "perturbation strength eta");
      if (n == "sweep") {
        sub->add_option("--noise", cfg.etas, "perturbation strengths to sweep")->expected(1, -1);
        sub->add_option("--seeds", cfg.seeds, "seeds per noise level");
      }
    }
    sub->callback([&cfg, n] { cfg.subcommand = n; });
  }

  std::vector<std::string> storage{"qcw"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(cfg, out, err);
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return main_entry(args, std::cout, std::cerr);
}

}  // namespace qcw
