// Copyright 2026 The tpqsdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpqsdp/chebyshev.hpp"
#include "tpqsdp/exactspec.hpp"
#include "tpqsdp/hamlearn.hpp"
#include "tpqsdp/mmw.hpp"
#include "tpqsdp/models.hpp"
#include "tpqsdp/resources.hpp"
#include "tpqsdp/sparse_operator.hpp"

#ifndef TPQSDP_VERSION
#define TPQSDP_VERSION "unknown"
#endif

namespace tpqsdp::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A subcommand's settable keys. Scalars may come from flags; every key may
// come from the JSON file passed with --config. Flags win.
class Settings {
 public:
  Settings(CLI::App* app, json defaults, const std::map<std::string, std::string>& help)
      : defaults_(std::move(defaults)) {
    app->add_option("--config", config_path_, "JSON file with settings for this command");
    for (const auto& [key, value] : defaults_.items()) {
      if (value.is_array() || value.is_object()) continue;
      std::string name = "--" + key;
      std::replace(name.begin(), name.end(), '_', '-');
      const auto it = help.find(key);
      const std::string text = it == help.end() ? std::string() : it->second;
      if (value.is_boolean()) {
        options_[key] = app->add_flag(name, flags_[key], text);
      } else {
        options_[key] = app->add_option(name, strings_[key], text);
      }
    }
  }

  json resolve() const {
    json r = defaults_;
    if (!config_path_.empty()) {
      std::ifstream in(config_path_);
      if (!in) throw ConfigError("cannot open config file " + config_path_);
      json file;
      try {
        file = json::parse(in);
      } catch (const json::exception& e) {
        throw ConfigError("malformed config file: " + std::string(e.what()));
      }
      if (!file.is_object()) throw ConfigError("config file must hold a JSON object");
      for (const auto& [key, value] : file.items()) {
        if (!defaults_.contains(key)) throw ConfigError("unknown config key '" + key + "'");
        check_type(key, defaults_[key], value);
        r[key] = value;
      }
    }
    for (const auto& [key, opt] : options_) {
      if (opt->count() == 0) continue;
      const json& d = defaults_[key];
      if (d.is_boolean()) {
        r[key] = flags_.at(key);
      } else {
        r[key] = convert(key, d, strings_.at(key));
      }
    }
    return r;
  }

 private:
  static void check_type(const std::string& key, const json& d, const json& v) {
    const bool ok = d.is_null() ? (v.is_null() || v.is_number() || v.is_string())
                  : d.is_number_integer() ? v.is_number_integer()
                  : d.is_number() ? v.is_number()
                  : d.is_boolean() ? v.is_boolean()
                  : d.is_string() ? v.is_string()
                  : d.is_array() ? v.is_array()
                  : true;
    if (!ok) throw ConfigError("config key '" + key + "' has the wrong type");
  }

  static json convert(const std::string& key, const json& d, const std::string& s) {
    try {
      std::size_t used = 0;
      if (d.is_number_integer()) {
        const long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
      } else if (d.is_number() || d.is_null()) {
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
      } else {
        return s;
      }
    } catch (const std::exception&) {
    }
    throw ConfigError("bad value '" + s + "' for --" + key);
  }

  json defaults_;
  std::string config_path_;
  std::map<std::string, std::string> strings_;
  std::map<std::string, bool> flags_;
  std::map<std::string, CLI::Option*> options_;
};

const std::map<std::string, std::string> kHelp = {
    {"seed", "Random seed"},
    {"backend", "exact | krylov | qet"},
    {"epsilon", "SDP accuracy"},
    {"out", "Output directory"},
    {"threads", "Worker threads for ensemble sampling"},
    {"timing", "Fill the seconds column of the trace"},
    {"batches", "Median-of-means batch count (odd)"},
    {"samples_per_batch", "TPQ states per batch"},
    {"xi", "TPQ target deviation"},
    {"stride", "Relative-entropy evaluation stride"},
    {"model", "hubbard | xxz"},
    {"beta", "Inverse temperature"},
};

json solver_defaults() {
  return {{"epsilon", 0.05},  {"backend", "krylov"},       {"seed", 0},
          {"threads", 1},     {"batches", 3},              {"samples_per_batch", 25},
          {"xi", 0.05},       {"krylov_max_dim", 64},      {"timing", false},
          {"out", "out"}};
}

json model_defaults() {
  return {{"model", "hubbard"}, {"nx", 2}, {"ny", 2}, {"n", 10},  {"mu", 1.0},
          {"w", 0.5},           {"u", 1.2}, {"j", 1.0}, {"delta", 0.5}, {"h", json::array()},
          {"beta", 0.4}};
}

json merged(json a, const json& b) {
  for (const auto& [k, v] : b.items()) a[k] = v;
  return a;
}

mmw::SolverOptions solver_options(const json& c) {
  mmw::SolverOptions o;
  const std::string backend = c["backend"];
  if (backend == "exact") {
    o.backend = mmw::SolverBackend::exact;
  } else {
    o.backend = mmw::SolverBackend::tpq;
    o.ensemble.backend = tpq::parse_backend(backend);
  }
  o.seed = c["seed"].get<std::uint64_t>();
  o.ensemble.seed = o.seed;
  o.ensemble.threads = c["threads"].get<int>();
  o.ensemble.batches = c["batches"].get<int>();
  o.ensemble.samples_per_batch = c["samples_per_batch"].get<int>();
  o.ensemble.xi = c["xi"].get<double>();
  o.ensemble.krylov.max_dim = c["krylov_max_dim"].get<int>();
  o.ensemble.validate();
  o.record_time = c["timing"].get<bool>();
  return o;
}

learn::ModelSpec model_spec(const json& c) {
  learn::ModelSpec m;
  const std::string kind = c["model"];
  if (kind == "hubbard") {
    m.kind = learn::ModelKind::hubbard;
  } else if (kind == "xxz") {
    m.kind = learn::ModelKind::xxz;
  } else {
    throw ConfigError("unknown model '" + kind + "'");
  }
  m.lattice = {c["nx"].get<int>(), c["ny"].get<int>()};
  m.chain_length = c["n"].get<int>();
  m.mu = c["mu"];
  m.w = c["w"];
  m.u = c["u"];
  m.j = c["j"];
  m.delta = c["delta"];
  m.h = c["h"].get<std::vector<double>>();
  return m;
}

ops::ModelTerms model_terms(const learn::ModelSpec& m, std::uint64_t seed) {
  if (m.kind == learn::ModelKind::hubbard) {
    return ops::build_hubbard_spinless(m.lattice, m.mu, m.w, m.u);
  }
  // Reuse the learning-instance field draw so both commands agree.
  std::vector<double> h = m.h;
  if (h.empty()) {
    learn::ModelSpec copy = m;
    copy.h.clear();
    h = learn::make_instance(copy, 0.0, 0.5, seed).model.h;
  }
  return ops::build_xxz(m.chain_length, m.j, m.delta, h);
}

void write_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

json manifest(const std::string& command, const json& config) {
  return {{"tool", "tpqsdp"},
          {"version", TPQSDP_VERSION},
          {"command", command},
          {"seed", config.contains("seed") ? config["seed"] : json(nullptr)},
          {"config", config}};
}

std::string trace_csv(const mmw::SolverTrace& t) {
  std::ostringstream os;
  t.write_csv(os);
  return os.str();
}

json nan_safe(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

mmw::SdpProblem problem_from(const json& c) {
  mmw::SdpProblem p;
  p.n = c["n"].get<int>();
  p.epsilon = c["epsilon"].get<double>();
  p.trace_bound = c["trace_bound"].get<double>();
  auto read_op = [&](const json& spec, const std::string& what) {
    std::string text;
    if (spec.is_string()) {
      text = spec.get<std::string>();
    } else if (spec.is_object() && spec.contains("op_file")) {
      std::ifstream in(spec["op_file"].get<std::string>());
      if (!in) throw ConfigError(what + ": cannot open operator file");
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else {
      throw ConfigError(what + ": expected operator text or {\"op_file\": path}");
    }
    // Operator text uses ';' or newlines between terms.
    std::replace(text.begin(), text.end(), ';', '\n');
    return ops::PauliSum::parse(text);
  };
  int index = 0;
  for (const auto& con : c["constraints"]) {
    const std::string what = "constraint " + std::to_string(index++);
    if (!con.is_object()) throw ConfigError(what + ": expected an object");
    for (const auto& [k, v] : con.items()) {
      if (k != "op" && k != "op_file" && k != "bound" && k != "label") {
        throw ConfigError(what + ": unknown key '" + k + "'");
      }
    }
    if (!con.contains("bound")) throw ConfigError(what + ": missing bound");
    mmw::Constraint k;
    k.op = read_op(con.contains("op") ? con["op"] : con, what);
    k.bound = con["bound"].get<double>();
    k.label = con.value("label", "");
    p.constraints.push_back(std::move(k));
  }
  if (!c["objective"].is_null()) p.objective = read_op(c["objective"], "objective");
  if (!c["rescale"].is_null()) p = mmw::rescale_problem(p, c["rescale"].get<double>());
  p.validate();
  return p;
}

int run_solve(const json& c, std::ostream& out) {
  const mmw::SdpProblem problem = problem_from(c);
  const auto options = solver_options(c);
  const fs::path dir = c["out"].get<std::string>();
  json result;
  int code = kOk;
  std::string trace;
  if (c["optimize"].get<bool>()) {
    const auto opt = mmw::binary_search_optimize(problem, options);
    result = {{"value", opt.value}, {"calls", opt.calls}};
    if (opt.witness) trace = trace_csv(opt.witness->trace);
  } else {
    const auto v = mmw::zero_sum_solve(problem, options);
    result = {{"verdict", v.feasible() ? "feasible" : "infeasible"},
              {"tau", v.tau},
              {"iteration_budget",
               mmw::iteration_budget(problem.epsilon, std::exp2(problem.n))},
              {"theta", v.theta},
              {"estimates", v.final_estimates}};
    trace = trace_csv(v.trace);
    code = v.feasible() ? kOk : kInfeasible;
  }
  fs::create_directories(dir);
  if (!trace.empty()) write_atomic(dir / "trace.csv", trace);
  write_atomic(dir / "result.json", result.dump(2) + "\n");
  write_atomic(dir / "manifest.json", manifest("solve", c).dump(2) + "\n");
  out << result.dump(2) << '\n';
  return code;
}

int run_learn(const json& c, std::ostream& out) {
  const auto spec = model_spec(c);
  const auto options = solver_options(c);
  const int stride = c["stride"].get<int>();
  if (stride < 1) throw ConfigError("stride must be >= 1");
  const auto inst = learn::make_instance(spec, c["beta"].get<double>(),
                                         c["epsilon"].get<double>(), c["seed"].get<std::uint64_t>());
  const auto run = learn::run_learning(inst, options, stride);
  json metrics = {{"verdict", run.verdict.feasible() ? "feasible" : "infeasible"},
                  {"tau", run.verdict.tau},
                  {"constraints", inst.problem.constraints.size()},
                  {"target_purity", inst.target_purity}};
  if (run.verdict.feasible()) {
    metrics["mse"] = run.metrics.mse;
    metrics["max_multiplicative_error"] = run.metrics.max_multiplicative_error;
    metrics["initial_rel_entropy"] = nan_safe(run.metrics.initial_rel_entropy);
    metrics["final_rel_entropy"] = nan_safe(run.metrics.final_rel_entropy);
    metrics["exact_max_violation"] = run.metrics.exact_max_violation;
    metrics["learned"] = run.metrics.learned;
    metrics["target"] = inst.terms.target_params;
    metrics["labels"] = inst.terms.labels;
  }
  std::ostringstream snapshot;
  learn::write_instance(snapshot, inst);

  const fs::path dir = c["out"].get<std::string>();
  fs::create_directories(dir);
  write_atomic(dir / "trace.csv", trace_csv(run.verdict.trace));
  write_atomic(dir / "metrics.json", metrics.dump(2) + "\n");
  write_atomic(dir / "instance.txt", snapshot.str());
  write_atomic(dir / "manifest.json", manifest("learn", c).dump(2) + "\n");
  out << metrics.dump(2) << '\n';
  return run.verdict.feasible() ? kOk : kInfeasible;
}

int run_diagnose(const json& c, std::ostream& out) {
  const auto spec = model_spec(c);
  const double beta = c["beta"];
  const auto terms = model_terms(spec, c["seed"].get<std::uint64_t>());
  const auto eig = exact::eigendecompose(ops::compile(terms.hamiltonian));
  const auto gibbs = exact::gibbs_state(eig, beta);
  const int n = terms.hamiltonian.num_qubits();
  const double nu = c["nu"].is_null()
                        ? (1.0 - 1e-5) * std::numbers::ln2 / (2.0 * beta)
                        : c["nu"].get<double>();
  const auto count = exact::spectral_condition_count(eig, nu);
  const double p = exact::purity(gibbs);
  const double fe = exact::free_energy_purity(eig, beta);
  json report = {{"n", n},
                 {"beta", beta},
                 {"nu", nu},
                 {"purity", p},
                 {"bound", exact::purity_bound(count.fraction, nu, beta, n)},
                 {"count", count.count},
                 {"c", count.fraction},
                 {"free_energy_check", std::abs(fe - p)}};
  if (!c["out"].get<std::string>().empty()) {
    const fs::path dir = c["out"].get<std::string>();
    fs::create_directories(dir);
    write_atomic(dir / "diagnose.json", report.dump(2) + "\n");
  }
  out << report.dump(2) << '\n';
  return kOk;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string poly_table(const std::vector<double>& betas, const std::vector<double>& mus) {
  std::ostringstream os;
  os << "beta,mu,degree_exp,degree_sign,degree_composite\n";
  for (double mu : mus) {
    for (double beta : betas) {
      const auto e = poly::exp_poly(beta, mu);
      const auto q = poly::composite_exp_poly(beta, mu, 1.0 / (4.0 * beta));
      os << fmt(beta) << ',' << fmt(mu) << ',' << e.degree() << ',' << q.sign.degree() << ','
         << q.degree() << '\n';
    }
  }
  return os.str();
}

int run_resources(const std::string& what, const json& c, std::ostream& out) {
  const double eps = c["epsilon"];
  if (what == "table1") {
    std::ostringstream os;
    os << "nx,ny,gates_amplified,qubits_amplified,gates_proof_of_concept,"
          "qubits_proof_of_concept\n";
    for (int l : {2, 4, 6}) {
      const ops::LatticeSpec lat{l, l};
      const auto a = resources::toffoli_estimate(lat, eps, resources::ToffoliMode::amplified);
      const auto p =
          resources::toffoli_estimate(lat, eps, resources::ToffoliMode::proof_of_concept);
      os << l << ',' << l << ',' << fmt(a.gates) << ',' << a.qubits << ',' << fmt(p.gates)
         << ',' << p.qubits << '\n';
    }
    out << os.str();
    return kOk;
  }
  if (what == "poly-table") {
    out << poly_table({1, 2, 4, 8, 16, 32, 64}, {1e-2, 1e-3});
    return kOk;
  }
  if (what != "report") throw ConfigError("unknown resources table '" + what + "'");
  const double dim = std::exp2(c["qubits"].get<double>());
  const auto r = resources::complexity_report(
      dim, c["m"].get<long>(), eps, c["xi"].get<double>(), c["delta_tilde"].get<double>(),
      c["spectral"].get<bool>(), {c["t_k"].get<double>(), c["t_sqrt_a"].get<double>()});
  json j = {{"note", "all constants set to 1"},
            {"T", r.iterations},
            {"beta_max", r.beta_max},
            {"mu", r.mu},
            {"qet_degree", r.qet_degree},
            {"amplification_rounds", r.amplification_rounds},
            {"tpq_queries", r.tpq_queries},
            {"copies_x", r.copies_x},
            {"or_gap", r.or_gap},
            {"or_repetitions_K", r.or_repetitions_k},
            {"or_tests", r.or_tests},
            {"check_queries", r.check_queries},
            {"check_other_gates", r.check_other_gates},
            {"check_ancillas", r.check_ancillas},
            {"total_block_encoding_queries", r.total_block_encoding_queries},
            {"total_gates", r.total_gates},
            {"total_gates_leading", r.total_gates_leading},
            {"depth_leading", r.depth_leading},
            {"qubit_estimate", r.qubit_estimate}};
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semidefinite programming with thermal pure quantum states"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Solve an SDP feasibility problem from a JSON file");
  Settings solve_settings(
      solve,
      merged(solver_defaults(), {{"n", 1},
                                 {"constraints", json::array()},
                                 {"objective", nullptr},
                                 {"optimize", false},
                                 {"trace_bound", 1.0},
                                 {"rescale", nullptr}}),
      kHelp);

  auto* learn_cmd = app.add_subcommand("learn", "Hamiltonian learning run");
  Settings learn_settings(learn_cmd,
                          merged(merged(solver_defaults(), model_defaults()), {{"stride", 10}}),
                          kHelp);

  auto* diagnose = app.add_subcommand("diagnose", "Purity and spectral-condition report");
  Settings diagnose_settings(
      diagnose, merged(model_defaults(), {{"nu", nullptr}, {"seed", 0}, {"out", ""}}), kHelp);

  auto* res = app.add_subcommand("resources", "Complexity formulas and resource tables");
  std::string what = "report";
  res->add_option("table", what, "report | table1 | poly-table");
  Settings res_settings(res,
                        {{"qubits", 10},
                         {"m", 56},
                         {"epsilon", 0.05},
                         {"xi", 0.05},
                         {"delta_tilde", 0.01},
                         {"spectral", false},
                         {"t_k", 1.0},
                         {"t_sqrt_a", 1.0}},
                        kHelp);

  auto* ptable = app.add_subcommand("poly-table", "Polynomial degrees as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (solve->parsed()) return run_solve(solve_settings.resolve(), out);
    if (learn_cmd->parsed()) return run_learn(learn_settings.resolve(), out);
    if (diagnose->parsed()) return run_diagnose(diagnose_settings.resolve(), out);
    if (res->parsed()) return run_resources(what, res_settings.resolve(), out);
    if (ptable->parsed()) return run_resources("poly-table", res_settings.resolve(), out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }
  return kConfigError;
}

}  // namespace tpqsdp::cli
