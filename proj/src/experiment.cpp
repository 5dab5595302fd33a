#include "pauliops/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "pauliops/dense.hpp"
#include "pauliops/dynamics.hpp"
#include "pauliops/io.hpp"
#include "pauliops/krylov.hpp"
#include "pauliops/models.hpp"

namespace pauliops {

namespace {

constexpr std::size_t kBytesPerTerm = 64;  // map node + bucket estimate

std::string default_initial_op(const std::string& mode) {
  return (mode == "evolve" || mode == "twopoint") ? "Z1" : "X1";
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.mode = j.at("mode").get<std::string>();
  c.model = j.at("model");
  c.initial_op = j.value("initial_operator", std::string{});
  c.trim = j.value("trim", -1);
  c.cutoff = j.value("cutoff", -1.0);
  c.noise = j.value("noise", 0.0);
  c.dt = j.value("dt", 0.05);
  c.t_max = j.value("t_max", -1.0);
  c.steps = j.value("steps", 100);
  if (j.contains("sites")) c.sites = j.at("sites").get<std::vector<int>>();
  c.out = j.value("out", std::string{"run.csv"});
  c.verify = j.value("verify", false);
  c.translation_symmetric = j.value("translation_symmetric", false);
  c.mem_limit_gb = j.value("mem_limit_gb", 8.0);
  return c;
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["mode"] = mode;
  j["model"] = model;
  j["initial_operator"] = initial_op;
  j["trim"] = trim;
  j["cutoff"] = cutoff;
  j["noise"] = noise;
  j["dt"] = dt;
  j["t_max"] = t_max;
  j["steps"] = steps;
  j["sites"] = sites;
  j["out"] = out;
  j["verify"] = verify;
  j["translation_symmetric"] = translation_symmetric;
  j["mem_limit_gb"] = mem_limit_gb;
  return j;
}

std::size_t ExperimentConfig::max_terms() const {
  if (trim < 0) return 0;
  require(trim <= 40, "trim beyond 2^40 strings is not supported");
  return std::size_t{1} << trim;
}

std::size_t ExperimentConfig::term_budget() const {
  if (mem_limit_gb <= 0.0) return 0;
  return static_cast<std::size_t>(mem_limit_gb * (1ull << 30) / kBytesPerTerm);
}

namespace {

struct RunOutputs {
  std::string csv;            // main output body
  std::size_t peak_terms = 0;
  bool partial = false;
  nlohmann::json verify = nullptr;
};

void verify_lanczos(const Operator& h, const Operator& o0, const std::vector<double>& b,
                    RunOutputs& out) {
  require(h.n_sites() <= kDenseLanczosMaxSites,
          "--verify for lanczos needs at most " + std::to_string(kDenseLanczosMaxSites) +
              " sites");
  const int steps = static_cast<int>(std::min<std::size_t>(b.size(), 10));
  const auto ref = dense_lanczos(h, o0, steps);
  double max_err = 0.0;
  for (std::size_t i = 0; i < ref.size() && i < b.size(); ++i)
    max_err = std::max(max_err, std::abs(b[i] - ref[i]));
  constexpr double tol = 1e-6;
  out.verify = {{"check", "lanczos_vs_dense"}, {"max_error", max_err}, {"tolerance", tol},
                {"passed", max_err <= tol}};
  if (max_err > tol) out.partial = true;
}

void verify_evolution(const ExperimentConfig& cfg, const Operator& h, const Operator& o0,
                      const EvolutionTrace& trace, RunOutputs& out) {
  require(h.n_sites() <= kDenseEvolveMaxSites,
          "--verify for evolution needs at most " + std::to_string(kDenseEvolveMaxSites) +
              " sites");
  require(cfg.noise == 0.0, "--verify for evolution requires noise = 0");
  const auto ref = dense_heisenberg_overlaps(h, o0, o0, trace.times);
  const Coeff s0 = trace_product_normalized(o0, o0);
  double max_err = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i)
    max_err = std::max(max_err, std::abs(trace.autocorr[i] - ref[i] / s0));
  constexpr double tol = 1e-6;
  out.verify = {{"check", "autocorrelation_vs_dense"}, {"max_error", max_err},
                {"tolerance", tol}, {"passed", max_err <= tol}};
  if (max_err > tol) out.partial = true;
}

RunOutputs run_evolution(const ExperimentConfig& cfg, const Operator& h, const Operator& o0) {
  EvolveConfig ec;
  ec.dt = cfg.dt;
  ec.steps = cfg.t_max >= 0.0 ? static_cast<int>(std::llround(cfg.t_max / cfg.dt)) : cfg.steps;
  ec.max_terms = cfg.max_terms();
  ec.noise = cfg.noise;
  ec.term_budget = cfg.term_budget();

  EvolutionTrace trace;
  if (cfg.mode == "twopoint") {
    std::vector<int> sites = cfg.sites;
    if (sites.empty())
      for (int i = 1; i <= h.n_sites(); ++i) sites.push_back(i);
    trace = evolve_two_point(h, o0, ec, sites);
  } else {
    trace = evolve_autocorrelation(h, o0, ec);
  }

  RunOutputs out;
  std::ostringstream csv;
  write_csv(csv, trace);
  out.csv = csv.str();
  out.peak_terms = trace.peak_terms();
  out.partial = trace.budget_exceeded;
  if (cfg.verify) verify_evolution(cfg, h, o0, trace, out);
  return out;
}

RunOutputs run_lanczos(const ExperimentConfig& cfg, const Operator& h, const Operator& o0) {
  LanczosOptions opt;
  opt.policy.max_terms = cfg.max_terms();
  opt.policy.cutoff = cfg.cutoff >= 0.0 ? cfg.cutoff : 0.0;
  opt.term_budget = cfg.term_budget();

  RunOutputs out;
  std::vector<double> b;
  std::vector<std::size_t> counts;
  if (cfg.translation_symmetric) {
    const SymOperator1D hs = SymOperator1D::from_operator(h);
    const SymOperator1D os = SymOperator1D::from_operator(o0);
    const auto run = lanczos(hs, os, cfg.steps, opt);
    b = run.b;
    counts = run.term_counts;
    out.partial = run.budget_exceeded;
  } else {
    const auto run = lanczos(h, o0, cfg.steps, opt);
    b = run.b;
    counts = run.term_counts;
    out.partial = run.budget_exceeded;
  }
  for (const auto c : counts) out.peak_terms = std::max(out.peak_terms, c);
  std::ostringstream csv;
  write_csv(csv, b, counts);
  out.csv = csv.str();
  if (cfg.verify) verify_lanczos(h, o0, b, out);
  return out;
}

RunOutputs run_visualize(const ExperimentConfig& cfg, const Operator& h, const Operator& o0) {
  RunOutputs out;
  std::ostringstream dump;
  const double cut = cfg.cutoff >= 0.0 ? cfg.cutoff : 1e-10;
  const auto run = lanczos_verbose(h, o0, cfg.steps, dump, cut);
  out.csv = dump.str();
  for (const auto c : run.term_counts) out.peak_terms = std::max(out.peak_terms, c);
  out.partial = run.budget_exceeded;
  if (cfg.verify) verify_lanczos(h, o0, run.b, out);
  return out;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg) {
  require(cfg.mode == "evolve" || cfg.mode == "twopoint" || cfg.mode == "lanczos" ||
              cfg.mode == "visualize",
          "unknown mode '" + cfg.mode + "'");
  require(!cfg.translation_symmetric || cfg.mode == "lanczos",
          "--translation-symmetric is supported for lanczos mode");
  require(cfg.noise >= 0.0, "noise must be >= 0");
  require(cfg.dt > 0.0, "dt must be > 0");
  require(cfg.steps >= 1, "steps must be >= 1");

  const auto t_start = std::chrono::steady_clock::now();
  const Operator h = models::model_from_json(cfg.model);
  const models::Boundary boundary =
      models::boundary_from_string(cfg.model.value("boundary", "open"));
  const std::string op_name =
      cfg.initial_op.empty() ? default_initial_op(cfg.mode) : cfg.initial_op;
  const Operator o0 = models::initial_operator(op_name, h.n_sites(), boundary);

  RunOutputs out;
  if (cfg.mode == "evolve" || cfg.mode == "twopoint")
    out = run_evolution(cfg, h, o0);
  else if (cfg.mode == "lanczos")
    out = run_lanczos(cfg, h, o0);
  else
    out = run_visualize(cfg, h, o0);

  {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + cfg.out + " for writing");
    os << out.csv;
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  nlohmann::json manifest;
  manifest["config"] = cfg.to_json();
  manifest["wall_time_s"] = wall;
  manifest["peak_terms"] = out.peak_terms;
  manifest["partial"] = out.partial;
  manifest["verify"] = out.verify;
  {
    std::ofstream os(cfg.out + ".manifest.json");
    if (!os) throw std::runtime_error("cannot open manifest for writing");
    os << manifest.dump(2) << '\n';
  }
  return out.partial ? 2 : 0;
}

}  // namespace pauliops
