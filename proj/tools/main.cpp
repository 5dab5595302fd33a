#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pauliops/experiment.hpp"

namespace {

// Flags layered over an optional JSON config. Anything given on the command
// line wins over the file.
struct Flags {
  std::string config_path;
  std::string model;
  int n = -1;
  int lx = -1, ly = -1;
  int trim = std::numeric_limits<int>::min();
  double noise = -1.0;
  double dt = -1.0;
  double t_max = -1.0;
  int steps = -1;
  double cutoff = -1.0;
  std::string initial_op;
  std::string boundary;
  std::string out;
  bool verify = false;
  bool translation_symmetric = false;
  double mem_limit_gb = -1.0;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file; flags override its fields");
  cmd->add_option("--model", f.model, "model name (xx_chain, xxx_chain, quantum_ising, "
                                      "ising_chain, xxz_nnn, xzzx_2d, xxz_2d, graph)");
  cmd->add_option("--n", f.n, "number of sites");
  cmd->add_option("--lx", f.lx, "lattice width (2D models)");
  cmd->add_option("--ly", f.ly, "lattice height (2D models)");
  cmd->add_option("--boundary", f.boundary, "open or periodic");
  cmd->add_option("--initial-operator", f.initial_op, "initial operator name");
  cmd->add_option("--trim", f.trim, "log2 of the maximum string count M");
  cmd->add_option("--cutoff", f.cutoff, "per-step magnitude floor");
  cmd->add_option("--noise", f.noise, "depolarizing amplitude per unit time");
  cmd->add_option("--dt", f.dt, "integration time step");
  cmd->add_option("--tmax", f.t_max, "evolution horizon (overrides --steps)");
  cmd->add_option("--steps", f.steps, "step count (evolution samples or recursion depth)");
  cmd->add_option("--out", f.out, "output file path");
  cmd->add_flag("--verify", f.verify, "cross-check against the dense reference; nonzero exit on "
                                      "mismatch");
  cmd->add_flag("--translation-symmetric", f.translation_symmetric,
                "run through the translation-compressed representation");
  cmd->add_option("--mem-limit-gb", f.mem_limit_gb, "abort gracefully past this estimate");
}

nlohmann::json load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open config file " + path);
  nlohmann::json j;
  is >> j;
  return j;
}

pauliops::ExperimentConfig build_config(const std::string& mode, const Flags& f) {
  nlohmann::json j = f.config_path.empty() ? nlohmann::json::object() : load_config(f.config_path);
  if (!mode.empty()) j["mode"] = mode;
  if (!j.contains("mode")) throw std::invalid_argument("no mode given (subcommand or config)");

  if (!j.contains("model")) j["model"] = nlohmann::json::object();
  auto& m = j["model"];
  if (!f.model.empty()) m["model"] = f.model;
  if (f.n >= 0) m["N"] = f.n;
  if (f.lx >= 0) m["Lx"] = f.lx;
  if (f.ly >= 0) m["Ly"] = f.ly;
  if (!f.boundary.empty()) m["boundary"] = f.boundary;
  if (!m.contains("model")) throw std::invalid_argument("no model given (--model or config)");

  if (!f.initial_op.empty()) j["initial_operator"] = f.initial_op;
  if (f.trim != std::numeric_limits<int>::min()) j["trim"] = f.trim;
  if (f.cutoff >= 0.0) j["cutoff"] = f.cutoff;
  if (f.noise >= 0.0) j["noise"] = f.noise;
  if (f.dt >= 0.0) j["dt"] = f.dt;
  if (f.t_max >= 0.0) j["t_max"] = f.t_max;
  if (f.steps >= 0) j["steps"] = f.steps;
  if (!f.out.empty()) j["out"] = f.out;
  if (f.verify) j["verify"] = true;
  if (f.translation_symmetric) j["translation_symmetric"] = true;
  if (f.mem_limit_gb >= 0.0) j["mem_limit_gb"] = f.mem_limit_gb;

  return pauliops::ExperimentConfig::from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-string operator dynamics: truncated Heisenberg evolution and the "
               "Lanczos recursion on spin models"};
  app.require_subcommand(1);

  Flags flags;
  const char* modes[] = {"evolve", "twopoint", "lanczos", "visualize", "run"};
  const char* descr[] = {
      "Heisenberg autocorrelation S(t) under truncated noisy RK4",
      "two-point profile tr[Z_j(t) Z_i]/2^N over readout sites",
      "Lanczos coefficients b_n of the commutator recursion",
      "step-by-step operator dump of the recursion",
      "mode taken from the config file"};
  for (int i = 0; i < 5; ++i) add_common_flags(app.add_subcommand(modes[i], descr[i]), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const std::string sub = app.get_subcommands().front()->get_name();
    const auto cfg = build_config(sub == "run" ? "" : sub, flags);
    const int rc = pauliops::run_experiment(cfg);
    if (cfg.mode == "visualize" && rc == 0) {
      std::ifstream is(cfg.out);
      std::cout << is.rdbuf();
    }
    std::cerr << "wrote " << cfg.out << " (exit " << rc << ")\n";
    return rc;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return 2;
  }
}
