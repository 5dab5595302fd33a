#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pauliops {

// One batch run: build a model, drive an algorithm, write CSV (or a step
// dump) plus a manifest JSON next to it. Deterministic for a fixed config.
struct ExperimentConfig {
  std::string mode;              // evolve | twopoint | lanczos | visualize
  nlohmann::json model;          // descriptor for models::model_from_json
  std::string initial_op = "";  // models::initial_operator name; mode default if empty
  int trim = -1;                 // log2 of the string cap M; < 0 = unlimited
  double cutoff = -1.0;          // magnitude floor per step; < 0 = mode default
  double noise = 0.0;
  double dt = 0.05;
  double t_max = -1.0;           // evolve horizon; wins over steps when >= 0
  int steps = 100;
  std::vector<int> sites;        // twopoint readout sites; empty = all
  std::string out = "run.csv";
  bool verify = false;
  bool translation_symmetric = false;
  double mem_limit_gb = 8.0;

  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  std::size_t max_terms() const;    // 2^trim, or 0 when unlimited
  std::size_t term_budget() const;  // from mem_limit_gb
};

// Exit status: 0 success, 2 runtime abort (budget hit or verify failure).
// Configuration problems throw std::invalid_argument before anything runs.
int run_experiment(const ExperimentConfig& cfg);

}  // namespace pauliops
