#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kcl/mckean_vlasov.hpp"
#include "kcl/metrics.hpp"
#include "kcl/particle_system.hpp"
#include "kcl/potential.hpp"

namespace kcl::harness {

constexpr int kSchemaVersion = 1;

enum class ExperimentId {
  certify,
  E1_rate_independence,
  E2_chaos_scaling,
  E3_empirical_rate,
  E4_pde_vs_particles,
  E5_gaussian_oracle,
  E6_moment_uniformity,
};
ExperimentId parse_experiment(const std::string& s);
std::string to_string(ExperimentId id);
// Short directory name: certify, E1, ..., E6.
std::string short_name(ExperimentId id);

struct InitialLaw {
  std::string kind = "gaussian";  // gaussian | gibbs
  particles::GaussianInit a{0.0, 1.0, 0.0, 1.0};
  particles::GaussianInit b{0.0, 1.0, 0.0, 1.0};  // second law of a synchronous pair
};

struct ExperimentConfig {
  int schema_version = kSchemaVersion;
  ExperimentId id = ExperimentId::certify;
  std::uint64_t seed = 1;
  std::string out = "out";
  std::vector<std::size_t> n_list{64};
  int replicas = 1;
  double particle_budget = 0.0;  // >0: replicas(N) = max(replicas, ceil(budget / N))
  double t_end = 1.0;
  double sample_every = 0.1;  // observation interval in time units

  std::string benchmark = "convex";
  potential::PotentialSpec spec;  // benchmark plus overrides
  std::map<std::string, double> potential_overrides;

  particles::SimParams dynamics;
  InitialLaw initial;
  particles::McmcConfig mcmc;

  // d = 1 grid for fixed point / PDE; equal bounds are sized automatically
  std::size_t grid_nx = 128, grid_ny = 128;
  double grid_x_min = 0, grid_x_max = 0, grid_y_min = 0, grid_y_max = 0;  // equal: auto
  double pde_cfl_safety = 0.5;
  double pde_dt = 0.0;

  metrics::W2Method w2_method = metrics::W2Method::exact;
  double sinkhorn_epsilon = 0.05;
  int sliced_projections = 256;
  std::size_t reference_size = 4096;
  int eval_points = 4;  // E3 time points per replica

  metrics::WindowPolicy fit;

  std::map<std::string, double> thresholds;

  void validate() const;
  int replicas_for(std::size_t n) const;
  double beta() const { return dynamics.beta(); }
  mfl::GridSpec grid() const;
};

// Default acceptance thresholds for an experiment.
std::map<std::string, double> default_thresholds(ExperimentId id);
// Defaults of every field for an experiment, before the file is applied.
ExperimentConfig default_config(ExperimentId id);

// Flat INI with sections; unknown keys and sections are rejected by path.
ExperimentConfig parse_config_string(const std::string& text, const std::string& origin = "<string>");
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& c);

// Rebuilds c.spec from benchmark + overrides.
void apply_potential(ExperimentConfig& c);

}  // namespace kcl::harness
