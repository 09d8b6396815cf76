#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kcl/common.hpp"
#include "kcl/curve.hpp"
#include "kcl/potential.hpp"
#include "kcl/rng.hpp"

namespace kcl::particles {

using potential::PotentialSpec;

// Row-major N×d positions and velocities.
struct ParticleState {
  std::size_t n = 0;
  int dim = 1;
  double time = 0.0;
  std::vector<double> x;
  std::vector<double> y;

  ParticleState() = default;
  ParticleState(std::size_t n_particles, int d)
      : n(n_particles), dim(d), x(n_particles * d, 0.0), y(n_particles * d, 0.0) {}

  void validate() const;
  bool operator==(const ParticleState&) const = default;
};

enum class Scheme { euler_maruyama, baoab };
enum class ForceKernel { automatic, direct, symmetrized, fast };

Scheme parse_scheme(const std::string& s);
ForceKernel parse_kernel(const std::string& s);
std::string to_string(Scheme s);
std::string to_string(ForceKernel k);

struct SimParams {
  double gamma = 1.0;
  double sigma = 1.4142135623730951;
  double dt = 0.01;
  Scheme scheme = Scheme::baoab;
  std::uint64_t seed = 0;
  ForceKernel kernel = ForceKernel::direct;
  std::uint32_t noise_stream = rng::kDynamics;

  double beta() const { return 2.0 * gamma / (sigma * sigma); }
  // gamma = 0 and sigma = 0 are allowed for the integrator alone
  void validate() const;
  // also requires a finite positive beta
  void validate_thermal() const;
};

class BlowUpError : public NumericalError {
 public:
  BlowUpError(const std::string& what, ParticleState s) : NumericalError(what), state(std::move(s)) {}
  ParticleState state;
};

// ∇V(X_i) + (1/N) Σ_j ∇_xW(X_i, X_j), self term included.
void mean_field_force(const ParticleState& s, const PotentialSpec& spec, std::vector<double>& out,
                      ForceKernel kernel = ForceKernel::direct);
std::vector<double> mean_field_force(const ParticleState& s, const PotentialSpec& spec,
                                     ForceKernel kernel = ForceKernel::direct);

// (1/N) Σ_j ∇_xW(q_i, p_j) for query points q against source points p.
void interaction_field(const PotentialSpec& spec, const double* src, std::size_t ns,
                       const double* query, std::size_t nq, double* out,
                       ForceKernel kernel = ForceKernel::automatic);

// U_N(x) = Σ_i V(x_i) + (1/2N) Σ_{i,j} W(x_i, x_j)
double interacting_energy(const double* x, std::size_t n, const PotentialSpec& spec,
                          ForceKernel kernel = ForceKernel::automatic);

// Force callback: fills out (N×d) for the state at time state.time.
using ForceFn = std::function<void(const ParticleState&, std::vector<double>&)>;

class Simulator {
 public:
  Simulator(ParticleState s, const PotentialSpec& spec, SimParams p);
  Simulator(ParticleState s, ForceFn force, SimParams p);

  const ParticleState& state() const { return s_; }
  void set_state(ParticleState s);
  const SimParams& params() const { return p_; }

  void step();
  // Number of steps needed to reach t_end from the current time.
  std::uint64_t steps_until(double t_end) const;
  std::uint64_t step_index() const;

 private:
  void ensure_force();
  void check_state() const;

  ParticleState s_;
  ForceFn force_;
  SimParams p_;
  std::vector<double> f_;
  bool f_valid_ = false;
  std::vector<double> noise_;
};

// One step of the scheme; recomputes the force from scratch.
ParticleState step(const ParticleState& s, const SimParams& p, const PotentialSpec& spec);

struct Record {
  double t = 0.0;
  std::string statistic;
  double value = 0.0;
};

using Observer = std::function<void(const ParticleState&, std::vector<std::pair<std::string, double>>&)>;

// mean_x, mean_y, m2_x, m2_y, m2 (per-particle |x|²+|y|²) for d = 1 components summed.
Observer moments_observer();
Observer lyapunov_observer(const PotentialSpec& spec, double eps);

struct SimulationResult {
  ParticleState final_state;
  std::vector<Record> series;
};

// Samples observers every `stride` steps, starting with the initial state.
SimulationResult simulate(const ParticleState& s, const SimParams& p, const PotentialSpec& spec,
                          double t_end, const std::vector<Observer>& observers,
                          std::size_t stride = 1);

struct McmcConfig {
  int burn_in = 2000;
  int iterations = 2000;
  double target_accept = 0.574;
  double initial_step = 0.05;
  double init_std = 0.0;  // 0: 1/sqrt(β)
  ForceKernel kernel = ForceKernel::automatic;
  std::uint64_t seed = 0;
};

struct GibbsResult {
  ParticleState state;
  double acceptance_rate = 0.0;
  double step_size = 0.0;
  std::size_t chain_length = 0;
  bool acceptance_warning = false;
};

// Positions: MALA chain on exp(-βU_N). Velocities: exact N(0, 1/β).
GibbsResult sample_gibbs(std::size_t n, const PotentialSpec& spec, const SimParams& params,
                         const McmcConfig& mcmc);

// Per-particle squared phase-space distance |Z_A - Z_B|²/N.
double per_particle_sq_distance(const ParticleState& a, const ParticleState& b);

using PairInit = std::function<std::pair<ParticleState, ParticleState>(int replica)>;
using StateInit = std::function<ParticleState(int replica)>;

DecayCurve couple_synchronous(const ParticleState& a, const ParticleState& b, const SimParams& p,
                              const PotentialSpec& spec, double t_end, int n_replicas,
                              std::size_t stride = 1);
DecayCurve couple_synchronous(const PairInit& init, const SimParams& p, const PotentialSpec& spec,
                              double t_end, int n_replicas, std::size_t stride = 1);

// Law of the nonlinear process seen by a single particle.
class MeanFieldReference {
 public:
  virtual ~MeanFieldReference() = default;
  virtual double t_max() const = 0;
  virtual int dim() const = 0;
  // out[i] = ∫ ∇_xW(q_i, x') m_t(dx') for nq query points (row-major nq×d).
  virtual void field(double t, const double* query, std::size_t nq, double* out) const = 0;
};

// Frozen auxiliary interacting ensemble of size M, stored at every step.
class EnsembleReference : public MeanFieldReference {
 public:
  EnsembleReference(const ParticleState& init, const SimParams& p, const PotentialSpec& spec,
                    double t_end);
  double t_max() const override { return t_max_; }
  int dim() const override { return spec_.dim; }
  void field(double t, const double* query, std::size_t nq, double* out) const override;
  std::size_t size() const { return m_; }

 private:
  PotentialSpec spec_;
  double dt_ = 0.0;
  double t0_ = 0.0;
  double t_max_ = 0.0;
  std::size_t m_ = 0;
  std::vector<std::vector<double>> frames_;
};

DecayCurve couple_parallel(const StateInit& init, const MeanFieldReference& ref,
                           const SimParams& p, const PotentialSpec& spec, double t_end,
                           int n_replicas, std::size_t stride = 1);
DecayCurve couple_parallel(const ParticleState& s, const MeanFieldReference& ref,
                           const SimParams& p, const PotentialSpec& spec, double t_end,
                           int n_replicas, std::size_t stride = 1);

// (U_N(x) + |y|²/2 + ε x·y) / N
double lyapunov_observable(const ParticleState& s, const PotentialSpec& spec, double eps);

void write_snapshot(const std::string& path, const ParticleState& s);
ParticleState read_snapshot(const std::string& path);

// i.i.d. Gaussian product initial law, per-component mean and std.
struct GaussianInit {
  double x_mean = 0.0, x_std = 1.0;
  double y_mean = 0.0, y_std = 1.0;
};
ParticleState sample_gaussian(std::size_t n, int d, const GaussianInit& g, std::uint64_t seed);

}  // namespace kcl::particles
