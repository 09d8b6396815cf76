#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kcl/particle_system.hpp"
#include "kcl/potential.hpp"

// Nonlinear-limit objects on a d = 1 phase-space grid.
namespace kcl::mfl {

using particles::SimParams;
using potential::PotentialSpec;

// Cell-centred uniform grid: x_i = x_min + (i + 1/2) dx.
struct GridSpec {
  double x_min = -6.0, x_max = 6.0;
  std::size_t nx = 128;
  double y_min = -6.0, y_max = 6.0;
  std::size_t ny = 128;

  double dx() const { return (x_max - x_min) / static_cast<double>(nx); }
  double dy() const { return (y_max - y_min) / static_cast<double>(ny); }
  double x(std::size_t i) const { return x_min + (static_cast<double>(i) + 0.5) * dx(); }
  double y(std::size_t j) const { return y_min + (static_cast<double>(j) + 0.5) * dy(); }
  void validate() const;
  bool operator==(const GridSpec&) const = default;
};

// Density values at cell centres, index i*ny + j; cell mass = value·dx·dy.
struct GridDensity {
  GridSpec grid;
  std::vector<double> values;

  GridDensity() = default;
  explicit GridDensity(const GridSpec& g) : grid(g), values(g.nx * g.ny, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return values[i * grid.ny + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * grid.ny + j]; }

  double mass() const;
  void normalize();
  std::vector<double> x_marginal() const;  // density in x
  std::vector<double> y_marginal() const;
  double boundary_mass() const;  // mass in the two outermost cells on every side
  void validate() const;
};

struct Moments {
  double x_mean = 0, y_mean = 0, x_var = 0, y_var = 0;
};
Moments moments(const GridDensity& g);

GridDensity gaussian_density(const GridSpec& grid, double x_mean, double x_std, double y_mean,
                             double y_std);

// [±6σ] boxes from the quadratic envelope of U (x) and the Maxwellian (y),
// widened to contain [x_lo, x_hi] if given.
GridSpec auto_grid(const PotentialSpec& spec, double beta, std::size_t nx, std::size_t ny,
                   double x_lo = 0.0, double x_hi = 0.0);

struct FixedPointOptions {
  double damping = 0.5;
  double tol = 1e-12;
  int max_iter = 2000;
  double boundary_tol = 1e-6;
};

struct FixedPointResult {
  GridDensity density;
  std::vector<double> x_density;
  std::vector<double> residuals;
  int iterations = 0;
};

FixedPointResult stationary_fixed_point(const PotentialSpec& spec, double beta,
                                        const GridSpec& grid, const FixedPointOptions& opt = {});

double free_energy(const GridDensity& nu, const PotentialSpec& spec, double beta);
double mean_field_entropy(const GridDensity& nu, const PotentialSpec& spec, double beta,
                          const GridDensity& minimizer, double tol = 1e-8);

struct PdeDiagnostics {
  double t = 0, mass = 0, free_energy = 0, hw = 0, x_mean = 0, x_var = 0, y_var = 0;
};

struct PdeOptions {
  double dt = 0.0;          // 0: largest stable step times cfl_safety
  double cfl_safety = 0.5;
  double boundary_tol = 1e-6;
  std::size_t diag_every = 0;  // 0: about 200 records
  const GridDensity* minimizer = nullptr;  // enables the Hw column
  double negative_tol = 1e-13;             // relative to the max value
  // called after every step with (t, x-marginal density)
  std::function<void(double, const std::vector<double>&)> on_step;
};

struct PdeResult {
  GridDensity density;
  std::vector<PdeDiagnostics> diagnostics;
  double dt = 0.0;
  std::size_t steps = 0;
  double max_mass_drift = 0.0;  // largest per-step |Δmass|
};

// Bounds on dt: transport, drift, diffusion. Returns the name of the binding one in `which`.
double cfl_limit(const GridSpec& g, double max_drift, double sigma, std::string* which = nullptr);

PdeResult vfp_solve(const GridDensity& init, const PotentialSpec& spec, const SimParams& params,
                    double t_end, const PdeOptions& opt = {});

// Mean-field force provider backed by a PDE run (stores one field frame per PDE step).
class PdeReference : public particles::MeanFieldReference {
 public:
  PdeReference(const GridDensity& init, const PotentialSpec& spec, const SimParams& params,
               double t_end, PdeOptions opt = {});
  double t_max() const override { return t_max_; }
  int dim() const override { return 1; }
  void field(double t, const double* query, std::size_t nq, double* out) const override;
  const PdeResult& result() const { return result_; }

 private:
  void direct(std::size_t frame, const double* q, std::size_t nq, double* out, double w) const;

  PotentialSpec spec_;
  GridSpec grid_;
  double dt_ = 0.0;
  double t_max_ = 0.0;
  double f_lo_ = 0.0, f_h_ = 0.0;
  std::size_t nf_ = 0;
  std::vector<std::vector<double>> marginals_;
  std::vector<std::vector<double>> fields_;
  std::vector<double> means_;
  PdeResult result_;
};

void write_grid_density(const std::string& path, const GridDensity& g);
GridDensity read_grid_density(const std::string& path);
void export_grid_csv(const std::string& path, const GridDensity& g);
void write_diagnostics_csv(const std::string& path, const std::vector<PdeDiagnostics>& d);

// i.i.d. samples (x, y) from a grid density: exact cell selection, uniform within the cell.
particles::ParticleState sample_grid_density(const GridDensity& g, std::size_t n,
                                             std::uint64_t seed);

}  // namespace kcl::mfl
