#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

#include "kcl/config.hpp"
#include "kcl/output.hpp"

namespace kcl::harness {

struct RunOptions {
  std::string out_dir;  // empty: config.out
  bool force = false;   // run E1-E4 even if the certificate fails
  std::string command;
  std::ostream* log = nullptr;
};

struct ExperimentOutcome {
  json summary;
  bool pass = false;
  std::string dir;
};

// Writes CSV curves, RateFit JSON, summary.json, SVG plots and manifest.json under
// <out>/<short name>/. On failure leaves a FAILED marker naming the stage and rethrows.
ExperimentOutcome run_experiment(const ExperimentConfig& c, const RunOptions& opt = {});

// Mean and covariance of (X_t, Y_t) for the nonlinear process with V = c x²/2 and
// Curie-Weiss interaction λ (RK4 on the moment equations).
struct GaussianLaw {
  Eigen::Vector2d mean;
  Eigen::Matrix2d cov;
};
GaussianLaw linear_oracle(double c, double lambda, double gamma, double sigma,
                          const particles::GaussianInit& init, double t, double h = 1e-3);

// Empirical mean and covariance of the (x, y) pairs of a d = 1 state.
GaussianLaw gaussian_fit(const particles::ParticleState& s);

// W₁ between the histogram of samples on the grid's x cells and a density on the same cells.
double w1_on_grid(const std::vector<double>& samples, const mfl::GridSpec& g,
                  const std::vector<double>& density);

}  // namespace kcl::harness
