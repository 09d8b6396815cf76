#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcl/common.hpp"
#include "kcl/curve.hpp"
#include "kcl/mckean_vlasov.hpp"

namespace kcl::metrics {

// Dense square linear assignment, cost row-major n×n. Jonker–Volgenant:
// column reduction, reduction transfer, augmenting row reduction, shortest augmenting paths.
struct Assignment {
  std::vector<int> row_to_col;
  double total_cost = 0.0;
};
Assignment solve_assignment(const std::vector<double>& cost, std::size_t n);

enum class W2Method { exact, sinkhorn, sliced };
W2Method parse_w2_method(const std::string& s);
std::string to_string(W2Method m);

constexpr std::size_t kExactMax = 4096;

struct W2Options {
  W2Method method = W2Method::exact;
  double epsilon = 0.05;  // sinkhorn: relative to the median pairwise cost
  double tol = 1e-7;      // sinkhorn: L1 marginal violation
  int max_iter = 100000;
  int projections = 256;  // sliced
  std::uint64_t seed = 0;
};

// Point clouds are row-major n×k.
double w2_empirical(const std::vector<double>& a, const std::vector<double>& b, int k,
                    const W2Options& opt = {});

// Debiased entropic value S_ε = OT_ε(a,b) - (OT_ε(a,a) + OT_ε(b,b))/2 with ε absolute.
double sinkhorn_divergence(const std::vector<double>& a, const std::vector<double>& b, int k,
                           double eps, double tol = 1e-7, int max_iter = 100000);
// Entropic cost OT_ε(a, b), uniform weights, relative entropy to the product measure.
double sinkhorn_cost(const std::vector<double>& a, const std::vector<double>& b, int k, double eps,
                     double tol = 1e-7, int max_iter = 100000);
double median_pairwise_cost(const std::vector<double>& a, const std::vector<double>& b, int k);

// Exact W₂ between 1-d empirical measures (quantile coupling; sizes may differ).
double w2_1d(std::vector<double> a, std::vector<double> b);

double w2_gaussian(const Eigen::VectorXd& mean_a, const Eigen::MatrixXd& cov_a,
                   const Eigen::VectorXd& mean_b, const Eigen::MatrixXd& cov_b);

struct Divergence {
  double kl = 0.0;  // H(p|q) = Σ p ln(p/q) cell
  double tv = 0.0;
};
// Throws NumericalError when check_pinsker is set and tv² > 2 kl.
Divergence divergence_proxies(const std::vector<double>& p, const std::vector<double>& q,
                              double cell, bool check_pinsker = true);
Divergence divergence_proxies(const mfl::GridDensity& p, const mfl::GridDensity& q,
                              bool check_pinsker = true);

double a_N(long long n, int d);

struct LinearFit {
  double slope = 0.0, intercept = 0.0, r_squared = 0.0;
  double slope_se = 0.0, slope_ci_halfwidth = 0.0;
  std::size_t n = 0;
};
LinearFit ols(const std::vector<double>& x, const std::vector<double>& y, double confidence = 0.95);

struct WindowPolicy {
  double drop_fraction = 0.1;
  double noise_factor = 3.0;
  std::optional<double> t_lo, t_hi;  // explicit window replaces drop_fraction
  std::size_t min_points = 5;
  double r2_flag = 0.8;
  double confidence = 0.95;
};

struct RateFit {
  std::string statistic;
  double rate = 0.0;
  double log_prefactor = 0.0;
  double r_squared = 0.0;
  double t_lo = 0.0, t_hi = 0.0;
  double ci_halfwidth = 0.0;
  std::size_t n_points = 0;
  bool flagged = false;
};

RateFit fit_exponential_rate(const DecayCurve& curve, const WindowPolicy& policy = {});

}  // namespace kcl::metrics
