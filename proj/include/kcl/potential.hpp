#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kcl::potential {

// V(x) = c|x|²/2
struct Quadratic {
  double c = 1.0;
};

// V(x) = c|x|²/2 + a exp(-|x|²/(2w²))
struct QuadraticBump {
  double c = 1.0;
  double a = 1.0;
  double w = 1.0;
};

using Confinement = std::variant<Quadratic, QuadraticBump>;

struct NoInteraction {};

// W(x,x') = λ|x-x'|²/2
struct CurieWeiss {
  double lambda = 0.25;
};

// W(x,x') = A exp(-|x-x'|²/(2s²)); A > 0 is repulsive.
struct GaussianKernel {
  double amplitude = 0.1;
  double width = 1.0;
};

using Interaction = std::variant<NoInteraction, CurieWeiss, GaussianKernel>;

struct DissipativityConstants {
  double c_V = 0.0;
  double c_V_prime = 0.0;
  double c_W = 0.0;
  double c_W_prime = 0.0;
  double R = 0.0;
  double hess_W_mixed_sup = 0.0;
  double hess_V_sup = 0.0;
  double hess_W_sup = 0.0;
  double beta = 1.0;
};

struct ConvexSplit {
  double rho = 1.0;     // convexity of U₁
  double u2_sup = 0.0;  // sup norm of U₂
};

struct PotentialSpec {
  Confinement confinement = Quadratic{};
  Interaction interaction = NoInteraction{};
  int dim = 1;
  DissipativityConstants declared;
  std::optional<ConvexSplit> convex_split;

  void validate() const;
};

// Shipped specs: "quadratic", "convex", "nonconvex".
PotentialSpec benchmark(const std::string& name, double beta = 1.0);

std::string describe(const Confinement& v);
std::string describe(const Interaction& w);

// Raw evaluators; grad may be null. Arrays have length d.
double confinement_value(const Confinement& v, const double* x, int d, double* grad);
double interaction_value(const Interaction& w, const double* x, const double* xp, int d,
                         double* grad_x);

bool is_zero(const Interaction& w);

struct Evaluation {
  double value = 0.0;
  std::vector<double> grad;
};

// V(x), ∇V(x) without x'; W(x,x'), ∇_xW(x,x') with it.
Evaluation eval_potential(const PotentialSpec& spec, std::span<const double> x,
                          std::optional<std::span<const double>> xp = std::nullopt);

// U(x,x') = V(x) + V(x') + W(x,x') and ∇_xU(x,x') = ∇V(x) + ∇_xW(x,x').
double pair_potential(const PotentialSpec& spec, const double* x, const double* xp,
                      double* grad_x = nullptr);

// Analytic sup norms of Hessians over the whole space.
double hess_V_sup(const Confinement& v);
double hess_W_sup(const Interaction& w);
double hess_W_mixed_sup(const Interaction& w);
double interaction_lower_bound(const Interaction& w);

struct ScanConfig {
  double box = 6.0;      // scan [-box, box]^d
  int points = 241;      // grid points per axis for x, y (d = 1)
  int z_points = 41;     // grid points for the third variable (d = 1)
  int random_samples = 200000;  // triples for d > 1
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

struct ViolationReport {
  bool pass = true;
  double max_violation = 0.0;
  std::string worst_inequality;  // "V" or "W"
  std::vector<double> worst_x, worst_y, worst_z;
  std::size_t n_checked = 0;
};

ViolationReport check_dissipativity(const PotentialSpec& spec, const ScanConfig& scan);

double beta_zero(const DissipativityConstants& k);

struct QuadratureConfig {
  double r_max = 0.0;  // 0 selects a default from the declared constants
  int n_r = 401;
  ScanConfig scan{};
  int refine_rounds = 12;
};

struct ZegarlinskiResult {
  std::vector<std::pair<double, double>> b0_samples;  // (r, b₀(r)) for βU
  bool b0_exact = false;
  double c_L_quadrature = 0.0;
  double c_L_closed_form = 0.0;
  double mixed_sup = 0.0;  // sup |∇²_{x,x'}U| of U (not βU)
  bool mixed_sup_exact = true;
  double gamma_zero = 0.0;
  double r_max = 0.0;
};

// b₀(r) for U (unscaled). Exact for linear-force models, scanned otherwise.
double b0_estimate(const PotentialSpec& spec, double r, const ScanConfig& scan, int refine_rounds,
                   bool* exact = nullptr);

ZegarlinskiResult zegarlinski_certificate(const PotentialSpec& spec, const QuadratureConfig& quad);

struct LsiResult {
  double eta_x = 0.0;
  double eta_full = 0.0;
};

LsiResult lsi_certificate(const PotentialSpec& spec, double beta);
double eta_full(double eta_x, double beta);

// m = 2/σ² + γ² + (|∇²V| + 2|∇²W|)²
double kappa_m(double gamma, double sigma, double hessV_sup, double hessW_sup);
double kappa_rate(double eta, double gamma, double sigma, double hessV_sup, double hessW_sup);
double log_kappa_rate(double eta, double gamma, double sigma, double hessV_sup, double hessW_sup);

struct EnvelopeResult {
  double alpha1 = 0.0;
  double alpha2 = 0.0;       // value upper bound
  double alpha2_grad = 0.0;  // gradient bound
  double alpha3 = 0.0;
  bool pass = false;
  std::string failure;
  std::vector<double> witness;  // (x, x') where feasibility fails
};

// alpha3 defaults to max(0, -min U) + |U₂|∞ over the scan.
EnvelopeResult quadratic_envelope(const PotentialSpec& spec, const ScanConfig& scan,
                                  std::optional<double> alpha3 = std::nullopt);

// Largest ε for which U_N + |y|²/2 + ε x·y >= α₁|x|²/2 + |y|²/4 - α₃N holds, capped below γ.
double lyapunov_eps_max(double alpha1, double gamma);

struct CertificateReport {
  double beta = 1.0;
  double beta_zero = 0.0;
  ViolationReport dissipativity;
  ZegarlinskiResult zegarlinski;
  LsiResult lsi;
  double kappa = 0.0;
  double log10_kappa = 0.0;
  EnvelopeResult envelope;
  std::map<std::string, bool> pass_flags;
  bool pass = false;
};

CertificateReport certify(const PotentialSpec& spec, double gamma, double sigma,
                          const QuadratureConfig& quad = {});

}  // namespace kcl::potential
