#pragma once
// Fixed-energy inversion: recover q~(xi) from the scattering amplitude.
//
// Exact data: fit a mollifier nu(alpha) on S^2 so that the averaged
// scattering solution int u(x,alpha) nu(alpha) dalpha approximates
// e^{i theta.x} on an annulus a < a1 <= |x| <= b outside the support; then
//   q_hat = -4 pi int A(theta', alpha) nu(alpha) dalpha -> q~(xi),
// theta' - theta = xi, with error O(1/|theta|) along a growth ladder.
//
// Noisy data: project onto harmonics up to N(delta) = [ |ln d| / ln|ln d| ],
// penalize ||nu|| by e^{kappa b} mu(delta), mu = e^{-gamma N}, and pick the
// largest |theta| meeting the discrepancy budget.

#include <cstdint>
#include <optional>

#include "rammscatter/farfield.hpp"
#include "rammscatter/potential.hpp"
#include "rammscatter/variety.hpp"

namespace ramm {

struct AnnulusSpec {
  double a1 = 0.0;  // 0 = auto (1.2 a)
  double b = 0.0;   // 0 = auto (1.5 a)
  int n_r = 12;     // radial Gauss nodes
  int L_s = 0;      // angular quadrature order; 0 = auto from |theta|
  void resolve(double a, double& a1_out, double& b_out) const;
};

struct Mollifier {
  Eigen::VectorXcd nu;  // over modes l <= L_nu
  int L_nu = 0;
  DirectionPair theta;
  double rho_norm = 0.0;  // achieved ||rho||_{L2(annulus)}
  double nu_norm = 0.0;   // a(nu) = ||nu||_{L2(S2)}
};

Mollifier fit_mollifier(const FarField& ff, const DirectionPair& pair,
                        const AnnulusSpec& spec, double reg, int L_nu = -1);

// q_hat = -4 pi sum_v (B^T nu)_v Y_v(theta'); tail flag as in amplitude_eval
struct RecoveredValue {
  cd value;
  bool tail_flagged = false;
};
RecoveredValue recover_fourier(const FarField& ff, const Mollifier& m);

struct ReconstructionReport {
  Vec3 xi = Vec3::Zero();
  cd q_hat;
  double theta_norm = 0.0;
  double rho_norm = 0.0;
  double nu_norm = 0.0;
  int truncation = -1;          // N(delta) when noisy
  bool budget_violated = false;
  bool tail_flagged = false;
  std::optional<cd> error_vs_truth;
};

std::vector<ReconstructionReport> reconstruct_exact(
    const FarField& ff, const Vec3& xi, const std::vector<DirectionPair>& ladder,
    const AnnulusSpec& spec, double reg, std::optional<cd> truth = {});

struct NoisyData {
  Eigen::MatrixXcd samples;  // A_delta(beta_i, alpha_j) on s2_rule(rule_order)
  int rule_order = 0;
  double a = 1.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
};

NoisyData inject_noise(const FarField& ff, double delta, std::uint64_t seed);
int noise_truncation(double delta);  // N(delta)
FarField truncate_noisy(const NoisyData& nd);

ReconstructionReport reconstruct_noisy(const NoisyData& nd, const Vec3& xi,
                                       const AnnulusSpec& spec,
                                       double gamma = 0.0,  // 0 = auto ln(a1/a)
                                       double c_budget = 10.0);

// Fourier transform of a radial potential: q~(xi) = 4pi int q(r) j0(|xi| r) r^2 dr
cd radial_fourier(const Potential& q, double xi_norm);

struct SweepRow {
  double delta = 0.0;
  int N = 0;
  double sup_err = 0.0;        // sup_xi |q_hat - q~|
  double theta_sel = 0.0;      // selected |theta| for the first xi
  double field_err = 0.0;      // ||u_delta - u||_{L2(annulus)}
  double env_recon = 0.0;      // (ln|ln d|)^2 / |ln d|
  double env_field = 0.0;      // e^{-gamma N(delta)}
};

std::vector<SweepRow> stability_sweep(const Potential& q, int L,
                                      const std::vector<double>& deltas,
                                      const std::vector<Vec3>& xis,
                                      const AnnulusSpec& spec, std::uint64_t seed,
                                      double gamma = 0.0, double c_budget = 10.0);

}  // namespace ramm
