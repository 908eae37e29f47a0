#pragma once
// Fixed-energy scattering amplitude stored spectrally.
//
// Storage convention ("B matrix"): the amplitude for incident direction
// alpha and observation direction beta is
//
//   A(beta, alpha) = sum_{u,v} B(u,v) conj(Y_u(alpha)) Y_v(beta),
//
// u, v flat harmonic indices (see specfun.hpp).  With the i^l harmonic
// phase used here this makes a radial potential exactly diagonal:
// B(u,u) = 4 pi e^{i delta_l} sin(delta_l).  For complex directions the
// factor conj(Y_u(alpha)) means the analytic continuation of the function
// alpha -> conj(Y_u(alpha)), i.e. (-1)^{l+m} Y_{l,-m}(alpha).

#include <string>

#include <Eigen/Dense>

#include "rammscatter/quadrature.hpp"
#include "rammscatter/specfun.hpp"

namespace ramm {

struct FarField {
  int L = 0;       // truncation order; B is (L+1)^2 square
  double a = 1.0;  // support radius of the scatterer
  Eigen::MatrixXcd B;
  std::string source;        // "radial", "grid", "phase-shifts", "sphere", "file", ...
  double noise_level = 0.0;  // sup-norm noise radius injected (0 = exact)
  unsigned long long noise_seed = 0;

  void validate() const;
};

// continuation of alpha -> conj(Y_u(alpha)) to complex directions
cd conj_harm(HarmonicIndex lm, const CVec3& dir);
std::vector<cd> conj_harm_all(int L, const CVec3& dir);

// diagonal far field from radial phase shifts: A_l = 4 pi e^{i d_l} sin d_l
FarField farfield_from_phase_shifts(const std::vector<double>& delta, double a);

// project pointwise samples A(beta_i, alpha_j) on s2_rule(Ls) onto modes l <= L
FarField project_samples(const Eigen::MatrixXcd& samples, const S2Rule& rule,
                         int L, double a);

cd amplitude_eval(const FarField& ff, const CVec3& beta, const CVec3& alpha);
cd amplitude_eval(const FarField& ff, const Vec3& beta, const Vec3& alpha);

// Evaluation with a truncation-tail estimate: the per-degree terms of the
// series decay super-exponentially for |beta| on the variety while the
// harmonics grow at most exponentially in |Im beta|, so the tail beyond
// ff.L is estimated from the geometric trend of the last degrees and the
// result is flagged when that estimate exceeds 1% of the partial sum.
struct AmplitudeValue {
  cd value;
  double tail_estimate = 0.0;
  bool tail_flagged = false;
};
AmplitudeValue amplitude_eval_checked(const FarField& ff, const CVec3& beta,
                                      const CVec3& alpha);

// total field u(x, alpha) for |x| >= a (plane wave + outgoing series)
cd field_outside(const FarField& ff, const Vec3& x, const Vec3& alpha);
// resolvent kernel G(x, y) for |x|, |y| >= a
cd green_outside(const FarField& ff, const Vec3& x, const Vec3& y);

// physics sanity metrics
double unitarity_residual(const FarField& ff);    // ||S^* S - I||_2, S = I + i/(2pi) B^T
double reciprocity_residual(const FarField& ff);  // A(b,a) = A(-a,-b), entrywise in B
double optical_theorem_residual(const FarField& ff);  // relative, worst direction

}  // namespace ramm
