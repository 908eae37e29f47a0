#include "rammscatter/variety.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace ramm {

namespace {

// Orthogonal map sending e3 to the unit vector u (Householder reflection;
// identity when u == e3).
Eigen::Matrix3d frame_to(const Vec3& u) {
  Vec3 v = u - Vec3::UnitZ();
  double n2 = v.squaredNorm();
  if (n2 < 1e-28) return Eigen::Matrix3d::Identity();
  return Eigen::Matrix3d::Identity() - (2.0 / n2) * (v * v.transpose());
}

}  // namespace

DirectionPair make_pair(const Vec3& xi, double s) {
  if (s < 0.0) throw ValidationError("make_pair: s must be >= 0");
  double t = xi.norm();
  double z2sq = 1.0 - t * t / 4.0 + s * s;
  if (z2sq < -1e-12)
    throw ValidationError("make_pair: s too small for |xi| > 2 (need s^2 >= |xi|^2/4 - 1)");
  double z2 = std::sqrt(std::max(0.0, z2sq));

  Eigen::Matrix3d H = (t > 0.0) ? frame_to(Vec3(xi / t)) : Eigen::Matrix3d::Identity();
  Vec3 e1 = H.col(0), e2 = H.col(1), e3 = H.col(2);

  DirectionPair p;
  p.s = s;
  p.kappa = s;
  p.norm = std::sqrt(1.0 + 2.0 * s * s);
  CVec3 common = z2 * e2.cast<cd>() + iu * s * e1.cast<cd>();
  p.theta_prime = (t / 2.0) * e3.cast<cd>() + common;
  p.theta = -(t / 2.0) * e3.cast<cd>() + common;
  return p;
}

DirectionPair pair_for_norm(const Vec3& xi, double n) {
  if (n < 1.0) throw ValidationError("pair_for_norm: |theta| < 1 is not attainable");
  return make_pair(xi, std::sqrt((n * n - 1.0) / 2.0));
}

std::vector<double> growth_schedule(const Vec3& xi, int rungs, double factor) {
  if (rungs < 1 || factor <= 1.0)
    throw ValidationError("growth_schedule: need rungs >= 1 and factor > 1");
  double t = xi.norm();
  double n_min = std::sqrt(std::max(1.0, t * t / 2.0 - 1.0));
  double n0 = std::max(2.0, 1.05 * n_min);
  std::vector<double> out(rungs);
  for (int k = 0; k < rungs; ++k) out[k] = n0 * std::pow(factor, k);
  return out;
}

}  // namespace ramm
