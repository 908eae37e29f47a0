#pragma once
// Compactly supported scattering potentials q on the ball |x| <= a.

#include <functional>
#include <vector>

#include "rammscatter/common.hpp"

namespace ramm {

struct Potential {
  double a = 1.0;  // support radius
  bool is_radial = false;
  std::function<double(double)> radial;      // q(r), set when is_radial
  std::function<double(const Vec3&)> point;  // q(x), always set

  double operator()(const Vec3& x) const {
    return (x.norm() <= a) ? point(x) : 0.0;
  }
  double at_r(double r) const;  // radial profile (requires is_radial)

  static Potential ball(double q0, double R);           // q0 * 1_{|x|<=R}
  static Potential radial_profile(std::function<double(double)> q, double a);
  static Potential general(std::function<double(const Vec3&)> q, double a);
  // piecewise constant on shells [r_{i}, r_{i+1}) with values v_i;
  // edges must start at 0 and be increasing; a = last edge
  static Potential shells(const std::vector<double>& edges,
                          const std::vector<double>& values);
};

}  // namespace ramm
