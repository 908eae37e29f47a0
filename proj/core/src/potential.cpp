#include "rammscatter/potential.hpp"

#include <algorithm>

namespace ramm {

double Potential::at_r(double r) const {
  if (!is_radial) throw ValidationError("Potential::at_r: potential is not radial");
  return (r <= a) ? radial(r) : 0.0;
}

Potential Potential::ball(double q0, double R) {
  return radial_profile([q0](double) { return q0; }, R);
}

Potential Potential::radial_profile(std::function<double(double)> q, double a) {
  if (a <= 0.0) throw ValidationError("Potential: support radius must be positive");
  Potential p;
  p.a = a;
  p.is_radial = true;
  p.radial = q;
  p.point = [q, a](const Vec3& x) {
    double r = x.norm();
    return (r <= a) ? q(r) : 0.0;
  };
  return p;
}

Potential Potential::general(std::function<double(const Vec3&)> q, double a) {
  if (a <= 0.0) throw ValidationError("Potential: support radius must be positive");
  Potential p;
  p.a = a;
  p.is_radial = false;
  p.point = std::move(q);
  return p;
}

Potential Potential::shells(const std::vector<double>& edges,
                            const std::vector<double>& values) {
  if (edges.size() != values.size() + 1 || edges.front() != 0.0 ||
      !std::is_sorted(edges.begin(), edges.end()))
    throw ValidationError("Potential::shells: bad shell specification");
  return radial_profile(
      [edges, values](double r) {
        auto it = std::upper_bound(edges.begin(), edges.end(), r);
        size_t i = (it == edges.begin()) ? 0 : (it - edges.begin() - 1);
        if (i >= values.size()) i = values.size() - 1;
        return values[i];
      },
      edges.back());
}

}  // namespace ramm
