#pragma once
// Complex unit directions theta with theta . theta = 1 (bilinear dot) and
// pairs (theta, theta') on that variety with prescribed real difference
// theta' - theta = xi.  These drive the analytic continuation of the
// scattering amplitude: |theta| can grow without bound while the
// difference stays fixed, which is what makes fixed-energy inversion work.

#include <vector>

#include "rammscatter/common.hpp"

namespace ramm {

struct DirectionPair {
  CVec3 theta;        // "incident" slot
  CVec3 theta_prime;  // "observed" slot; theta_prime - theta = xi
  double s = 0.0;     // free parameter: kappa = |Im theta| = s
  double kappa = 0.0;
  double norm = 1.0;  // |theta| = sqrt(1 + 2 s^2)
};

// Build the canonical pair for difference xi at parameter s >= 0.
// In the frame with e3 || xi:
//   theta' = (t/2) e3 + z2 e2 + i s e1,  theta = -(t/2) e3 + z2 e2 + i s e1,
//   z2 = sqrt(1 - t^2/4 + s^2),  t = |xi|.
// Requires s^2 >= t^2/4 - 1 (always true for t <= 2).
DirectionPair make_pair(const Vec3& xi, double s);

// Pair with prescribed |theta| = n (n >= 1); solves for s.
DirectionPair pair_for_norm(const Vec3& xi, double n);

// Geometric ladder of |theta| values, feasible for this xi:
// starts at max(2, smallest attainable norm) and multiplies by `factor`.
std::vector<double> growth_schedule(const Vec3& xi, int rungs, double factor = 1.5);

}  // namespace ramm
