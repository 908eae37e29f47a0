#pragma once
// Volume integral-equation solver on a uniform voxel grid:
//   u(x) = e^{i alpha.x} - int e^{i|x-y|}/(4pi|x-y|) q(y) u(y) dy
// discretized on the cube [-a,a]^3, convolution applied by zero-padded FFT
// with the singular cell replaced by its analytic mean, Krylov (restarted
// GMRES) iteration.

#include <vector>

#include "rammscatter/farfield.hpp"
#include "rammscatter/potential.hpp"

namespace ramm {

struct GridField {
  std::vector<cd> u;  // row-major (z slowest), n^3 values
  int n = 0;
  double a = 1.0;  // cube half-edge
  double coord(int i) const { return -a + (2.0 * a) * (i + 0.5) / n; }
  int idx(int ix, int iy, int iz) const { return (iz * n + iy) * n + ix; }
};

GridField solve_ls_grid(const Potential& q, const Vec3& alpha, int n,
                        double tol = 1e-8);

FarField far_field_from_grid(const Potential& q, int L, int n,
                             double tol = 1e-8, int jobs = 1);

}  // namespace ramm
