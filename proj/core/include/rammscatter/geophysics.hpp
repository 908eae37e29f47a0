#pragma once
// Surface-data nonuniqueness demonstration for the 2-D box wave problem
//   u_tt = c^2 (Laplace u + f(t) phi(x)),  u = u_t = 0 at t=0, Neumann walls,
// on [0,pi]^2, plus lifting of surface scattering data from a plane to a
// higher plane through the half-space Green kernel.

#include <functional>
#include <vector>

#include "rammscatter/common.hpp"

namespace ramm {

// f(t) = sum_k Re is not taken: terms come in conjugate pairs so the sum is
// real; each term is amp * exp(rate * t)
struct ExpTerm {
  cd amp;
  cd rate;
};

struct BoxMode {
  int m1 = 0, m2 = 0;          // cos(m1 x1) cos(m2 x2) mode
  std::vector<ExpTerm> f;      // time factor of the source in this mode
};

struct BoxSource {
  std::vector<BoxMode> modes;
};

double mode_eigenvalue(const BoxMode& m);       // m1^2 + m2^2
double mode_shape(const BoxMode& m, double x1, double x2);  // normalized

// time factor at (t, c): (c^2/omega) int_0^t sin(omega (t-tau)) f(tau) dtau,
// omega = c sqrt(lambda_m); closed form per exponential term
cd mode_time_factor(const BoxMode& m, double c, double t);

double box_wavefield(double c, const BoxSource& src, double x1, double x2,
                     double t);

// two-mode source whose surface trace is identical for speeds c=1 and c=2
BoxSource nonuniqueness_source(bool flip_sign = false);

struct NonuniqueSpec {
  double c1 = 1.0, c2 = 2.0;
  double T = 10.0;
  int nx = 33, nt = 201;
  bool flip_sign = false;  // control: break the f_{01} sign choice
};

// max |u(.,0,.;c1) - u(.,0,.;c2)| over the surface grid
double nonuniqueness_residual(const NonuniqueSpec& spec);

// residual of the Laplace-domain matching identity on a p-grid (rational)
double laplace_identity_residual(const std::vector<double>& p_grid,
                                 double c2 = 2.0);

struct LiftedValue {
  cd value;
  double edge_magnitude = 0.0;  // |trace| near the truncation rim
  bool edge_flagged = false;    // rim contribution not negligible
};

// lift scattering data given on the plane x3 = 0 to a point with x3 > 0:
//   u(x) = int K(x, y') u(y',0) dy',  K = x3 (1 - i r) e^{i r} / (2 pi r^3),
// truncating the integral to a disk of radius disk_R around (x1, x2)
LiftedValue lift_halfspace(const std::function<cd(double, double)>& trace,
                           double disk_R, const Vec3& target, int nr = 400,
                           int nphi = 256);

}  // namespace ramm
