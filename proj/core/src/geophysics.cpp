#include "rammscatter/geophysics.hpp"

#include <cmath>

#include "rammscatter/quadrature.hpp"

namespace ramm {

double mode_eigenvalue(const BoxMode& m) {
  return static_cast<double>(m.m1 * m.m1 + m.m2 * m.m2);
}

double mode_shape(const BoxMode& m, double x1, double x2) {
  double e1 = (m.m1 == 0) ? 1.0 : 2.0;
  double e2 = (m.m2 == 0) ? 1.0 : 2.0;
  return std::sqrt(e1 * e2) / pi * std::cos(m.m1 * x1) * std::cos(m.m2 * x2);
}

cd mode_time_factor(const BoxMode& m, double c, double t) {
  double lam = mode_eigenvalue(m);
  if (lam <= 0.0)
    throw ValidationError("mode_time_factor: constant mode has no restoring force");
  double om = c * std::sqrt(lam);
  // (c^2/om) int_0^t sin(om (t-tau)) e^{z tau} dtau
  //   = (c^2/om) (om e^{z t} - om cos(om t) - z sin(om t)) / (z^2 + om^2)
  cd acc = 0.0;
  for (const ExpTerm& term : m.f) {
    cd z = term.rate;
    cd den = z * z + om * om;
    if (std::abs(den) < 1e-12)
      throw NumericalError("mode_time_factor: resonant forcing term");
    acc += term.amp * (om * std::exp(z * t) - om * std::cos(om * t) -
                       z * std::sin(om * t)) / den;
  }
  return c * c / om * acc;
}

double box_wavefield(double c, const BoxSource& src, double x1, double x2,
                     double t) {
  cd u = 0.0;
  for (const BoxMode& m : src.modes)
    u += mode_shape(m, x1, x2) * mode_time_factor(m, c, t);
  return u.real();
}

BoxSource nonuniqueness_source(bool flip_sign) {
  // f_{01}(t) = -(2/17) e^{-t} - (15/17) cos 4t + (15/68) sin 4t
  // f_{02}(t) = e^{-t}
  double ssin = flip_sign ? -15.0 / 68.0 : 15.0 / 68.0;
  BoxMode m01;
  m01.m1 = 0;
  m01.m2 = 1;
  m01.f = {
      {cd(-2.0 / 17.0, 0.0), cd(-1.0, 0.0)},
      {cd(-15.0 / 34.0, 0.0), cd(0.0, 4.0)},   // cos 4t split into exponentials
      {cd(-15.0 / 34.0, 0.0), cd(0.0, -4.0)},
      {cd(0.0, -ssin / 2.0), cd(0.0, 4.0)},    // sin 4t likewise
      {cd(0.0, ssin / 2.0), cd(0.0, -4.0)},
  };
  BoxMode m02;
  m02.m1 = 0;
  m02.m2 = 2;
  m02.f = {{cd(1.0, 0.0), cd(-1.0, 0.0)}};
  return BoxSource{{m01, m02}};
}

double nonuniqueness_residual(const NonuniqueSpec& spec) {
  BoxSource src = nonuniqueness_source(spec.flip_sign);
  double worst = 0.0;
  for (int it = 0; it < spec.nt; ++it) {
    double t = spec.T * (it + 1.0) / spec.nt;
    for (int ix = 0; ix < spec.nx; ++ix) {
      double x1 = pi * ix / (spec.nx - 1.0);
      double d = box_wavefield(spec.c1, src, x1, 0.0, t) -
                 box_wavefield(spec.c2, src, x1, 0.0, t);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

double laplace_identity_residual(const std::vector<double>& p_grid, double c2) {
  // surface trace in the Laplace domain: for each mode, gamma * c^2
  // fbar_m(p) / (p^2 + c^2 lambda_m); the two-speed difference must vanish
  double gamma = std::sqrt(2.0) / pi;
  double c1 = 1.0;
  double worst = 0.0;
  for (double p : p_grid) {
    if (p <= 0.0) throw ValidationError("laplace_identity_residual: p must be positive");
    double f01 = -(p * p + 1.0) / ((p + 1.0) * (p * p + 16.0));
    double f02 = 1.0 / (p + 1.0);
    double term1 = f01 * (c1 * c1 / (p * p + c1 * c1 * 1.0) -
                          c2 * c2 / (p * p + c2 * c2 * 1.0));
    double term2 = f02 * (c1 * c1 / (p * p + c1 * c1 * 4.0) -
                          c2 * c2 / (p * p + c2 * c2 * 4.0));
    worst = std::max(worst, std::abs(gamma * (term1 + term2)));
  }
  return worst;
}

LiftedValue lift_halfspace(const std::function<cd(double, double)>& trace,
                           double disk_R, const Vec3& target, int nr,
                           int nphi) {
  double x3 = target(2);
  if (x3 <= 0.0)
    throw ValidationError("lift_halfspace: target must lie above the data plane");
  if (disk_R <= 0.0 || nr < 2 || nphi < 4)
    throw ValidationError("lift_halfspace: bad quadrature parameters");

  Rule1D rr = gauss_legendre(nr, 0.0, disk_R);
  double dphi = 2.0 * pi / nphi;
  cd acc = 0.0;
  for (int i = 0; i < nr; ++i) {
    double rho = rr.x[i];
    double r = std::sqrt(rho * rho + x3 * x3);
    cd K = x3 * (1.0 - iu * r) * std::exp(iu * r) / (2.0 * pi * r * r * r);
    cd ring = 0.0;
    for (int k = 0; k < nphi; ++k) {
      double phi = dphi * k;
      ring += trace(target(0) + rho * std::cos(phi), target(1) + rho * std::sin(phi));
    }
    acc += rr.w[i] * rho * K * ring * dphi;
  }

  LiftedValue out;
  out.value = acc;
  double rim = 0.0;
  for (int k = 0; k < nphi; ++k) {
    double phi = dphi * k;
    rim += std::abs(trace(target(0) + disk_R * std::cos(phi),
                          target(1) + disk_R * std::sin(phi)));
  }
  rim /= nphi;
  out.edge_magnitude = rim;
  // kernel decays like x3/(2 pi rho^2) along the plane; crude rim tail bound
  out.edge_flagged = rim * x3 > 0.05 * std::abs(acc);
  return out;
}

}  // namespace ramm
