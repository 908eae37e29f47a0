#include "rammscatter/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

namespace ramm {

namespace {

using State = std::array<double, 2>;  // (v, v')

struct RadialRhs {
  const Potential* q;
  int ell;
  void operator()(const State& y, State& dy, double r) const {
    double qr = (r <= q->a) ? q->at_r(r) : 0.0;
    dy[0] = y[1];
    dy[1] = (qr - 1.0 + double(ell) * (ell + 1.0) / (r * r)) * y[0];
  }
};

// regular-branch series start: v = r^{l+1}(1 + a1 r^2 + a2 r^4) for locally
// constant q; returns (v, v') up to an irrelevant overall scale
State series_start(double q0, int ell, double r0) {
  double beta = q0 - 1.0;
  double a1 = beta / (4.0 * ell + 6.0);
  double a2 = beta * a1 / (8.0 * ell + 20.0);
  double s = 1.0 + a1 * r0 * r0 + a2 * std::pow(r0, 4);
  double ds = 2.0 * a1 * r0 + 4.0 * a2 * std::pow(r0, 3);
  // scale out r0^{l+1}: v = s, v' = (l+1)/r0 * s + ds
  return {s, (ell + 1.0) / r0 * s + ds};
}

// integrate the regular solution from near the origin to r_end, sampling at
// the given radii (ascending, all <= r_end).  Renormalizes in chunks so huge
// potentials (t ~ 1e4) cannot overflow; samples are kept consistently scaled.
// Returns (v, v') at r_end in `out`, samples in `samples`, and the running
// max |v| seen (same scale as out/samples).
void integrate_regular(const Potential& q, int ell, double r_end, double tol,
                       const std::vector<double>& radii, State& out,
                       std::vector<double>* samples, double* vmax_out) {
  namespace ode = boost::numeric::odeint;
  double r0 = std::min(1e-3 * q.a, 1e-3 * r_end);
  State y = series_start(q.is_radial ? q.at_r(r0) : q.point(Vec3(r0, 0, 0)), ell, r0);
  RadialRhs rhs{&q, ell};
  auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_dopri5<State>());

  // breakpoints: requested radii, then ~64 rescale points up to r_end
  std::vector<double> stops = radii;
  int nchunk = 64;
  for (int i = 1; i <= nchunk; ++i) {
    double r = r0 + (r_end - r0) * i / nchunk;
    stops.push_back(r);
  }
  std::sort(stops.begin(), stops.end());
  if (samples) samples->clear();
  double vmax = std::abs(y[0]);
  double rcur = r0;
  size_t radii_idx = 0;
  for (double rs : stops) {
    if (rs <= rcur + 1e-15) {
      if (radii_idx < radii.size() && std::abs(rs - radii[radii_idx]) < 1e-15) {
        if (samples) samples->push_back(y[0]);
        ++radii_idx;
      }
      continue;
    }
    ode::integrate_adaptive(stepper, rhs, y, rcur, rs, (rs - rcur) / 16.0);
    rcur = rs;
    vmax = std::max(vmax, std::abs(y[0]));
    if (radii_idx < radii.size() && std::abs(rs - radii[radii_idx]) < 1e-15) {
      if (samples) samples->push_back(y[0]);
      ++radii_idx;
    }
    double mag = std::max(std::abs(y[0]), std::abs(y[1]));
    if (mag > 1e200) {
      double s = 1.0 / mag;
      y[0] *= s;
      y[1] *= s;
      vmax *= s;
      if (samples)
        for (double& v : *samples) v *= s;
    }
    if (!std::isfinite(y[0]) || !std::isfinite(y[1]))
      throw NumericalError("radial solver: non-finite state (potential too stiff?)");
  }
  out = y;
  if (vmax_out) *vmax_out = vmax;
}

double phase_shift_from_logderiv(int ell, double a, double beta) {
  // match v to cos(d) S + sin(d) C with S = r j_l, C = -r y_l
  double j = sph_j(ell, a), y = sph_y(ell, a);
  double jp = sph_j_prime(ell, a), yp = sph_y_prime(ell, a);
  double S = a * j, C = -a * y;
  double Sp = j + a * jp, Cp = -(y + a * yp);
  return std::atan2(Sp - beta * S, beta * C - Cp);
}

}  // namespace

PhaseShifts solve_radial(const Potential& q, int L, double tol) {
  if (!q.is_radial) throw ValidationError("solve_radial: potential must be radial");
  PhaseShifts ps;
  ps.a = q.a;
  ps.delta.resize(L + 1);
  ps.A_ell.resize(L + 1);
  for (int ell = 0; ell <= L; ++ell) {
    State y;
    integrate_regular(q, ell, q.a, tol, {}, y, nullptr, nullptr);
    if (y[0] == 0.0) throw NumericalError("solve_radial: node exactly at r=a");
    double beta = y[1] / y[0];
    double d = phase_shift_from_logderiv(ell, q.a, beta);
    ps.delta[ell] = d;
    ps.A_ell[ell] = 4.0 * pi * std::exp(iu * d) * std::sin(d);
  }
  return ps;
}

FarField far_field_from_radial(const PhaseShifts& ps) {
  FarField ff = farfield_from_phase_shifts(ps.delta, ps.a);
  ff.source = "radial";
  return ff;
}

FarField farfield_radial(const Potential& q, int L, double tol) {
  return far_field_from_radial(solve_radial(q, L, tol));
}

std::vector<cd> interior_wave(const Potential& q, int ell,
                              const std::vector<double>& radii,
                              double* delta_out) {
  std::vector<double> rr = radii;
  std::sort(rr.begin(), rr.end());
  if (!rr.empty() && rr.back() > q.a)
    throw ValidationError("interior_wave: radii must lie inside the support");
  State y;
  std::vector<double> samples;
  integrate_regular(q, ell, q.a, 1e-12, rr, y, &samples, nullptr);
  double beta = y[1] / y[0];
  double d = phase_shift_from_logderiv(ell, q.a, beta);
  if (delta_out) *delta_out = d;
  cd A = 4.0 * pi * std::exp(iu * d) * std::sin(d);
  cd u_a = 4.0 * pi * ipow(ell) * sph_j(ell, q.a) + A * hankel(ell, q.a);
  cd scale = u_a / y[0];
  // map sorted samples back to the caller's order; samples hold v(r) = r u(r)
  std::vector<cd> out(radii.size());
  for (size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] <= 0.0)
      throw ValidationError("interior_wave: radii must be positive");
    auto it = std::lower_bound(rr.begin(), rr.end(), radii[i]);
    out[i] = scale * samples[it - rr.begin()] * (q.a / radii[i]);
  }
  return out;
}

RegularSolution regular_solution_at(const Potential& q, int ell, double a_eval,
                                    double tol) {
  State y;
  double vmax = 0.0;
  integrate_regular(q, ell, a_eval, tol, {}, y, nullptr, &vmax);
  RegularSolution rs;
  rs.log_deriv = y[1] / y[0];
  rs.value_mag = std::abs(y[0]) / std::max(vmax, 1e-300);
  return rs;
}

}  // namespace ramm
