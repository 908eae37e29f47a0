#include <doctest.h>

#include <cmath>

#include "rammscatter/geophysics.hpp"

using namespace ramm;

TEST_CASE("single-mode wavefield matches the hand-integrated solution") {
  // f(t) = e^{-t} on mode (0,1) at c = 1:
  //   u(t) = int_0^t sin(t - tau) e^{-tau} dtau = (e^{-t} - cos t + sin t)/2
  BoxMode m;
  m.m1 = 0;
  m.m2 = 1;
  m.f = {{cd(1.0, 0.0), cd(-1.0, 0.0)}};
  BoxSource src{{m}};
  for (double t : {0.5, 2.0, 7.3}) {
    double want = std::sqrt(2.0) / pi * std::cos(1.3) *
                  (std::exp(-t) - std::cos(t) + std::sin(t)) / 2.0;
    CHECK(box_wavefield(1.0, src, 0.4, 1.3, t) == doctest::Approx(want).epsilon(1e-12));
  }
  // zero initial conditions
  CHECK(std::abs(box_wavefield(1.0, src, 0.4, 1.3, 0.0)) < 1e-15);
}

TEST_CASE("oscillatory forcing times are integrated in closed form") {
  // f = cos(4t) on mode (0,2), c = 1 (omega = 2): compare with a fine
  // trapezoid evaluation of the Duhamel integral
  BoxMode m;
  m.m1 = 0;
  m.m2 = 2;
  m.f = {{cd(0.5, 0.0), cd(0.0, 4.0)}, {cd(0.5, 0.0), cd(0.0, -4.0)}};
  double t = 3.7, om = 2.0;
  int n = 200000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    double tau = t * (i + 0.5) / n;
    acc += std::sin(om * (t - tau)) * std::cos(4.0 * tau) * (t / n);
  }
  acc /= om;  // times c^2 = 1
  CHECK(mode_time_factor(m, 1.0, t).real() == doctest::Approx(acc).epsilon(1e-8));
  CHECK(std::abs(mode_time_factor(m, 1.0, t).imag()) < 1e-14);
}

TEST_CASE("two-speed surface traces are identical for the tuned source") {
  NonuniqueSpec spec;
  CHECK(nonuniqueness_residual(spec) < 1e-8);
  // Laplace-domain identity holds on a p-grid
  std::vector<double> ps;
  for (double p = 0.1; p < 20.0; p += 0.37) ps.push_back(p);
  CHECK(laplace_identity_residual(ps) < 1e-14);
}

TEST_CASE("perturbing the construction breaks the indistinguishability") {
  NonuniqueSpec pert;
  pert.c2 = 2.01;
  CHECK(nonuniqueness_residual(pert) > 1e-3);
  NonuniqueSpec flip;
  flip.flip_sign = true;
  CHECK(nonuniqueness_residual(flip) > 1e-2);
  std::vector<double> ps = {0.5, 1.0, 2.0};
  CHECK(laplace_identity_residual(ps, 2.01) > 1e-5);
}

TEST_CASE("lifting reproduces a point-source field above the plane") {
  Vec3 src(0.0, 0.0, -2.0);
  auto trace = [&](double x1, double x2) {
    double r = (Vec3(x1, x2, 0.0) - src).norm();
    return std::exp(iu * r) / (4.0 * pi * r);
  };
  Vec3 tgt(0.0, 0.0, 1.0);
  LiftedValue lv = lift_halfspace(trace, 30.0, tgt);
  double rd = (tgt - src).norm();
  cd want = std::exp(iu * rd) / (4.0 * pi * rd);
  CHECK(std::abs(lv.value - want) < 0.01 * std::abs(want));
  // a too-small disk is flagged by the rim check
  LiftedValue bad = lift_halfspace(trace, 2.0, tgt, 100, 64);
  CHECK(bad.edge_flagged);
  CHECK_THROWS_AS(lift_halfspace(trace, 30.0, Vec3(0, 0, -1.0)), ValidationError);
}
