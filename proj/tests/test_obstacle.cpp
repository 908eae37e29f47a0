#include <doctest.h>

#include <cmath>

#include "rammscatter/obstacle.hpp"
#include "rammscatter/specfun.hpp"

using namespace ramm;

TEST_CASE("dirichlet sphere far field kills the boundary trace") {
  double R = 1.0;
  FarField ff = dirichlet_sphere_farfield(R, 12);
  // total field on the sphere: 4 pi i^l j_l(R) + A_l h_l(R) = 0 per mode
  for (int ell = 0; ell <= 12; ++ell) {
    cd A = ff.B(flat_index({ell, 0}), flat_index({ell, 0}));
    cd trace = 4.0 * pi * ipow(ell) * sph_j(ell, R) + A * hankel(ell, R);
    CHECK(std::abs(trace) < 1e-12);
  }
  CHECK(unitarity_residual(ff) < 1e-10);
}

TEST_CASE("penetrable potential approaches the hard sphere as t grows") {
  auto rows = penetrable_limit(1.0, {1e2, 1e3, 1e4}, 10);
  REQUIRE(rows.size() == 3);
  // interior norm ~ t^{-1/2}, amplitude distance ~ t^{-1/2}
  double s1 = std::log(rows[1].interior_norm / rows[0].interior_norm) / std::log(10.0);
  double s2 = std::log(rows[2].interior_norm / rows[1].interior_norm) / std::log(10.0);
  CHECK(s1 == doctest::Approx(-0.5).epsilon(0.2));
  CHECK(s2 == doctest::Approx(-0.5).epsilon(0.2));
  CHECK(rows[2].amp_dist < rows[1].amp_dist);
  CHECK(rows[1].amp_dist < rows[0].amp_dist);
}

TEST_CASE("amplitude is Lipschitz in the potential height") {
  // |A(t1) - A(t2)| <= c |t1 - t2| with a stable constant on [1, 10]
  double c_ref = amplitude_t_distance(1.0, 1.0, 2.0, 8) / 1.0;
  for (auto [t1, t2] : {std::pair{2.0, 4.0}, {5.0, 6.5}, {8.0, 10.0}}) {
    double c = amplitude_t_distance(1.0, t1, t2, 8) / (t2 - t1);
    CHECK(c < 10.0 * c_ref);
    CHECK(c > 0.01 * c_ref);
  }
}

TEST_CASE("surface green identity for the indicator transform") {
  // int_S e^{-i theta'.s} d/dN e^{i theta.s} ds = -(|xi|^2/2) chi~_D(xi)
  double R = 1.0;
  Vec3 xi(0.0, 0.0, 1.0);
  DirectionPair pair = build_indicator_pair(xi, 1.0);
  cd lhs = surface_green_integral(R, pair, 40);
  cd rhs = -(xi.squaredNorm() / 2.0) * ball_indicator_ft(R, xi.norm());
  CHECK(std::abs(lhs - rhs) < 1e-8);
}

TEST_CASE("indicator transform of the ball matches the analytic value") {
  double R = 1.0;
  FarField ff = dirichlet_sphere_farfield(R, 16);
  for (double t : {1.0, 1.5}) {
    Vec3 xi = t * Vec3(0.3, -0.5, 0.9).normalized();
    cd rec = reconstruct_indicator(ff, R, xi, 1.0);
    cd truth = ball_indicator_ft(R, t);
    CHECK(std::abs(rec - truth) < 0.1 * std::abs(truth));
  }
}
