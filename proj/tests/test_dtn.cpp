#include <doctest.h>

#include <cmath>

#include "rammscatter/dtn.hpp"
#include "rammscatter/radial.hpp"
#include "rammscatter/specfun.hpp"

using namespace ramm;

TEST_CASE("free-space DtN is diagonal j_l'(a)/j_l(a)") {
  Potential q0 = Potential::radial_profile([](double) { return 0.0; }, 1.0);
  FarField ff = farfield_radial(q0, 8);
  double a = 1.3;
  DtnResult res = dtn_from_amplitude(ff, a, 6);
  for (int ell = 0; ell <= 6; ++ell) {
    cd want = sph_j_prime(ell, a) / sph_j(ell, a);
    for (int m = -ell; m <= ell; ++m) {
      int u = flat_index({ell, m});
      CHECK(std::abs(res.Lambda(u, u) - want) < 1e-6);
    }
  }
  // off-diagonals vanish
  Eigen::MatrixXcd off = res.Lambda;
  off.diagonal().setZero();
  CHECK(off.cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("amplitude-derived DtN matches the direct radial computation") {
  Potential q = Potential::ball(0.2, 1.0);
  FarField ff = farfield_radial(q, 10);
  double a = 1.3;
  DtnResult amp = dtn_from_amplitude(ff, a, 6);
  DtnResult dir = dtn_direct(q, a, 6);
  for (int ell = 0; ell <= 6; ++ell) {
    int u = flat_index({ell, 0});
    CHECK(std::abs(amp.Lambda(u, u) - dir.Lambda(u, u)) <
          0.01 * std::abs(dir.Lambda(u, u)));
  }
}

TEST_CASE("DtN conditioning grows with the truncation degree") {
  Potential q = Potential::ball(0.2, 1.0);
  FarField ff = farfield_radial(q, 12);
  double a = 1.3;
  double prev = 0.0;
  for (int L : {2, 5, 8}) {
    DtnResult res = dtn_from_amplitude(ff, a, L);
    CHECK(res.condition > prev);
    prev = res.condition;
  }
}

TEST_CASE("near-resonant radii are refused with advice") {
  Potential q = Potential::ball(0.2, 1.0);
  FarField ff = farfield_radial(q, 8);
  // j_0(pi) = 0: the layer system degenerates at a = pi
  CHECK_THROWS_AS(dtn_from_amplitude(ff, pi, 4), NumericalError);
  // the regular s-wave solution behaves like sin(r + delta_0) outside the
  // support, so it vanishes at a = pi - delta_0: a Dirichlet eigenvalue
  PhaseShifts ps = solve_radial(q, 0);
  CHECK_THROWS_AS(dtn_direct(q, pi - ps.delta[0], 4), NumericalError);
}

TEST_CASE("DtN input validation") {
  Potential q = Potential::ball(0.2, 1.0);
  FarField ff = farfield_radial(q, 8);
  CHECK_THROWS_AS(dtn_from_amplitude(ff, 0.5, 4), ValidationError);  // inside support
  CHECK_THROWS_AS(dtn_from_amplitude(ff, 1.3, 20), ValidationError);  // L > data
}
