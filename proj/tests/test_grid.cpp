#include <doctest.h>

#include <cmath>

#include "rammscatter/inversion.hpp"
#include "rammscatter/ls_grid.hpp"
#include "rammscatter/radial.hpp"

using namespace ramm;

TEST_CASE("grid far field agrees with the radial solver") {
  Potential q = Potential::ball(1.0, 1.0);
  FarField fg = far_field_from_grid(q, 4, 16);
  FarField fr = farfield_radial(q, 4);
  double scale = fr.B.cwiseAbs().maxCoeff();
  CHECK((fg.B - fr.B).cwiseAbs().maxCoeff() / scale < 0.025);
}

TEST_CASE("grid discretization error shrinks about 4x when halving h") {
  Potential q = Potential::ball(1.0, 1.0);
  FarField fr = farfield_radial(q, 3);
  double e16 = (far_field_from_grid(q, 3, 16).B - fr.B).cwiseAbs().maxCoeff();
  double e32 = (far_field_from_grid(q, 3, 32).B - fr.B).cwiseAbs().maxCoeff();
  CHECK(e16 / e32 > 2.0);
  CHECK(e16 / e32 < 8.0);
}

TEST_CASE("weak-potential amplitude approaches the Born term") {
  // A(beta, alpha) -> -q~(beta - alpha)/(4 pi) as q0 -> 0
  double q0 = 0.01;
  Potential q = Potential::ball(q0, 1.0);
  FarField fg = far_field_from_grid(q, 4, 32);
  Vec3 alpha(0, 0, 1);
  for (double ang : {0.0, 1.0, 2.5}) {
    Vec3 beta(std::sin(ang), 0.0, std::cos(ang));
    cd got = amplitude_eval(fg, beta, alpha);
    cd born = -radial_fourier(q, (beta - alpha).norm()) / (4.0 * pi);
    CHECK(std::abs(got - born) < 0.03 * std::abs(born));
  }
}

TEST_CASE("grid solver input validation") {
  Potential q = Potential::ball(1.0, 1.0);
  CHECK_THROWS_AS(solve_ls_grid(q, Vec3(0, 0, 1), 4), ValidationError);
  CHECK_THROWS_AS(far_field_from_grid(q, 4, 4), ValidationError);
}

TEST_CASE("grid total field matches the radial partial-wave sum inside") {
  Potential q = Potential::ball(1.5, 1.0);
  Vec3 alpha(0, 0, 1);
  GridField g = solve_ls_grid(q, alpha, 32);
  // u(x, alpha) = sum_l u_l(r) (2l+1)/(4pi) P_l(x^.alpha) for radial q
  int L = 12;
  Vec3 x(g.coord(20), g.coord(16), g.coord(16));
  double r = x.norm();
  std::vector<double> radii = {r};
  cd want = 0.0;
  double c = x.dot(alpha) / r;
  std::vector<double> P(L + 1);
  P[0] = 1.0;
  P[1] = c;
  for (int l = 1; l < L; ++l) P[l + 1] = ((2 * l + 1) * c * P[l] - l * P[l - 1]) / (l + 1);
  for (int l = 0; l <= L; ++l)
    want += interior_wave(q, l, radii)[0] * (2.0 * l + 1.0) / (4.0 * pi) * P[l];
  cd got = g.u[g.idx(20, 16, 16)];
  CHECK(std::abs(got - want) < 0.02 * std::abs(want));
}
