#include <doctest.h>

#include <cmath>

#include "rammscatter/farfield.hpp"
#include "rammscatter/quadrature.hpp"
#include "rammscatter/specfun.hpp"

using namespace ramm;

namespace {
Vec3 dir_from_angles(double th, double ph) {
  return Vec3(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
}
}  // namespace

TEST_CASE("harmonics match hand-computed low orders") {
  // convention: Y_{l,m} = (-1)^m i^l sqrt((2l+1)(l-m)!/(4pi (l+m)!)) e^{im phi} P_{l,m},
  // P_{l,m} = (1-x^2)^{m/2} d^m P_l / dx^m (no Condon-Shortley)
  double th = 0.7, ph = 1.3;
  CVec3 d = dir_from_angles(th, ph).cast<cd>();
  cd eip = std::exp(iu * ph);

  CHECK(std::abs(sph_harm({0, 0}, d) - 1.0 / std::sqrt(4.0 * pi)) < 1e-14);
  CHECK(std::abs(sph_harm({1, 0}, d) - iu * std::sqrt(3.0 / (4.0 * pi)) * std::cos(th)) < 1e-14);
  CHECK(std::abs(sph_harm({1, 1}, d) -
                 (-iu) * std::sqrt(3.0 / (8.0 * pi)) * eip * std::sin(th)) < 1e-14);
  CHECK(std::abs(sph_harm({1, -1}, d) -
                 iu * std::sqrt(3.0 / (8.0 * pi)) * std::conj(eip) * std::sin(th)) < 1e-14);
  cd y20 = -std::sqrt(5.0 / (16.0 * pi)) * (3.0 * std::cos(th) * std::cos(th) - 1.0);
  CHECK(std::abs(sph_harm({2, 0}, d) - y20) < 1e-14);  // i^2 = -1
}

TEST_CASE("harmonics are orthonormal") {
  int L = 8;
  S2Rule rule = s2_rule(2 * L + 1);
  int nm = num_modes(L);
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(nm, nm);
  for (size_t k = 0; k < rule.dir.size(); ++k) {
    std::vector<cd> Y = sph_harm_all(L, rule.dir[k]);
    for (int u = 0; u < nm; ++u)
      for (int v = 0; v < nm; ++v) G(u, v) += rule.w[k] * Y[u] * std::conj(Y[v]);
  }
  CHECK((G - Eigen::MatrixXcd::Identity(nm, nm)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("harmonic symmetries") {
  Vec3 d = dir_from_angles(1.1, -0.4);
  for (int ell = 0; ell <= 6; ++ell)
    for (int m = -ell; m <= ell; ++m) {
      cd y = sph_harm({ell, m}, d);
      cd ym = sph_harm({ell, -m}, d);
      double sg = ((ell + m) % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(std::conj(y) - sg * ym) < 1e-13);           // conjugation
      Vec3 dneg = -d;
      cd yneg = sph_harm({ell, m}, dneg);
      double sp = (ell % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(yneg - sp * y) < 1e-13);                    // parity
    }
  // addition theorem
  for (int ell = 0; ell <= 6; ++ell) {
    double s = 0.0;
    for (int m = -ell; m <= ell; ++m) s += std::norm(sph_harm({ell, m}, d));
    CHECK(s == doctest::Approx((2.0 * ell + 1.0) / (4.0 * pi)).epsilon(1e-12));
  }
}

TEST_CASE("continuation to complex directions is consistent") {
  // theta.theta = 1 with theta = (is, z2, t2): harmonics must continue smoothly
  double s = 0.8, t2 = 0.3;
  double z2 = std::sqrt(1.0 - t2 * t2 + s * s);
  CVec3 theta(iu * s, cd(z2, 0.0), cd(t2, 0.0));
  for (int ell = 0; ell <= 5; ++ell)
    for (int m = -ell; m <= ell; ++m) {
      cd lhs = conj_harm({ell, m}, theta);
      double sg = ((ell + m) % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(lhs - sg * sph_harm({ell, -m}, theta)) < 1e-12);
    }
  // at s -> 0 the continuation matches the real-direction values
  CVec3 nearly(cd(0.0, 1e-10), cd(std::sqrt(1 - t2 * t2), 0.0), cd(t2, 0.0));
  Vec3 real_dir(0.0, std::sqrt(1 - t2 * t2), t2);
  for (int ell = 0; ell <= 5; ++ell)
    for (int m = -ell; m <= ell; ++m)
      CHECK(std::abs(sph_harm({ell, m}, nearly) - sph_harm({ell, m}, real_dir)) < 1e-8);
}

TEST_CASE("spherical bessel closed forms and Wronskian") {
  for (double r : {0.3, 1.0, 4.7, 20.0}) {
    std::vector<double> j = sph_j_all(10, r);
    std::vector<double> y = sph_y_all(10, r);
    CHECK(std::abs(j[0] - std::sin(r) / r) < 1e-14);
    CHECK(std::abs(j[1] - (std::sin(r) / (r * r) - std::cos(r) / r)) < 1e-14);
    CHECK(std::abs(y[0] + std::cos(r) / r) < 1e-14);
    for (int ell = 0; ell <= 10; ++ell) {
      double w = j[ell] * sph_y_prime(ell, r) - sph_j_prime(ell, r) * y[ell];
      CHECK(std::abs(w - 1.0 / (r * r)) < 1e-12 * (std::abs(y[ell] * j[ell]) + 1.0));
    }
  }
  // tiny argument: j_l ~ r^l / (2l+1)!!
  CHECK(std::abs(sph_j(2, 1e-8) - 1e-16 / 15.0) < 1e-22);
  // outgoing normalization: h_l(r) -> e^{ir}/r for r >> l
  for (int ell = 0; ell <= 3; ++ell)
    CHECK(std::abs(hankel(ell, 300.0) - std::exp(iu * 300.0) / 300.0) < 1e-4);
}

TEST_CASE("plane wave expansion in this harmonic basis") {
  // e^{i alpha.x} = sum_v 4 pi i^l j_l(|x|) Y_v(x^) conj(Y_v(alpha))
  Vec3 alpha = dir_from_angles(0.9, 2.1);
  Vec3 x = 1.7 * dir_from_angles(2.2, -0.8);
  int L = 30;
  std::vector<double> j = sph_j_all(L, x.norm());
  Vec3 xhat = x / x.norm();
  std::vector<cd> Yx = sph_harm_all(L, xhat);
  std::vector<cd> Ya = sph_harm_all(L, alpha);
  cd sum = 0.0;
  for (int v = 0; v < num_modes(L); ++v) {
    int ell = mode_from_flat(v).ell;
    sum += 4.0 * pi * ipow(ell) * j[ell] * Yx[v] * std::conj(Ya[v]);
  }
  CHECK(std::abs(sum - std::exp(iu * alpha.dot(x))) < 1e-12);
}

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  Rule1D r = gauss_legendre(8);
  double s = 0.0;
  for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::pow(r.x[i], 14);
  CHECK(s == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
  Rule1D rm = gauss_legendre(8, 1.0, 3.0);
  s = 0.0;
  for (size_t i = 0; i < rm.x.size(); ++i) s += rm.w[i] * rm.x[i] * rm.x[i];
  CHECK(s == doctest::Approx(26.0 / 3.0).epsilon(1e-13));
  S2Rule sr = s2_rule(6);
  double w = 0.0;
  for (double wi : sr.w) w += wi;
  CHECK(w == doctest::Approx(4.0 * pi).epsilon(1e-13));
}
