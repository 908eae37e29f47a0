#include "rammscatter/specfun.hpp"

#include <cmath>

namespace ramm {

cd legendre_deriv(int ell, int m, cd x) {
  if (m > ell) return 0.0;
  if (m < 0) throw ValidationError("legendre_deriv: m must be >= 0");
  // table T[j][k] = d^k P_j(x), built with the m-times differentiated
  // three-term recurrence
  //   (j+1) T[j+1][k] = (2j+1)(x T[j][k] + k T[j][k-1]) - j T[j-1][k]
  std::vector<std::vector<cd>> T(ell + 1, std::vector<cd>(m + 1, 0.0));
  T[0][0] = 1.0;
  if (ell == 0) return T[0][m];
  T[1][0] = x;
  if (m >= 1) T[1][1] = 1.0;
  for (int j = 1; j < ell; ++j) {
    for (int k = 0; k <= m; ++k) {
      cd lower = (k > 0) ? T[j][k - 1] : cd(0.0);
      T[j + 1][k] =
          ((2.0 * j + 1.0) * (x * T[j][k] + double(k) * lower) - double(j) * T[j - 1][k]) /
          double(j + 1);
    }
  }
  return T[ell][m];
}

namespace {

// sqrt((2l+1) (l-|m|)! / (l+|m|)!)
double norm_factor(int ell, int m) {
  int am = std::abs(m);
  return std::sqrt((2.0 * ell + 1.0)) *
         std::exp(0.5 * (std::lgamma(ell - am + 1.0) - std::lgamma(ell + am + 1.0)));
}

cd int_pow(cd z, int n) {
  cd r = 1.0;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

constexpr double inv_sqrt_4pi = 0.28209479177387814;  // 1/sqrt(4 pi)

}  // namespace

std::vector<double> sph_j_all(int L, double r) {
  std::vector<double> j(L + 1, 0.0);
  if (r <= 0.0) {
    j[0] = 1.0;
    return j;
  }
  if (r < 1e-6) {
    // leading series; double factorial in the denominator
    double dfac = 1.0;
    for (int l = 0; l <= L; ++l) {
      if (l > 0) dfac *= (2.0 * l + 1.0);
      j[l] = std::pow(r, l) / dfac * (1.0 - r * r / (2.0 * (2.0 * l + 3.0)));
    }
    return j;
  }
  int nstart = std::max(L, (int)std::ceil(r)) + 35;
  double fp = 0.0, f = 1e-30;
  std::vector<double> raw(L + 1, 0.0);
  for (int n = nstart; n >= 1; --n) {
    double fm = (2.0 * n + 1.0) / r * f - fp;
    fp = f;
    f = fm;
    if (n - 1 <= L) raw[n - 1] = f;
    if (std::abs(f) > 1e250) {
      double s = 1e-250;
      f *= s;
      fp *= s;
      for (double& v : raw) v *= s;
    }
  }
  double scale = (std::sin(r) / r) / f;
  for (int l = 0; l <= L; ++l) j[l] = raw[l] * scale;
  return j;
}

std::vector<double> sph_y_all(int L, double r) {
  if (r <= 0.0) throw ValidationError("sph_y_all: r must be positive");
  std::vector<double> y(L + 1);
  y[0] = -std::cos(r) / r;
  if (L >= 1) y[1] = -std::cos(r) / (r * r) - std::sin(r) / r;
  for (int n = 1; n < L; ++n) y[n + 1] = (2.0 * n + 1.0) / r * y[n] - y[n - 1];
  return y;
}

double sph_j(int ell, double r) { return sph_j_all(ell, r)[ell]; }
double sph_y(int ell, double r) { return sph_y_all(ell, r)[ell]; }

double sph_j_prime(int ell, double r) {
  // f'_l = f_{l-1} - (l+1)/r f_l with j_{-1}(r) = cos(r)/r
  auto j = sph_j_all(ell, r);
  double jm1 = (ell == 0) ? std::cos(r) / r : j[ell - 1];
  return jm1 - (ell + 1.0) / r * j[ell];
}

double sph_y_prime(int ell, double r) {
  auto y = sph_y_all(ell, r);
  double ym1 = (ell == 0) ? std::sin(r) / r : y[ell - 1];
  return ym1 - (ell + 1.0) / r * y[ell];
}

cd hankel(int ell, double r) {
  return ipow(ell + 1) * cd(sph_j(ell, r), sph_y(ell, r));
}

cd hankel_prime(int ell, double r) {
  return ipow(ell + 1) * cd(sph_j_prime(ell, r), sph_y_prime(ell, r));
}

cd sph_harm(HarmonicIndex lm, double cos_theta, double phi) {
  double s2 = std::max(0.0, 1.0 - cos_theta * cos_theta);
  Vec3 dir(std::sqrt(s2) * std::cos(phi), std::sqrt(s2) * std::sin(phi), cos_theta);
  return sph_harm(lm, dir);
}

cd sph_harm(HarmonicIndex lm, const Vec3& dir) {
  return sph_harm(lm, CVec3(cd(dir.x()), cd(dir.y()), cd(dir.z())));
}

cd sph_harm(HarmonicIndex lm, const CVec3& dir) {
  int ell = lm.ell, m = lm.m, am = std::abs(m);
  if (am > ell) throw ValidationError("sph_harm: |m| > l");
  // (sin t)^|m| e^{i m phi} = (d1 + i d2)^m  (m >= 0), (d1 - i d2)^|m| (m < 0);
  // combined with the P_{l,-m} relation the m < 0 coefficient loses the
  // (-1)^m sign.
  cd azim = (m >= 0) ? int_pow(dir.x() + iu * dir.y(), am)
                     : int_pow(dir.x() - iu * dir.y(), am);
  double sign = (m >= 0 && m % 2 != 0) ? -1.0 : 1.0;
  return sign * ipow(ell) * inv_sqrt_4pi * norm_factor(ell, m) * azim *
         legendre_deriv(ell, am, dir.z());
}

std::vector<cd> sph_harm_all(int L, const Vec3& dir) {
  return sph_harm_all(L, CVec3(cd(dir.x()), cd(dir.y()), cd(dir.z())));
}

std::vector<cd> sph_harm_all(int L, const CVec3& dir) {
  std::vector<cd> out(num_modes(L));
  for (int ell = 0; ell <= L; ++ell)
    for (int m = -ell; m <= ell; ++m)
      out[flat_index({ell, m})] = sph_harm({ell, m}, dir);
  return out;
}

}  // namespace ramm
