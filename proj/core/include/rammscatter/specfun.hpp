#pragma once
// Spherical harmonics and radial wave functions at wavenumber k = 1.
//
// Harmonic phase convention used throughout the library:
//   Y_{l,m}(theta) = (-1)^m i^l / sqrt(4pi)
//                    * sqrt((2l+1)(l-m)!/(l+m)!) e^{im phi} P_{l,m}(cos t)
// with P_{l,m}(x) = (1-x^2)^{m/2} d^m P_l(x)/dx^m (no Condon-Shortley
// factor inside P) and P_{l,-m} = (-1)^m (l-m)!/(l+m)! P_{l,m}.  These Y
// are orthonormal on S^2 and differ from the textbook harmonics by the
// unimodular factor i^l, so every orthonormality-based identity is
// unchanged.
//
// The outgoing radial function is normalized so that h_l(r) -> e^{ir}/r
// as r -> infinity for every l (i.e. h_l = i^{l+1} (j_l + i y_l)).

#include <vector>

#include "rammscatter/common.hpp"

namespace ramm {

struct HarmonicIndex {
  int ell = 0;
  int m = 0;
};

inline int num_modes(int L) { return (L + 1) * (L + 1); }
inline int flat_index(HarmonicIndex lm) { return lm.ell * lm.ell + lm.ell + lm.m; }
inline HarmonicIndex mode_from_flat(int k) {
  int ell = 0;
  while ((ell + 1) * (ell + 1) <= k) ++ell;
  return {ell, k - ell * ell - ell};
}

// d^m P_l / dx^m for complex argument (m >= 0)
cd legendre_deriv(int ell, int m, cd x);

// All j_0..j_L at r >= 0 (Miller downward recurrence, stable for all l)
std::vector<double> sph_j_all(int L, double r);
std::vector<double> sph_y_all(int L, double r);  // upward recurrence, r > 0

double sph_j(int ell, double r);
double sph_y(int ell, double r);
double sph_j_prime(int ell, double r);
double sph_y_prime(int ell, double r);

cd hankel(int ell, double r);
cd hankel_prime(int ell, double r);

// Y_{l,m} for a real direction given by spherical angles
cd sph_harm(HarmonicIndex lm, double cos_theta, double phi);
// Y_{l,m} for a real unit vector
cd sph_harm(HarmonicIndex lm, const Vec3& dir);
// Analytic continuation of Y_{l,m} to complex unit vectors
// (dir . dir = 1, components complex).  Branch-free: uses the solid
// harmonic form (d1 +- i d2)^|m| * P_l^(|m|)(d3), polynomial in dir.
cd sph_harm(HarmonicIndex lm, const CVec3& dir);

// All modes l <= L at once (flat_index ordering); dir real or complex unit.
std::vector<cd> sph_harm_all(int L, const Vec3& dir);
std::vector<cd> sph_harm_all(int L, const CVec3& dir);

}  // namespace ramm
