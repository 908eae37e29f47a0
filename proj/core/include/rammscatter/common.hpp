#pragma once
// Shared scalar/vector typedefs and error types for the scattering toolkit.
// Wavenumber is fixed at k = 1 throughout: all lengths are measured in
// units of 1/k.

#include <complex>
#include <stdexcept>
#include <string>
#include <Eigen/Core>

namespace ramm {

using cd = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cd iu{0.0, 1.0};

// Bad user input: domain violations, malformed files, inconsistent sizes.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A solver failed to converge or produced non-finite values.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// i^n for integer n (exact, avoids pow on the unit circle)
inline cd ipow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline double sq(double x) { return x * x; }

}  // namespace ramm
