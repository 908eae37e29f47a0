#pragma once
// Gauss-Legendre rules and the product quadrature on the unit sphere.

#include <vector>

#include "rammscatter/common.hpp"

namespace ramm {

struct Rule1D {
  std::vector<double> x;  // nodes
  std::vector<double> w;  // weights
};

// n-point Gauss-Legendre on [-1, 1]
Rule1D gauss_legendre(int n);
// same rule mapped to [a, b]
Rule1D gauss_legendre(int n, double a, double b);

// Product rule on S^2: (L+1) Gauss points in cos(theta) x (2L+2) uniform
// points in phi.  Integrates spherical polynomials of degree <= 2L+1
// exactly, so mode projections up to order L are quadrature-exact.
struct S2Rule {
  std::vector<Vec3> dir;
  std::vector<double> w;  // sums to 4 pi
  int order = 0;
  int size() const { return (int)dir.size(); }
};

S2Rule s2_rule(int L);

}  // namespace ramm
