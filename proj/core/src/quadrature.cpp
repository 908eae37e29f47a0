#include "rammscatter/quadrature.hpp"

#include <cmath>

namespace ramm {

Rule1D gauss_legendre(int n) {
  if (n < 1) throw ValidationError("gauss_legendre: n must be >= 1");
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n / 2 + n % 2; ++i) {
    // Newton from the Chebyshev-like initial guess
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;  // ascending order
    r.w[i] = w;
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = w;
  }
  return r;
}

Rule1D gauss_legendre(int n, double a, double b) {
  Rule1D r = gauss_legendre(n);
  for (int i = 0; i < n; ++i) {
    r.x[i] = 0.5 * (b - a) * r.x[i] + 0.5 * (a + b);
    r.w[i] *= 0.5 * (b - a);
  }
  return r;
}

S2Rule s2_rule(int L) {
  int nt = L + 1, np = 2 * L + 2;
  Rule1D gl = gauss_legendre(nt);
  S2Rule s;
  s.order = L;
  s.dir.reserve(nt * np);
  s.w.reserve(nt * np);
  for (int i = 0; i < nt; ++i) {
    double ct = gl.x[i], st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int k = 0; k < np; ++k) {
      double phi = 2.0 * pi * k / np;
      s.dir.emplace_back(st * std::cos(phi), st * std::sin(phi), ct);
      s.w.push_back(gl.w[i] * 2.0 * pi / np);
    }
  }
  return s;
}

}  // namespace ramm
