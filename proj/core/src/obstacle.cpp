#include "rammscatter/obstacle.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "rammscatter/quadrature.hpp"
#include "rammscatter/radial.hpp"
#include "rammscatter/specfun.hpp"

namespace ramm {

FarField dirichlet_sphere_farfield(double R, int L) {
  if (R <= 0.0) throw ValidationError("dirichlet_sphere_farfield: R must be positive");
  std::vector<double> j = sph_j_all(L, R);
  FarField ff;
  ff.L = L;
  ff.a = R;
  ff.source = "dirichlet-sphere";
  ff.B = Eigen::MatrixXcd::Zero(num_modes(L), num_modes(L));
  for (int ell = 0; ell <= L; ++ell) {
    cd Aell = -4.0 * pi * ipow(ell) * j[ell] / hankel(ell, R);
    for (int m = -ell; m <= ell; ++m) {
      int u = flat_index({ell, m});
      ff.B(u, u) = Aell;
    }
  }
  return ff;
}

namespace {

// per-degree amplitude values A_ell (diagonal of B for a radial scatterer)
std::vector<cd> diag_degrees(const FarField& ff) {
  std::vector<cd> A(ff.L + 1);
  for (int ell = 0; ell <= ff.L; ++ell) A[ell] = ff.B(flat_index({ell, 0}), flat_index({ell, 0}));
  return A;
}

// sup over direction pairs of |sum_ell dA_ell (2l+1)/(4pi) P_ell(cos)|
double sup_amplitude_diff(const std::vector<cd>& dA) {
  int L = static_cast<int>(dA.size()) - 1;
  double worst = 0.0;
  const int nc = 400;
  std::vector<double> P(L + 1);
  for (int i = 0; i <= nc; ++i) {
    double c = -1.0 + 2.0 * i / nc;
    P[0] = 1.0;
    if (L >= 1) P[1] = c;
    for (int ell = 1; ell < L; ++ell)
      P[ell + 1] = ((2 * ell + 1) * c * P[ell] - ell * P[ell - 1]) / (ell + 1);
    cd s = 0.0;
    for (int ell = 0; ell <= L; ++ell) s += dA[ell] * (2.0 * ell + 1.0) / (4.0 * pi) * P[ell];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace

std::vector<LimitRow> penetrable_limit(double R, const std::vector<double>& ts, int L) {
  FarField dir = dirichlet_sphere_farfield(R, L);
  std::vector<cd> Adir = diag_degrees(dir);
  Rule1D rr = gauss_legendre(48, 0.0, R);
  std::vector<LimitRow> rows;
  for (double t : ts) {
    if (t <= 0.0) throw ValidationError("penetrable_limit: t must be positive");
    Potential q = Potential::ball(t, R);
    FarField ff = farfield_radial(q, L);
    std::vector<cd> At = diag_degrees(ff);
    std::vector<cd> dA(L + 1);
    for (int ell = 0; ell <= L; ++ell) dA[ell] = At[ell] - Adir[ell];

    // ||u||^2_{L2(ball)} = sum_ell (2l+1)/(4pi) int_0^R |g_ell|^2 r^2 dr
    double nrm2 = 0.0;
    for (int ell = 0; ell <= L; ++ell) {
      std::vector<cd> g = interior_wave(q, ell, rr.x);
      double intg = 0.0;
      for (size_t i = 0; i < rr.x.size(); ++i)
        intg += rr.w[i] * std::norm(g[i]) * rr.x[i] * rr.x[i];
      nrm2 += (2.0 * ell + 1.0) / (4.0 * pi) * intg;
    }
    rows.push_back({t, std::sqrt(nrm2), sup_amplitude_diff(dA)});
  }
  return rows;
}

double amplitude_t_distance(double R, double t1, double t2, int L) {
  std::vector<cd> A1 = diag_degrees(farfield_radial(Potential::ball(t1, R), L));
  std::vector<cd> A2 = diag_degrees(farfield_radial(Potential::ball(t2, R), L));
  std::vector<cd> dA(L + 1);
  for (int ell = 0; ell <= L; ++ell) dA[ell] = A1[ell] - A2[ell];
  return sup_amplitude_diff(dA);
}

DirectionPair build_indicator_pair(const Vec3& xi, double s) {
  DirectionPair p = make_pair(xi, s);
  std::swap(p.theta, p.theta_prime);  // now theta - theta' = xi
  return p;
}

cd surface_green_integral(double R, const DirectionPair& pair, int L_quad) {
  S2Rule rule = s2_rule(L_quad);
  cd acc = 0.0;
  for (size_t j = 0; j < rule.dir.size(); ++j) {
    CVec3 s = (R * rule.dir[j]).cast<cd>();
    cd ts = pair.theta(0) * s(0) + pair.theta(1) * s(1) + pair.theta(2) * s(2);
    cd tps = pair.theta_prime(0) * s(0) + pair.theta_prime(1) * s(1) + pair.theta_prime(2) * s(2);
    cd tn = (pair.theta(0) * rule.dir[j](0) + pair.theta(1) * rule.dir[j](1) +
             pair.theta(2) * rule.dir[j](2));
    acc += rule.w[j] * R * R * std::exp(-iu * tps) * iu * tn * std::exp(iu * ts);
  }
  return acc;
}

cd ball_indicator_ft(double R, double xi_norm) {
  double u = xi_norm * R;
  if (u < 1e-6) return 4.0 * pi * R * R * R / 3.0 * (1.0 - u * u / 10.0);
  return 4.0 * pi * (std::sin(u) - u * std::cos(u)) / (xi_norm * xi_norm * xi_norm);
}

cd reconstruct_indicator(const FarField& ff, double R_known, const Vec3& xi,
                         double s, double reg, int L_nu) {
  ff.validate();
  double t = xi.norm();
  if (t <= 0.0) throw ValidationError("reconstruct_indicator: xi must be nonzero");
  DirectionPair pair = build_indicator_pair(xi, s);

  if (L_nu < 0) {
    L_nu = std::min(ff.L, std::max(10, 2 * static_cast<int>(std::ceil(pair.norm))));
  }
  if (L_nu > ff.L)
    throw ValidationError("reconstruct_indicator: L_nu exceeds far-field degree");

  // Normal derivative of the total field on the sphere surface:
  //   u_N(s,alpha) = sum_v c_ell conj(Y_v(alpha)) Y_v(s^), c_ell = 4pi(-1)^ell/(R^2 h_ell(R)).
  // Fit nu so that int u_N(s,alpha) nu(alpha) dalpha = d/dN e^{i theta.s}:
  // expand the target in harmonics, t_v = int target conj(Y_v) ds^, then
  // nu_v = conj(c) t_v / (|c|^2 + reg) per mode (diagonal least squares).
  int quad_order = std::max(2 * L_nu + 2, static_cast<int>(std::ceil(2.5 * pair.norm * R_known)) + 10);
  S2Rule rule = s2_rule(quad_order);
  int nm = num_modes(L_nu);
  Eigen::VectorXcd tv = Eigen::VectorXcd::Zero(nm);
  for (size_t k = 0; k < rule.dir.size(); ++k) {
    CVec3 sv = (R_known * rule.dir[k]).cast<cd>();
    cd ts = pair.theta(0) * sv(0) + pair.theta(1) * sv(1) + pair.theta(2) * sv(2);
    cd tn = pair.theta(0) * rule.dir[k](0) + pair.theta(1) * rule.dir[k](1) +
            pair.theta(2) * rule.dir[k](2);
    cd target = iu * tn * std::exp(iu * ts);
    std::vector<cd> Y = sph_harm_all(L_nu, rule.dir[k]);
    for (int v = 0; v < nm; ++v) tv(v) += rule.w[k] * target * std::conj(Y[v]);
  }
  Eigen::VectorXcd nu(nm);
  for (int v = 0; v < nm; ++v) {
    HarmonicIndex lm = mode_from_flat(v);
    cd c = 4.0 * pi * ((lm.ell % 2 == 0) ? 1.0 : -1.0) /
           (R_known * R_known * hankel(lm.ell, R_known));
    nu(v) = std::conj(c) * tv(v) / (std::norm(c) + reg);
  }

  // int A(theta',alpha) nu(alpha) dalpha = sum_v (B^T nu)_v Y_v(theta')
  int nmf = num_modes(ff.L);
  Eigen::VectorXcd nu_full = Eigen::VectorXcd::Zero(nmf);
  nu_full.head(nm) = nu;
  Eigen::VectorXcd w = ff.B.transpose() * nu_full;
  cd integ = 0.0;
  std::vector<cd> Ytp = sph_harm_all(ff.L, pair.theta_prime);
  for (int v = 0; v < nmf; ++v) integ += w(v) * Ytp[v];
  return 8.0 * pi / (t * t) * integ;
}

}  // namespace ramm
