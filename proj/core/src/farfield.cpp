#include "rammscatter/farfield.hpp"

#include <cmath>

namespace ramm {

void FarField::validate() const {
  int n = num_modes(L);
  if (B.rows() != n || B.cols() != n)
    throw ValidationError("FarField: B size does not match order L");
  if (a <= 0.0) throw ValidationError("FarField: support radius must be positive");
  if (!B.allFinite()) throw ValidationError("FarField: non-finite coefficients");
}

cd conj_harm(HarmonicIndex lm, const CVec3& dir) {
  double sign = ((lm.ell + lm.m) % 2 == 0) ? 1.0 : -1.0;
  return sign * sph_harm({lm.ell, -lm.m}, dir);
}

std::vector<cd> conj_harm_all(int L, const CVec3& dir) {
  std::vector<cd> out(num_modes(L));
  for (int ell = 0; ell <= L; ++ell)
    for (int m = -ell; m <= ell; ++m)
      out[flat_index({ell, m})] = conj_harm({ell, m}, dir);
  return out;
}

FarField farfield_from_phase_shifts(const std::vector<double>& delta, double a) {
  FarField ff;
  ff.L = (int)delta.size() - 1;
  ff.a = a;
  ff.source = "phase-shifts";
  int n = num_modes(ff.L);
  ff.B = Eigen::MatrixXcd::Zero(n, n);
  for (int ell = 0; ell <= ff.L; ++ell) {
    cd Al = 4.0 * pi * std::exp(iu * delta[ell]) * std::sin(delta[ell]);
    for (int m = -ell; m <= ell; ++m) {
      int u = flat_index({ell, m});
      ff.B(u, u) = Al;
    }
  }
  return ff;
}

FarField project_samples(const Eigen::MatrixXcd& samples, const S2Rule& rule,
                         int L, double a) {
  int nq = rule.size(), n = num_modes(L);
  if (samples.rows() != nq || samples.cols() != nq)
    throw ValidationError("project_samples: sample matrix does not match rule");
  // B(u,v) = int int A(beta,alpha) Y_u(alpha) conj(Y_v(beta)) dbeta dalpha
  Eigen::MatrixXcd Yb(nq, n);   // Y_v(beta_i) weighted
  Eigen::MatrixXcd Ya(nq, n);   // Y_u(alpha_j) weighted
  for (int i = 0; i < nq; ++i) {
    auto y = sph_harm_all(L, rule.dir[i]);
    for (int v = 0; v < n; ++v) {
      Yb(i, v) = rule.w[i] * std::conj(y[v]);
      Ya(i, v) = rule.w[i] * y[v];
    }
  }
  FarField ff;
  ff.L = L;
  ff.a = a;
  // samples(i,j) = A(beta_i, alpha_j);
  // B(u,v) = sum_{i,j} Ya(j,u) samples(i,j) Yb(i,v)
  ff.B = Ya.transpose() * samples.transpose() * Yb;
  return ff;
}

cd amplitude_eval(const FarField& ff, const CVec3& beta, const CVec3& alpha) {
  int n = num_modes(ff.L);
  auto cy = conj_harm_all(ff.L, alpha);
  auto yb = sph_harm_all(ff.L, beta);
  cd acc = 0.0;
  for (int u = 0; u < n; ++u) {
    if (cy[u] == cd(0.0)) continue;
    cd row = 0.0;
    for (int v = 0; v < n; ++v) row += ff.B(u, v) * yb[v];
    acc += cy[u] * row;
  }
  return acc;
}

cd amplitude_eval(const FarField& ff, const Vec3& beta, const Vec3& alpha) {
  return amplitude_eval(ff, CVec3(beta.cast<cd>()), CVec3(alpha.cast<cd>()));
}

AmplitudeValue amplitude_eval_checked(const FarField& ff, const CVec3& beta,
                                      const CVec3& alpha) {
  int n = num_modes(ff.L);
  auto cy = conj_harm_all(ff.L, alpha);
  auto yb = sph_harm_all(ff.L, beta);
  std::vector<cd> per_degree(ff.L + 1, cd(0.0));
  for (int v = 0; v < n; ++v) {
    cd cv = 0.0;
    for (int u = 0; u < n; ++u) cv += ff.B(u, v) * cy[u];
    per_degree[mode_from_flat(v).ell] += cv * yb[v];
  }
  AmplitudeValue out;
  out.value = 0.0;
  for (const cd& t : per_degree) out.value += t;
  double tL = std::abs(per_degree[ff.L]);
  double tLm1 = (ff.L >= 1) ? std::abs(per_degree[ff.L - 1]) : 0.0;
  if (tL > 0.0) {
    double ratio = (tLm1 > 0.0) ? std::min(0.9, tL / tLm1) : 0.5;
    out.tail_estimate = tL * ratio / (1.0 - ratio);
  }
  out.tail_flagged = out.tail_estimate > 0.01 * std::abs(out.value);
  return out;
}

cd field_outside(const FarField& ff, const Vec3& x, const Vec3& alpha) {
  double r = x.norm();
  if (r < ff.a * (1.0 - 1e-12))
    throw ValidationError("field_outside: point inside scatterer support");
  int n = num_modes(ff.L);
  auto cy = conj_harm_all(ff.L, CVec3(alpha.cast<cd>()));
  auto yx = sph_harm_all(ff.L, Vec3(x / r));
  cd u = std::exp(iu * cd(alpha.dot(x)));
  for (int v = 0; v < n; ++v) {
    cd cv = 0.0;
    for (int w = 0; w < n; ++w) cv += ff.B(w, v) * cy[w];
    u += cv * yx[v] * hankel(mode_from_flat(v).ell, r);
  }
  return u;
}

cd green_outside(const FarField& ff, const Vec3& x, const Vec3& y) {
  double rx = x.norm(), ry = y.norm();
  if (rx < ff.a || ry < ff.a)
    throw ValidationError("green_outside: both points must be outside the support");
  cd g = std::exp(iu * cd((x - y).norm())) / (4.0 * pi * (x - y).norm());
  int n = num_modes(ff.L);
  auto cy = conj_harm_all(ff.L, CVec3((-y / ry).cast<cd>()));
  auto yx = sph_harm_all(ff.L, Vec3(x / rx));
  cd acc = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      acc += ff.B(u, v) * cy[u] * hankel(mode_from_flat(u).ell, ry) * yx[v] *
             hankel(mode_from_flat(v).ell, rx);
  return g + acc / (4.0 * pi);
}

double unitarity_residual(const FarField& ff) {
  int n = num_modes(ff.L);
  Eigen::MatrixXcd S =
      Eigen::MatrixXcd::Identity(n, n) + (iu / (2.0 * pi)) * ff.B.transpose();
  Eigen::MatrixXcd R = S.adjoint() * S - Eigen::MatrixXcd::Identity(n, n);
  return R.jacobiSvd().singularValues()(0);
}

double reciprocity_residual(const FarField& ff) {
  int n = num_modes(ff.L);
  double worst = 0.0;
  for (int u = 0; u < n; ++u) {
    auto lu = mode_from_flat(u);
    for (int v = 0; v < n; ++v) {
      auto lv = mode_from_flat(v);
      double sign = ((lu.ell + lv.ell) % 2 == 0) ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(ff.B(u, v) - sign * ff.B(v, u)));
    }
  }
  return worst;
}

double optical_theorem_residual(const FarField& ff) {
  // Im A(a,a) = (1/4pi) int |A(b,a)|^2 db, checked on the order-L grid
  S2Rule rule = s2_rule(ff.L);
  int nq = rule.size(), n = num_modes(ff.L);
  Eigen::MatrixXcd Y(nq, n), CY(nq, n);
  for (int i = 0; i < nq; ++i) {
    auto y = sph_harm_all(ff.L, rule.dir[i]);
    for (int v = 0; v < n; ++v) {
      Y(i, v) = y[v];
      CY(i, v) = std::conj(y[v]);
    }
  }
  Eigen::MatrixXcd samples = Y * ff.B.transpose() * CY.transpose();
  double worst = 0.0;
  for (int j = 0; j < nq; ++j) {
    double cs = 0.0;
    for (int i = 0; i < nq; ++i) cs += rule.w[i] * std::norm(samples(i, j));
    cs /= 4.0 * pi;
    worst = std::max(worst, std::abs(samples(j, j).imag() - cs) / std::max(cs, 1e-300));
  }
  return worst;
}

}  // namespace ramm
