#include "rammscatter/ls_grid.hpp"

#include <cmath>
#include <cstring>
#include <mutex>
#include <thread>

#include <fftw3.h>

namespace ramm {

namespace {

std::mutex fftw_mutex;  // FFTW planning is not thread-safe

// FFT-convolution workspace for one grid size
struct ConvOp {
  int n, N;  // N = 2n zero-padding
  double a, h;
  std::vector<double> qv;   // q at cell centers, n^3
  std::vector<cd> khat;     // transformed kernel, N^3
  std::vector<cd> buf;      // padded work buffer
  fftw_plan fwd, bwd;

  ConvOp(const Potential& q, int n_) : n(n_), N(2 * n_), a(q.a), h(2 * q.a / n_) {
    GridField g;
    g.n = n;
    g.a = a;
    qv.resize((size_t)n * n * n);
    for (int iz = 0; iz < n; ++iz)
      for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
          Vec3 x(g.coord(ix), g.coord(iy), g.coord(iz));
          qv[g.idx(ix, iy, iz)] = q(x);
        }

    size_t NN = (size_t)N * N * N;
    buf.resize(NN);
    khat.resize(NN);
    {
      std::lock_guard<std::mutex> lk(fftw_mutex);
      fwd = fftw_plan_dft_3d(N, N, N, reinterpret_cast<fftw_complex*>(buf.data()),
                             reinterpret_cast<fftw_complex*>(buf.data()),
                             FFTW_FORWARD, FFTW_ESTIMATE);
      bwd = fftw_plan_dft_3d(N, N, N, reinterpret_cast<fftw_complex*>(buf.data()),
                             reinterpret_cast<fftw_complex*>(buf.data()),
                             FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    // kernel on the padded torus; includes the cell volume h^3.
    // Singular cell: int_{cell} e^{ir}/(4 pi r) dV over the equal-volume ball
    // of radius re: int_0^re r e^{ir} dr = e^{i re}(1 - i re) - 1.
    double re = h * std::cbrt(3.0 / (4.0 * pi));
    double cutoff = 2.0 * std::sqrt(3.0) * a + h;  // covers the padded cube
    for (int iz = 0; iz < N; ++iz) {
      int dz = (iz <= N / 2) ? iz : iz - N;
      for (int iy = 0; iy < N; ++iy) {
        int dy = (iy <= N / 2) ? iy : iy - N;
        for (int ix = 0; ix < N; ++ix) {
          int dx = (ix <= N / 2) ? ix : ix - N;
          double r = h * std::sqrt(double(dx) * dx + double(dy) * dy + double(dz) * dz);
          size_t id = ((size_t)iz * N + iy) * N + ix;
          if (r == 0.0)
            buf[id] = std::exp(iu * re) * (1.0 - iu * re) - 1.0;
          else if (r <= cutoff)
            buf[id] = h * h * h * std::exp(iu * r) / (4.0 * pi * r);
          else
            buf[id] = 0.0;
        }
      }
    }
    fftw_execute(fwd);
    khat = buf;
  }

  ~ConvOp() {
    std::lock_guard<std::mutex> lk(fftw_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }

  // y = x + conv(q .* x)   (the discretized I + T)
  void apply(const std::vector<cd>& x, std::vector<cd>& y) {
    size_t NN = (size_t)N * N * N;
    std::fill(buf.begin(), buf.end(), cd(0.0));
    for (int iz = 0; iz < n; ++iz)
      for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix)
          buf[((size_t)iz * N + iy) * N + ix] =
              qv[((size_t)iz * n + iy) * n + ix] * x[((size_t)iz * n + iy) * n + ix];
    fftw_execute(fwd);
    for (size_t i = 0; i < NN; ++i) buf[i] *= khat[i] / double(NN);
    fftw_execute(bwd);
    y.resize((size_t)n * n * n);
    for (int iz = 0; iz < n; ++iz)
      for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
          size_t id = ((size_t)iz * n + iy) * n + ix;
          y[id] = x[id] + buf[((size_t)iz * N + iy) * N + ix];
        }
  }
};

double vnorm(const std::vector<cd>& v) {
  double s = 0.0;
  for (const cd& z : v) s += std::norm(z);
  return std::sqrt(s);
}

cd vdot(const std::vector<cd>& a, const std::vector<cd>& b) {
  cd s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// restarted GMRES for (I + T) u = rhs
void gmres(ConvOp& op, const std::vector<cd>& rhs, std::vector<cd>& u, double tol,
           int restart = 40, int max_outer = 10) {
  size_t nn = rhs.size();
  u.assign(nn, cd(0.0));
  double bnorm = vnorm(rhs);
  if (bnorm == 0.0) return;
  std::vector<cd> r = rhs, w;
  double final_res = 1.0;
  for (int outer = 0; outer < max_outer; ++outer) {
    double rnorm = vnorm(r);
    final_res = rnorm / bnorm;
    if (final_res <= tol) return;
    int m = restart;
    std::vector<std::vector<cd>> V(1, r);
    for (cd& z : V[0]) z /= rnorm;
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(m + 1, m);
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(m + 1);
    g(0) = rnorm;
    std::vector<cd> cs(m), sn(m);
    int k = 0;
    for (; k < m; ++k) {
      op.apply(V[k], w);
      for (int j = 0; j <= k; ++j) {
        H(j, k) = vdot(V[j], w);
        for (size_t i = 0; i < nn; ++i) w[i] -= H(j, k) * V[j][i];
      }
      H(k + 1, k) = vnorm(w);
      if (std::abs(H(k + 1, k)) > 1e-300) {
        V.push_back(w);
        for (cd& z : V.back()) z /= H(k + 1, k).real();
      } else {
        V.push_back(std::vector<cd>(nn, cd(0.0)));
      }
      // Givens rotations G_j = [[conj(c), conj(s)], [-s, c]] maintain the QR of H
      for (int j = 0; j < k; ++j) {
        cd t = std::conj(cs[j]) * H(j, k) + std::conj(sn[j]) * H(j + 1, k);
        H(j + 1, k) = -sn[j] * H(j, k) + cs[j] * H(j + 1, k);
        H(j, k) = t;
      }
      double denom = std::sqrt(std::norm(H(k, k)) + std::norm(H(k + 1, k)));
      cs[k] = H(k, k) / denom;
      sn[k] = H(k + 1, k) / denom;
      H(k, k) = denom;
      H(k + 1, k) = 0.0;
      g(k + 1) = -sn[k] * g(k);
      g(k) = std::conj(cs[k]) * g(k);
      if (std::abs(g(k + 1)) / bnorm <= tol) {
        ++k;
        break;
      }
    }
    // back substitution
    Eigen::VectorXcd yk(k);
    for (int i = k - 1; i >= 0; --i) {
      cd s = g(i);
      for (int j = i + 1; j < k; ++j) s -= H(i, j) * yk(j);
      yk(i) = s / H(i, i);
    }
    for (int j = 0; j < k; ++j)
      for (size_t i = 0; i < nn; ++i) u[i] += yk(j) * V[j][i];
    op.apply(u, w);
    for (size_t i = 0; i < nn; ++i) r[i] = rhs[i] - w[i];
  }
  final_res = vnorm(r) / bnorm;
  if (final_res > tol)
    throw NumericalError("grid solver: GMRES stalled at relative residual " +
                         std::to_string(final_res));
}

// separable phase arrays for e^{i s k.x} on the grid axis
std::vector<cd> axis_phase(const GridField& g, double kcomp, double sign) {
  std::vector<cd> p(g.n);
  for (int i = 0; i < g.n; ++i) p[i] = std::exp(iu * (sign * kcomp * g.coord(i)));
  return p;
}

void fill_plane_wave(const GridField& g, const Vec3& alpha, std::vector<cd>& out) {
  auto px = axis_phase(g, alpha.x(), 1.0), py = axis_phase(g, alpha.y(), 1.0),
       pz = axis_phase(g, alpha.z(), 1.0);
  out.resize((size_t)g.n * g.n * g.n);
  for (int iz = 0; iz < g.n; ++iz)
    for (int iy = 0; iy < g.n; ++iy) {
      cd pzy = pz[iz] * py[iy];
      for (int ix = 0; ix < g.n; ++ix)
        out[((size_t)iz * g.n + iy) * g.n + ix] = pzy * px[ix];
    }
}

// s(beta) = sum_x e^{-i beta.x} f(x) h^3 evaluated by axis collapsing
cd collapse_sum(const GridField& g, const std::vector<cd>& f, const Vec3& beta,
                double h3) {
  auto px = axis_phase(g, beta.x(), -1.0), py = axis_phase(g, beta.y(), -1.0),
       pz = axis_phase(g, beta.z(), -1.0);
  cd total = 0.0;
  for (int iz = 0; iz < g.n; ++iz) {
    cd sz = 0.0;
    for (int iy = 0; iy < g.n; ++iy) {
      cd sy = 0.0;
      const cd* row = &f[((size_t)iz * g.n + iy) * g.n];
      for (int ix = 0; ix < g.n; ++ix) sy += row[ix] * px[ix];
      sz += sy * py[iy];
    }
    total += sz * pz[iz];
  }
  return total * h3;
}

}  // namespace

GridField solve_ls_grid(const Potential& q, const Vec3& alpha, int n, double tol) {
  if (n < 8) throw ValidationError("solve_ls_grid: need n >= 8");
  ConvOp op(q, n);
  GridField g;
  g.n = n;
  g.a = q.a;
  std::vector<cd> inc;
  fill_plane_wave(g, alpha, inc);
  gmres(op, inc, g.u, tol);
  return g;
}

FarField far_field_from_grid(const Potential& q, int L, int n, double tol, int jobs) {
  if (n < 8) throw ValidationError("far_field_from_grid: need n >= 8");
  S2Rule rule = s2_rule(L);
  int nq = rule.size();
  Eigen::MatrixXcd samples(nq, nq);  // A(beta_i, alpha_j)
  double h3 = std::pow(2.0 * q.a / n, 3);

  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  std::mutex err_mutex;
  std::string first_error;
  auto work = [&](int tid) {
    try {
      ConvOp op(q, n);
      GridField g;
      g.n = n;
      g.a = q.a;
      std::vector<cd> inc, u, qu((size_t)n * n * n);
      for (int j = tid; j < nq; j += nthreads) {
        fill_plane_wave(g, rule.dir[j], inc);
        gmres(op, inc, u, tol);
        for (size_t i = 0; i < qu.size(); ++i) qu[i] = op.qv[i] * u[i];
        for (int i = 0; i < nq; ++i)
          samples(i, j) = -collapse_sum(g, qu, rule.dir[i], h3) / (4.0 * pi);
      }
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lk(err_mutex);
      if (first_error.empty()) first_error = e.what();
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  if (!first_error.empty()) throw NumericalError(first_error);

  FarField ff = project_samples(samples, rule, L, q.a);
  ff.source = "grid";
  return ff;
}

}  // namespace ramm
