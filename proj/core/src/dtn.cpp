#include "rammscatter/dtn.hpp"

#include <cmath>
#include <sstream>

#include "rammscatter/radial.hpp"
#include "rammscatter/specfun.hpp"

namespace ramm {

DtnResult dtn_from_amplitude(const FarField& ff, double a, int L, double reg) {
  ff.validate();
  if (a <= ff.a)
    throw ValidationError("dtn_from_amplitude: sphere radius must enclose the scatterer");
  if (L > ff.L)
    throw ValidationError("dtn_from_amplitude: L exceeds far-field degree");

  std::vector<double> j = sph_j_all(L, a);
  std::vector<cd> h(L + 1), hp(L + 1);
  for (int ell = 0; ell <= L; ++ell) {
    h[ell] = hankel(ell, a);
    hp[ell] = hankel_prime(ell, a);
  }

  // interior Dirichlet resonances j_ell(a) ~ 0 make the layer system singular;
  // the first zero of j_ell sits beyond r = ell, so a small j_ell with a < ell
  // is just the sub-turning-point decay, not a resonance
  for (int ell = 0; ell <= L; ++ell) {
    if (a > ell && std::abs(j[ell]) < 1e-6) {
      std::ostringstream os;
      os << "dtn_from_amplitude: radius a=" << a
         << " is near an interior resonance (j_" << ell
         << "(a) ~ 0); perturb the radius, e.g. a*1.05";
      throw NumericalError(os.str());
    }
  }

  int nm = num_modes(L);
  // Layer-density system: row v=(l,m), column w=(l',m'), unknown sigma_w:
  //   i^l (-1)^m j_l(a) a^2 sigma_{l,m}
  //     + (a^2/4pi) sum_{l',m'} (-1)^m B[(l,m),(l',m')] h_{l'}(a) sigma_{l',m'}
  //   = f_{l,-m} / h_l(a)
  Eigen::MatrixXcd M(nm, nm);
  for (int v = 0; v < nm; ++v) {
    HarmonicIndex lv = mode_from_flat(v);
    double sm = (lv.m % 2 == 0) ? 1.0 : -1.0;
    for (int w = 0; w < nm; ++w) {
      HarmonicIndex lw = mode_from_flat(w);
      M(v, w) = (a * a / (4.0 * pi)) * sm * ff.B(v, w) * h[lw.ell];
      if (w == v) M(v, w) += ipow(lv.ell) * sm * j[lv.ell] * a * a;
    }
  }

  // One rhs per Dirichlet basis vector f = e_w: rhs_v = delta_{(l,-m),w}/h_l(a)
  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(nm, nm);
  for (int v = 0; v < nm; ++v) {
    HarmonicIndex lv = mode_from_flat(v);
    int w = flat_index({lv.ell, -lv.m});
    rhs(v, w) = 1.0 / h[lv.ell];
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  double cond = svd.singularValues()(0) / svd.singularValues()(nm - 1);

  Eigen::MatrixXcd sigma;
  if (reg > 0.0) {
    Eigen::MatrixXcd N = M.adjoint() * M;
    N.diagonal().array() += reg * N.norm() / nm;
    sigma = N.ldlt().solve(M.adjoint() * rhs);
  } else {
    sigma = M.partialPivLu().solve(rhs);
  }

  DtnResult res;
  res.a = a;
  res.L = L;
  res.condition = cond;
  res.Lambda = Eigen::MatrixXcd::Zero(nm, nm);
  for (int w = 0; w < nm; ++w) {
    for (int u = 0; u < nm; ++u) {
      HarmonicIndex lu = mode_from_flat(u);
      // density coefficients are stored in the tilde convention; convert
      double sg = ((lu.ell + lu.m) % 2 == 0) ? 1.0 : -1.0;
      res.Lambda(u, w) = sg * sigma(flat_index({lu.ell, -lu.m}), w);
      if (u == w) res.Lambda(u, w) += hp[lu.ell] / h[lu.ell];
    }
  }
  return res;
}

DtnResult dtn_direct(const Potential& q, double a, int L) {
  if (a < q.a)
    throw ValidationError("dtn_direct: sphere radius must enclose the scatterer");
  if (!q.is_radial)
    throw ValidationError("dtn_direct: requires a radial potential");
  int nm = num_modes(L);
  DtnResult res;
  res.a = a;
  res.L = L;
  res.condition = 1.0;
  res.Lambda = Eigen::MatrixXcd::Zero(nm, nm);
  for (int ell = 0; ell <= L; ++ell) {
    RegularSolution rs = regular_solution_at(q, ell, a);
    if (a > ell && rs.value_mag < 1e-7) {
      std::ostringstream os;
      os << "dtn_direct: radius a=" << a << " is near a Dirichlet eigenvalue"
         << " of degree " << ell << "; perturb the radius";
      throw NumericalError(os.str());
    }
    cd lam = rs.log_deriv - 1.0 / a;  // w=v/r => w'/w = v'/v - 1/r
    for (int m = -ell; m <= ell; ++m) {
      int u = flat_index({ell, m});
      res.Lambda(u, u) = lam;
    }
  }
  return res;
}

}  // namespace ramm
