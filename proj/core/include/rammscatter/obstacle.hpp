#pragma once
// Sound-soft (Dirichlet) sphere scattering, the penetrable-potential limit
// q = t 1_D with t -> infinity, and reconstruction of the obstacle's
// indicator-function Fourier transform from far-field data.
//
// Direction convention: the indicator formulas use theta - theta' = xi
// (opposite to the potential-inversion convention theta' - theta = xi);
// build_indicator_pair handles the swap.

#include "rammscatter/farfield.hpp"
#include "rammscatter/potential.hpp"
#include "rammscatter/variety.hpp"

namespace ramm {

FarField dirichlet_sphere_farfield(double R, int L);

struct LimitRow {
  double t = 0.0;
  double interior_norm = 0.0;  // ||u(.,alpha;t)||_{L2(ball)}
  double amp_dist = 0.0;       // sup |A_t - A_Dirichlet| over direction pairs
};
std::vector<LimitRow> penetrable_limit(double R, const std::vector<double>& ts,
                                       int L);

// sup over direction pairs of |A(.,.;t1) - A(.,.;t2)| for q = t 1_{ball R}
double amplitude_t_distance(double R, double t1, double t2, int L);

// pair with theta - theta' = xi at parameter s
DirectionPair build_indicator_pair(const Vec3& xi, double s);

// LHS of the surface Green identity: int_S e^{-i theta'.s} d/dN e^{i theta.s} ds
cd surface_green_integral(double R, const DirectionPair& pair, int L_quad = 40);

// analytic transform of the ball indicator: 4 pi (sin u - u cos u)/u^3, u=|xi| R
cd ball_indicator_ft(double R, double xi_norm);

// chi~_D(xi) = 8 pi |xi|^{-2} int A(theta',alpha) nu_eta(alpha) dalpha, with
// nu_eta fitted so that int u_N(s,alpha) nu_eta(alpha) dalpha matches
// d/dN e^{i theta.s} on the sphere (u_N from the analytic sphere solution)
cd reconstruct_indicator(const FarField& ff, double R_known, const Vec3& xi,
                         double s, double reg = 1e-8, int L_nu = -1);

}  // namespace ramm
