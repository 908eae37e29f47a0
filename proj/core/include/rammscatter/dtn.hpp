#pragma once
// Dirichlet-to-Neumann map on a sphere of radius a enclosing the scatterer,
// computed two ways: from the far-field matrix via a single-layer ansatz on
// the sphere, and directly from the radial equation for radial potentials.

#include <Eigen/Dense>

#include "rammscatter/farfield.hpp"
#include "rammscatter/potential.hpp"

namespace ramm {

struct DtnResult {
  Eigen::MatrixXcd Lambda;  // matrix of the DtN map on the Y_{l,m} basis
  double condition = 0.0;   // condition number of the layer-density system
  double a = 0.0;
  int L = 0;
};

// DtN from far-field data via the layer ansatz. Throws NumericalError at
// (near-)resonant radii where j_ell(a) ~ 0; the message suggests moving a.
DtnResult dtn_from_amplitude(const FarField& ff, double a, int L,
                             double reg = 0.0);

// DtN for a radial potential, solving the regular radial problem per degree.
DtnResult dtn_direct(const Potential& q, double a, int L);

}  // namespace ramm
