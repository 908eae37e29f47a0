#pragma once
// Partial-wave solver for radial potentials: integrates
//   v'' + (1 - q(r) - l(l+1)/r^2) v = 0
// on the regular branch v ~ r^{l+1} and matches to {j_l, y_l} at r = a.

#include <vector>

#include "rammscatter/farfield.hpp"
#include "rammscatter/potential.hpp"

namespace ramm {

struct PhaseShifts {
  std::vector<double> delta;  // delta_l, l = 0..L (each defined mod pi)
  std::vector<cd> A_ell;      // 4 pi e^{i delta} sin(delta)
  double a = 1.0;
};

PhaseShifts solve_radial(const Potential& q, int L, double tol = 1e-12);

FarField far_field_from_radial(const PhaseShifts& ps);
FarField farfield_radial(const Potential& q, int L, double tol = 1e-12);

// Interior radial factor for mode l, scaled so that the full partial wave
//   u_l(r) = 4 pi i^l j_l(r) + A_l h_l(r)   (r >= a)
// continues smoothly inside: returns u_l at the requested radii < a,
// plus the phase shift if wanted.
std::vector<cd> interior_wave(const Potential& q, int ell,
                              const std::vector<double>& radii,
                              double* delta_out = nullptr);

// log-derivative v'(a)/v(a) of the regular solution at r = a, and |v(a)|
// scale info for resonance checks (used by the boundary-map module)
struct RegularSolution {
  double log_deriv;   // v'(a)/v(a)
  double value_mag;   // |v(a)| relative to max over [0,a] (resonance indicator)
};
RegularSolution regular_solution_at(const Potential& q, int ell, double a_eval,
                                    double tol = 1e-12);

}  // namespace ramm
