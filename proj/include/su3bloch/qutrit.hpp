// qutrit.hpp -- qutrit wave-function parametrization and grid diagnostics
#pragma once

#include "su3bloch/bloch.hpp"
#include "su3bloch/exec.hpp"

#include <array>
#include <vector>

namespace su3b {

// Four-angle parametrization of a pure qutrit state,
//   c(|0>) = cos(t0/2)
//   c(|1>) = sin(t0/2) sin(t1/2) sin(t2/2) e^{i phi}
//   c(|2>) = sin(t0/2) (cos(t1/2) + i sin(t1/2) cos(t2/2)),
// normalized for every angle choice. theta in [0, pi], phi in [0, 2 pi);
// out-of-range values are rejected at construction.
struct QutritAngles {
  double theta0, theta1, theta2, phi;
  QutritAngles(double theta0, double theta1, double theta2, double phi);
};

// Basis order |0>, |1>, |2> maps onto matrix rows 1..3 of the three-level
// configurations.
Amplitude3 qutrit_amplitudes(const QutritAngles& q);
Matrix3 qutrit_density(const QutritAngles& q);

// Squared Bloch length of the state, through the same maps the dynamics
// uses; equals 4/3 identically.
double qutrit_bloch_norm(const QutritAngles& q);

struct QutritGridCheck {
  long points = 0;
  double max_norm_residual = 0;        // | ||c||^2 - 1 |
  double max_purity_residual = 0;      // max entry |rho^2 - rho|
  double max_bloch_norm_deviation = 0; // | sum S_i^2 - 4/3 |
};

// Worst residuals over an angle_resolution^3 x phase_resolution grid of
// (theta0, theta1, theta2, phi).
QutritGridCheck qutrit_grid_check(int angle_resolution, int phase_resolution,
                                  ExecPolicy exec = ExecPolicy::Parallel);

struct DegeneracyReport {
  int resolution = 0;
  // Grid indices (i0,i1,i2) with theta_k = pi * i_k / (resolution - 1),
  // collected per basis state for points with fidelity > 1 - 1e-9.
  std::array<std::vector<std::array<int, 3>>, 3> preimages;
  bool plane_confirmed = false;  // |0>: exactly the theta0 = 0 plane
  bool point_confirmed = false;  // |1>: exactly (pi, pi, pi)
  bool line_confirmed = false;   // |2>: contains the (pi, 0, theta2) line
};

// Classifies the (theta0, theta1, theta2) cube at phi = 0 against the three
// basis states, up to global phase.
DegeneracyReport degeneracy_scan(int resolution, ExecPolicy exec = ExecPolicy::Parallel);

}  // namespace su3b
