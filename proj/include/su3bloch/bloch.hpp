// bloch.hpp -- amplitude/density/Bloch-vector maps, generators, propagation
#pragma once

#include "su3bloch/model.hpp"

#include <array>
#include <vector>

namespace su3b {

using Amplitude3 = Eigen::Vector3cd;
using BlochVector8 = Eigen::Matrix<double, 8, 1>;
using GeneratorMatrix8 = Eigen::Matrix<double, 8, 8>;

// Sampled Bloch-vector evolution. populations are reported in physical-level
// order (p1, p2, p3) = (rho_33, rho_22, rho_11) under the row convention of
// model.hpp (row 1 = |3>).
struct Trajectory {
  std::vector<double> times;
  std::vector<BlochVector8> states;
  std::vector<std::array<double, 3>> populations;
};

// rho = c c+. Rejects non-normalized input (|norm^2 - 1| > 1e-10) unless
// auto_normalize is set.
Matrix3 density_from_amplitudes(const Amplitude3& c, bool auto_normalize = false);

// S_i = Tr(rho l_i). Throws on non-Hermitian input.
BlochVector8 bloch_from_density(const Matrix3& rho);

// rho = 1/3 + (1/2) sum_i S_i l_i; inverse of bloch_from_density on
// trace-one Hermitian matrices.
Matrix3 density_from_bloch(const BlochVector8& s);

std::array<double, 3> populations_from_bloch(const BlochVector8& s);

// d rho / dt = i [rho, h] (hbar = 1).
Matrix3 liouville_rhs(const Matrix3& rho, const Matrix3& h);

// Antisymmetric matrix m with dS/dt = m S, m_ij = (1/2) Tr(i [l_j, h] l_i).
// Throws on non-Hermitian input.
GeneratorMatrix8 generator_matrix(const Matrix3& h);

// The hand-tabulated generator in (kappa, delta), kept as an independent
// cross-check of generator_matrix.
GeneratorMatrix8 tabulated_generator(const SystemConfig& config);

struct GeneratorComparison {
  enum class Orientation { Direct, Transposed, Unresolved };

  GeneratorMatrix8 derived;
  GeneratorMatrix8 tabulated;
  double deviation_direct = 0;      // max |derived - tabulated|
  double deviation_transposed = 0;  // max |derived^T - tabulated|
  Orientation orientation = Orientation::Unresolved;
  bool pattern_match = false;       // nonzero patterns agree at 1e-12

  double resolved_deviation() const;
};

GeneratorComparison compare_generators(const SystemConfig& config, double tol = 1e-12);

// c(t) = exp(-i h t) c0 through the eigensystem of h. Throws on
// non-Hermitian input.
Amplitude3 propagate_exact(const Matrix3& h, const Amplitude3& c0, double t);

// Sample times {0, dt, 2dt, ...} up to t_max, appending t_max when it is not
// a step multiple. Throws unless dt > 0 and t_max >= 0.
std::vector<double> time_grid(double t_max, double dt);

// Amplitude propagation of |c0> under h sampled at the given times, mapped
// to Bloch vectors and populations.
Trajectory exact_trajectory(const Matrix3& h, const Amplitude3& c0,
                            const std::vector<double>& times);

// Classic fixed-step RK4 on dS/dt = m S, sampled every dt.
Trajectory integrate_bloch(const GeneratorMatrix8& m, const BlochVector8& s0,
                           double t_max, double dt);

// exp(m t) s0 through the eigensystem of the Hermitian i m.
BlochVector8 evolve_bloch_exact(const GeneratorMatrix8& m, const BlochVector8& s0,
                                double t);

}  // namespace su3b
