// model.hpp -- three-level configurations, detunings, RWA and dressed Hamiltonians
#pragma once

#include "su3bloch/su3.hpp"

#include <optional>
#include <string>
#include <utility>

namespace su3b {

// Which pair of levels each of the two fields couples:
//   Cascade: field 1 on |1>-|2>, field 2 on |2>-|3>
//   Lambda:  field 1 on |1>-|3>, field 2 on |2>-|3>
//   Vee:     field 1 on |1>-|3>, field 2 on |1>-|2>
enum class Configuration { Cascade, Lambda, Vee };

std::string to_string(Configuration c);
Configuration configuration_from_string(const std::string& name);

// Matrix rows order the levels top-down: row 1 = |3>, row 2 = |2>, row 3 = |1>.
// kappa1/kappa2 are the field couplings and delta1/delta2 the detunings, with
// hbar = 1 throughout. The level frequencies omega1/omega2 and drive
// frequencies drive1/drive2 are optional; they are required only by the
// time-dependent operations (rwa_hamiltonian, dressing_unitary,
// verify_dressing).
struct SystemConfig {
  Configuration configuration = Configuration::Cascade;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  std::optional<double> omega1, omega2, drive1, drive2;

  bool has_frequencies() const {
    return omega1 && omega2 && drive1 && drive2;
  }
  bool resonant() const { return delta1 == 0.0 && delta2 == 0.0; }
};

// delta1 = 2 w1 + w2 - W1, delta2 = w1 + 2 w2 - W2.
std::pair<double, double> detunings_from_frequencies(double omega1, double omega2,
                                                     double drive1, double drive2);

// Throws std::invalid_argument when all four frequencies are present and the
// stored detunings disagree with detunings_from_frequencies beyond tol.
void check_frequency_consistency(const SystemConfig& config, double tol = 1e-12);

// Energies (E1, E2, E3) of the physical levels |1>, |2>, |3>.
Eigen::Vector3d level_energies(Configuration configuration, double omega1, double omega2);

// E3 > E2 > E1 for the given level frequencies.
bool hierarchy_satisfied(Configuration configuration, double omega1, double omega2);

// Detunings as they enter the dressed Hamiltonian: each drive frequency
// measured against the level gap of the transition it couples. Matches
// detunings_from_frequencies for lambda and vee; for the cascade the gaps
// are 2 w1 - w2 and 2 w2 - w1. Requires frequencies.
std::pair<double, double> dressed_frame_detunings(const SystemConfig& config);

// Time-independent dressed-frame Hamiltonian in (kappa, delta).
Matrix3 dressed_hamiltonian(const SystemConfig& config);

// Lab-frame Hamiltonian after the rotating-wave approximation. Requires
// frequencies; throws std::invalid_argument when they are missing.
Matrix3 rwa_hamiltonian(const SystemConfig& config, double t);

// Diagonal D of the dressing transformation U(t) = exp(-i D t).
Eigen::Vector3d dressing_exponent(const SystemConfig& config);
Matrix3 dressing_unitary(const SystemConfig& config, double t);

struct DressingReport {
  double time_spread = 0;        // max entrywise spread of H~(t) across times
  double dressed_deviation = 0;  // max |H~(t) - dressed target|
  std::pair<double, double> frame_detunings{0, 0};

  bool pass(double tol = 1e-10) const {
    return time_spread < tol && dressed_deviation < tol;
  }
};

// Transforms the RWA Hamiltonian into the dressed frame,
//   H~(t) = U+(t) H(t) U(t) - i U+(t) U'(t),
// with the analytic U' = -i D U, and reports (a) the entrywise spread of
// H~ across the sample times and (b) its deviation from
// dressed_hamiltonian at the dressed-frame detunings.
DressingReport verify_dressing(const SystemConfig& config,
                               const std::vector<double>& sample_times);

// max(|kappa1|, |kappa2|, |delta1|, |delta2|, 1); sets horizons and steps.
double reference_scale(const SystemConfig& config);

}  // namespace su3b
