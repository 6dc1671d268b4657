#include "su3bloch/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace su3b {

namespace {

constexpr complexd kI{0.0, 1.0};

Matrix3 diagonal3(double a, double b, double c) {
  Matrix3 m = Matrix3::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

void require_frequencies(const SystemConfig& config, const char* who) {
  if (!config.has_frequencies())
    throw std::invalid_argument(std::string(who) +
                                ": omega1/omega2/drive1/drive2 must all be set");
}

}  // namespace

std::string to_string(Configuration c) {
  switch (c) {
    case Configuration::Cascade: return "cascade";
    case Configuration::Lambda: return "lambda";
    case Configuration::Vee: return "vee";
  }
  return "?";
}

Configuration configuration_from_string(const std::string& name) {
  if (name == "cascade") return Configuration::Cascade;
  if (name == "lambda") return Configuration::Lambda;
  if (name == "vee") return Configuration::Vee;
  throw std::invalid_argument("unknown configuration '" + name +
                              "' (expected cascade, lambda, or vee)");
}

std::pair<double, double> detunings_from_frequencies(double omega1, double omega2,
                                                     double drive1, double drive2) {
  return {2.0 * omega1 + omega2 - drive1, omega1 + 2.0 * omega2 - drive2};
}

void check_frequency_consistency(const SystemConfig& config, double tol) {
  if (!config.has_frequencies()) return;
  const auto [d1, d2] =
      detunings_from_frequencies(*config.omega1, *config.omega2, *config.drive1,
                                 *config.drive2);
  if (std::abs(d1 - config.delta1) > tol || std::abs(d2 - config.delta2) > tol)
    throw std::invalid_argument(
        "stored detunings are inconsistent with the stored frequencies");
}

Eigen::Vector3d level_energies(Configuration configuration, double omega1, double omega2) {
  switch (configuration) {
    case Configuration::Cascade:
      return {-omega1, omega1 - omega2, omega2};
    case Configuration::Lambda:
      return {-omega1, -omega2, omega1 + omega2};
    case Configuration::Vee:
      return {-omega1 - omega2, omega2, omega1};
  }
  throw std::invalid_argument("level_energies: unknown configuration");
}

bool hierarchy_satisfied(Configuration configuration, double omega1, double omega2) {
  const Eigen::Vector3d e = level_energies(configuration, omega1, omega2);
  return e(2) > e(1) && e(1) > e(0);
}

std::pair<double, double> dressed_frame_detunings(const SystemConfig& config) {
  require_frequencies(config, "dressed_frame_detunings");
  const double w1 = *config.omega1, w2 = *config.omega2;
  const double W1 = *config.drive1, W2 = *config.drive2;
  if (config.configuration == Configuration::Cascade)
    return {2.0 * w1 - w2 - W1, 2.0 * w2 - w1 - W2};
  return detunings_from_frequencies(w1, w2, W1, W2);
}

Matrix3 dressed_hamiltonian(const SystemConfig& config) {
  const double k1 = config.kappa1, k2 = config.kappa2;
  const double d1 = config.delta1, d2 = config.delta2;
  Matrix3 h;
  switch (config.configuration) {
    case Configuration::Cascade:
      h = diagonal3((d1 + 2.0 * d2) / 3.0, (d1 - d2) / 3.0, -(2.0 * d1 + d2) / 3.0);
      h(0, 1) = k2;
      h(1, 0) = k2;
      h(1, 2) = k1;
      h(2, 1) = k1;
      return h;
    case Configuration::Lambda:
      h = diagonal3((d1 + d2) / 3.0, (d1 - 2.0 * d2) / 3.0, (d2 - 2.0 * d1) / 3.0);
      h(0, 1) = k2;
      h(1, 0) = k2;
      h(0, 2) = k1;
      h(2, 0) = k1;
      return h;
    case Configuration::Vee:
      h = diagonal3((2.0 * d1 - d2) / 3.0, (2.0 * d2 - d1) / 3.0, -(d1 + d2) / 3.0);
      h(0, 2) = k1;
      h(2, 0) = k1;
      h(1, 2) = k2;
      h(2, 1) = k2;
      return h;
  }
  throw std::invalid_argument("dressed_hamiltonian: unknown configuration");
}

Matrix3 rwa_hamiltonian(const SystemConfig& config, double t) {
  require_frequencies(config, "rwa_hamiltonian");
  const double w1 = *config.omega1, w2 = *config.omega2;
  const double W1 = *config.drive1, W2 = *config.drive2;
  const double k1 = config.kappa1, k2 = config.kappa2;
  const complexd p1 = std::exp(-kI * W1 * t);
  const complexd p2 = std::exp(-kI * W2 * t);

  using K = ShiftKind;
  using P = ShiftPart;
  Matrix3 h;
  switch (config.configuration) {
    case Configuration::Cascade:
      h = w1 * shift_operator(K::U, P::Three) + w2 * shift_operator(K::T, P::Three);
      h += k1 * (p1 * shift_operator(K::U, P::Plus) +
                 std::conj(p1) * shift_operator(K::U, P::Minus));
      h += k2 * (p2 * shift_operator(K::T, P::Plus) +
                 std::conj(p2) * shift_operator(K::T, P::Minus));
      return h;
    case Configuration::Lambda:
      h = w1 * shift_operator(K::V, P::Three) + w2 * shift_operator(K::T, P::Three);
      h += k1 * (p1 * shift_operator(K::V, P::Plus) +
                 std::conj(p1) * shift_operator(K::V, P::Minus));
      h += k2 * (p2 * shift_operator(K::T, P::Plus) +
                 std::conj(p2) * shift_operator(K::T, P::Minus));
      return h;
    case Configuration::Vee:
      h = w1 * shift_operator(K::V, P::Three) + w2 * shift_operator(K::U, P::Three);
      h += k1 * (p1 * shift_operator(K::V, P::Plus) +
                 std::conj(p1) * shift_operator(K::V, P::Minus));
      h += k2 * (p2 * shift_operator(K::U, P::Plus) +
                 std::conj(p2) * shift_operator(K::U, P::Minus));
      return h;
  }
  throw std::invalid_argument("rwa_hamiltonian: unknown configuration");
}

Eigen::Vector3d dressing_exponent(const SystemConfig& config) {
  require_frequencies(config, "dressing_exponent");
  const double W1 = *config.drive1, W2 = *config.drive2;
  switch (config.configuration) {
    case Configuration::Cascade:
      return Eigen::Vector3d(W1 + 2.0 * W2, W1 - W2, -2.0 * W1 - W2) / 3.0;
    case Configuration::Lambda:
      return Eigen::Vector3d(W1 + W2, W1 - 2.0 * W2, W2 - 2.0 * W1) / 3.0;
    case Configuration::Vee:
      return Eigen::Vector3d(2.0 * W1 - W2, 2.0 * W2 - W1, -W1 - W2) / 3.0;
  }
  throw std::invalid_argument("dressing_exponent: unknown configuration");
}

Matrix3 dressing_unitary(const SystemConfig& config, double t) {
  const Eigen::Vector3d d = dressing_exponent(config);
  Matrix3 u = Matrix3::Zero();
  for (int i = 0; i < 3; ++i) u(i, i) = std::exp(-kI * d(i) * t);
  return u;
}

DressingReport verify_dressing(const SystemConfig& config,
                               const std::vector<double>& sample_times) {
  require_frequencies(config, "verify_dressing");
  if (sample_times.empty())
    throw std::invalid_argument("verify_dressing: need at least one sample time");

  const Eigen::Vector3d d = dressing_exponent(config);
  const Matrix3 dmat = diagonal3(d(0), d(1), d(2));

  std::vector<Matrix3> frames;
  frames.reserve(sample_times.size());
  for (double t : sample_times) {
    const Matrix3 u = dressing_unitary(config, t);
    // i U+ U' = i U+ (-i D U) = U+ D U = D since U and D are diagonal.
    frames.push_back(u.adjoint() * rwa_hamiltonian(config, t) * u - dmat);
  }

  DressingReport report;
  for (const Matrix3& m : frames)
    report.time_spread =
        std::max(report.time_spread, (m - frames.front()).cwiseAbs().maxCoeff());

  report.frame_detunings = dressed_frame_detunings(config);
  SystemConfig target = config;
  target.delta1 = report.frame_detunings.first;
  target.delta2 = report.frame_detunings.second;
  const Matrix3 expected = dressed_hamiltonian(target);
  for (const Matrix3& m : frames)
    report.dressed_deviation =
        std::max(report.dressed_deviation, (m - expected).cwiseAbs().maxCoeff());

  return report;
}

double reference_scale(const SystemConfig& config) {
  return std::max({std::abs(config.kappa1), std::abs(config.kappa2),
                   std::abs(config.delta1), std::abs(config.delta2), 1.0});
}

}  // namespace su3b
