#include "su3bloch/qutrit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace su3b {

namespace {

constexpr double kPi = std::numbers::pi;

void check_angle(double value, double lo, double hi, bool open_hi, const char* name) {
  const bool ok = value >= lo && (open_hi ? value < hi : value <= hi);
  if (!ok)
    throw std::invalid_argument(std::string("QutritAngles: ") + name + " out of range");
}

}  // namespace

QutritAngles::QutritAngles(double theta0_, double theta1_, double theta2_, double phi_)
    : theta0(theta0_), theta1(theta1_), theta2(theta2_), phi(phi_) {
  check_angle(theta0, 0.0, kPi, false, "theta0");
  check_angle(theta1, 0.0, kPi, false, "theta1");
  check_angle(theta2, 0.0, kPi, false, "theta2");
  check_angle(phi, 0.0, 2.0 * kPi, true, "phi");
}

Amplitude3 qutrit_amplitudes(const QutritAngles& q) {
  const double h0 = 0.5 * q.theta0;
  const double h1 = 0.5 * q.theta1;
  const double h2 = 0.5 * q.theta2;
  Amplitude3 c;
  c(0) = complexd(std::cos(h0), 0.0);
  c(1) = std::sin(h0) * std::sin(h1) * std::sin(h2) *
         complexd(std::cos(q.phi), std::sin(q.phi));
  c(2) = std::sin(h0) * complexd(std::cos(h1), std::sin(h1) * std::cos(h2));
  return c;
}

Matrix3 qutrit_density(const QutritAngles& q) {
  const Amplitude3 c = qutrit_amplitudes(q);
  return c * c.adjoint();
}

double qutrit_bloch_norm(const QutritAngles& q) {
  return bloch_from_density(qutrit_density(q)).squaredNorm();
}

QutritGridCheck qutrit_grid_check(int angle_resolution, int phase_resolution,
                                  ExecPolicy exec) {
  if (angle_resolution < 2)
    throw std::invalid_argument("qutrit_grid_check: angle_resolution must be at least 2");
  if (phase_resolution < 1)
    throw std::invalid_argument("qutrit_grid_check: phase_resolution must be at least 1");

  const long na = angle_resolution;
  const long np = phase_resolution;
  const long total = na * na * na * np;

  QutritGridCheck check;
  check.points = total;

  double worst_norm = 0.0, worst_purity = 0.0, worst_bloch = 0.0;
  const bool parallel = exec == ExecPolicy::Parallel;
#pragma omp parallel for schedule(static) if (parallel) \
    reduction(max : worst_norm, worst_purity, worst_bloch)
  for (long flat = 0; flat < total; ++flat) {
    long rest = flat;
    const long j = rest % np;
    rest /= np;
    const long i2 = rest % na;
    rest /= na;
    const long i1 = rest % na;
    const long i0 = rest / na;

    const QutritAngles q(kPi * static_cast<double>(i0) / (na - 1),
                         kPi * static_cast<double>(i1) / (na - 1),
                         kPi * static_cast<double>(i2) / (na - 1),
                         2.0 * kPi * static_cast<double>(j) / np);
    const Amplitude3 c = qutrit_amplitudes(q);
    const Matrix3 rho = c * c.adjoint();
    const BlochVector8 s = bloch_from_density(rho);

    worst_norm = std::max(worst_norm, std::abs(c.squaredNorm() - 1.0));
    worst_purity =
        std::max(worst_purity, (rho * rho - rho).cwiseAbs().maxCoeff());
    worst_bloch = std::max(worst_bloch, std::abs(s.squaredNorm() - 4.0 / 3.0));
  }

  check.max_norm_residual = worst_norm;
  check.max_purity_residual = worst_purity;
  check.max_bloch_norm_deviation = worst_bloch;
  return check;
}

DegeneracyReport degeneracy_scan(int resolution, ExecPolicy exec) {
  if (resolution < 2)
    throw std::invalid_argument("degeneracy_scan: resolution must be at least 2");

  const long n = resolution;
  const long total = n * n * n;
  std::vector<signed char> label(total, -1);

  const bool parallel = exec == ExecPolicy::Parallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (long flat = 0; flat < total; ++flat) {
    const long i2 = flat % n;
    const long i1 = (flat / n) % n;
    const long i0 = flat / (n * n);
    const QutritAngles q(kPi * static_cast<double>(i0) / (n - 1),
                         kPi * static_cast<double>(i1) / (n - 1),
                         kPi * static_cast<double>(i2) / (n - 1), 0.0);
    const Amplitude3 c = qutrit_amplitudes(q);
    for (int b = 0; b < 3; ++b)
      if (std::norm(c(b)) > 1.0 - 1e-9) label[flat] = static_cast<signed char>(b);
  }

  DegeneracyReport report;
  report.resolution = resolution;
  for (long flat = 0; flat < total; ++flat) {
    if (label[flat] < 0) continue;
    const int i2 = static_cast<int>(flat % n);
    const int i1 = static_cast<int>((flat / n) % n);
    const int i0 = static_cast<int>(flat / (n * n));
    report.preimages[label[flat]].push_back({i0, i1, i2});
  }

  // |0>: the full theta0 = 0 face and nothing else.
  const auto& p0 = report.preimages[0];
  report.plane_confirmed = static_cast<long>(p0.size()) == n * n;
  for (const auto& g : p0)
    if (g[0] != 0) report.plane_confirmed = false;

  // |1>: the single corner (pi, pi, pi).
  const auto& p1 = report.preimages[1];
  report.point_confirmed =
      p1.size() == 1 && p1.front() == std::array<int, 3>{resolution - 1, resolution - 1,
                                                         resolution - 1};

  // |2>: at least the theta1 = 0 edge of the theta0 = pi face.
  const auto& p2 = report.preimages[2];
  report.line_confirmed = true;
  for (int i2 = 0; i2 < resolution; ++i2) {
    const std::array<int, 3> want{resolution - 1, 0, i2};
    bool found = false;
    for (const auto& g : p2)
      if (g == want) found = true;
    if (!found) report.line_confirmed = false;
  }

  return report;
}

}  // namespace su3b
