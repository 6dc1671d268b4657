#include "su3bloch/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace su3b {

namespace {

constexpr complexd kI{0.0, 1.0};

void require_hermitian(const Matrix3& m, const char* who) {
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian");
}

}  // namespace

Matrix3 density_from_amplitudes(const Amplitude3& c, bool auto_normalize) {
  const double n2 = c.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-10) {
    if (!auto_normalize)
      throw std::invalid_argument("density_from_amplitudes: state is not normalized");
    if (n2 <= 0.0)
      throw std::invalid_argument("density_from_amplitudes: cannot normalize zero state");
    const Amplitude3 u = c / std::sqrt(n2);
    return u * u.adjoint();
  }
  return c * c.adjoint();
}

BlochVector8 bloch_from_density(const Matrix3& rho) {
  require_hermitian(rho, "bloch_from_density");
  BlochVector8 s;
  for (int i = 0; i < 8; ++i) s(i) = (rho * gellmann(i + 1)).trace().real();
  return s;
}

Matrix3 density_from_bloch(const BlochVector8& s) {
  Matrix3 rho = Matrix3::Identity() / 3.0;
  for (int i = 0; i < 8; ++i) rho += 0.5 * s(i) * gellmann(i + 1);
  return rho;
}

std::array<double, 3> populations_from_bloch(const BlochVector8& s) {
  const double r3 = 1.0 / std::sqrt(3.0);
  // Row 1 holds |3>, row 3 holds |1>; report in physical-level order.
  const double top = 1.0 / 3.0 + 0.5 * (s(2) + r3 * s(7));
  const double mid = 1.0 / 3.0 + 0.5 * (-s(2) + r3 * s(7));
  const double bot = 1.0 / 3.0 - r3 * s(7);
  return {bot, mid, top};
}

Matrix3 liouville_rhs(const Matrix3& rho, const Matrix3& h) {
  return kI * (rho * h - h * rho);
}

GeneratorMatrix8 generator_matrix(const Matrix3& h) {
  require_hermitian(h, "generator_matrix");
  GeneratorMatrix8 m;
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      const Matrix3 comm = gellmann(j) * h - h * gellmann(j);
      m(i - 1, j - 1) = 0.5 * (kI * comm * gellmann(i)).trace().real();
    }
  }
  return m;
}

GeneratorMatrix8 tabulated_generator(const SystemConfig& config) {
  const double k1 = config.kappa1, k2 = config.kappa2;
  const double d1 = config.delta1, d2 = config.delta2;
  const double s3 = std::sqrt(3.0);

  GeneratorMatrix8 m = GeneratorMatrix8::Zero();
  const auto set = [&m](int i, int j, double v) { m(i - 1, j - 1) = v; };

  switch (config.configuration) {
    case Configuration::Cascade:
      set(1, 2, d2);
      set(1, 5, -k1);
      set(2, 1, -d2);
      set(2, 3, 2 * k2);
      set(2, 4, k1);
      set(3, 2, -2 * k2);
      set(3, 7, k1);
      set(4, 2, -k1);
      set(4, 5, d1 + d2);
      set(4, 7, k2);
      set(5, 1, k1);
      set(5, 4, -(d1 + d2));
      set(5, 6, -k2);
      set(6, 5, k2);
      set(6, 7, d1);
      set(7, 3, -k1);
      set(7, 4, -k2);
      set(7, 6, -d1);
      set(7, 8, s3 * k1);
      set(8, 7, -s3 * k1);
      return m;
    case Configuration::Lambda:
      set(1, 2, d2);
      set(1, 7, -k1);
      set(2, 1, -d2);
      set(2, 3, 2 * k2);
      set(2, 6, -k1);
      set(3, 2, -2 * k2);
      set(3, 5, -k1);
      set(4, 5, d1);
      set(4, 7, k2);
      set(5, 3, k1);
      set(5, 4, -d1);
      set(5, 6, -k2);
      set(5, 8, s3 * k1);
      set(6, 2, k1);
      set(6, 5, k2);
      set(6, 7, d1 - d2);
      set(7, 1, k1);
      set(7, 4, -k2);
      set(7, 6, -(d1 - d2));
      set(8, 5, -s3 * k1);
      return m;
    case Configuration::Vee:
      set(1, 2, d1 - d2);
      set(1, 5, -k2);
      set(1, 7, -k1);
      set(2, 1, -(d1 - d2));
      set(2, 4, k2);
      set(2, 6, -k1);
      set(3, 5, -k1);
      set(3, 7, k2);
      set(4, 2, -k2);
      set(4, 5, d1);
      set(5, 1, k2);
      set(5, 3, k1);
      set(5, 4, -d1);
      set(5, 8, s3 * k1);
      set(6, 2, k1);
      set(6, 7, d2);
      set(7, 1, k1);
      set(7, 3, -k2);
      set(7, 6, -d2);
      set(7, 8, s3 * k2);
      set(8, 5, -s3 * k1);
      set(8, 7, -s3 * k2);
      return m;
  }
  throw std::invalid_argument("tabulated_generator: unknown configuration");
}

double GeneratorComparison::resolved_deviation() const {
  switch (orientation) {
    case Orientation::Direct: return deviation_direct;
    case Orientation::Transposed: return deviation_transposed;
    case Orientation::Unresolved: break;
  }
  return std::min(deviation_direct, deviation_transposed);
}

GeneratorComparison compare_generators(const SystemConfig& config, double tol) {
  GeneratorComparison cmp;
  cmp.derived = generator_matrix(dressed_hamiltonian(config));
  cmp.tabulated = tabulated_generator(config);
  cmp.deviation_direct = (cmp.derived - cmp.tabulated).cwiseAbs().maxCoeff();
  cmp.deviation_transposed =
      (cmp.derived.transpose() - cmp.tabulated).cwiseAbs().maxCoeff();
  if (cmp.deviation_direct < tol)
    cmp.orientation = GeneratorComparison::Orientation::Direct;
  else if (cmp.deviation_transposed < tol)
    cmp.orientation = GeneratorComparison::Orientation::Transposed;

  cmp.pattern_match = true;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if ((std::abs(cmp.derived(i, j)) > tol) != (std::abs(cmp.tabulated(i, j)) > tol))
        cmp.pattern_match = false;
  return cmp;
}

Amplitude3 propagate_exact(const Matrix3& h, const Amplitude3& c0, double t) {
  require_hermitian(h, "propagate_exact");
  Eigen::SelfAdjointEigenSolver<Matrix3> es(h);
  const Eigen::Vector3d ev = es.eigenvalues();
  Amplitude3 phased = es.eigenvectors().adjoint() * c0;
  for (int i = 0; i < 3; ++i) phased(i) *= std::exp(-kI * ev(i) * t);
  return es.eigenvectors() * phased;
}

std::vector<double> time_grid(double t_max, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time_grid: dt must be positive");
  if (!(t_max >= 0.0)) throw std::invalid_argument("time_grid: t_max must be nonnegative");
  std::vector<double> g;
  for (long k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (t > t_max) break;
    g.push_back(t);
  }
  if (g.back() < t_max) g.push_back(t_max);
  return g;
}

Trajectory exact_trajectory(const Matrix3& h, const Amplitude3& c0,
                            const std::vector<double>& times) {
  require_hermitian(h, "exact_trajectory");
  Eigen::SelfAdjointEigenSolver<Matrix3> es(h);
  const Eigen::Vector3d ev = es.eigenvalues();
  const Matrix3 v = es.eigenvectors();
  const Amplitude3 c0v = v.adjoint() * c0;

  Trajectory traj;
  traj.times = times;
  traj.states.reserve(times.size());
  traj.populations.reserve(times.size());
  for (double t : times) {
    Amplitude3 phased = c0v;
    for (int i = 0; i < 3; ++i) phased(i) *= std::exp(-kI * ev(i) * t);
    const Amplitude3 c = v * phased;
    const BlochVector8 s = bloch_from_density(density_from_amplitudes(c, true));
    traj.states.push_back(s);
    traj.populations.push_back(populations_from_bloch(s));
  }
  return traj;
}

Trajectory integrate_bloch(const GeneratorMatrix8& m, const BlochVector8& s0,
                           double t_max, double dt) {
  const std::vector<double> grid = time_grid(t_max, dt);

  Trajectory traj;
  traj.times = grid;
  traj.states.reserve(grid.size());
  traj.populations.reserve(grid.size());

  BlochVector8 s = s0;
  traj.states.push_back(s);
  traj.populations.push_back(populations_from_bloch(s));
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double h = grid[i] - grid[i - 1];
    const BlochVector8 k1 = m * s;
    const BlochVector8 k2 = m * (s + 0.5 * h * k1);
    const BlochVector8 k3 = m * (s + 0.5 * h * k2);
    const BlochVector8 k4 = m * (s + h * k3);
    s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    traj.states.push_back(s);
    traj.populations.push_back(populations_from_bloch(s));
  }
  return traj;
}

BlochVector8 evolve_bloch_exact(const GeneratorMatrix8& m, const BlochVector8& s0,
                                double t) {
  // i m is Hermitian for antisymmetric real m, so exp(m t) = V exp(-i ev t) V+.
  const Eigen::Matrix<complexd, 8, 8> a = kI * m.cast<complexd>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<complexd, 8, 8>> es(a);
  const Eigen::Matrix<double, 8, 1> ev = es.eigenvalues();
  Eigen::Matrix<complexd, 8, 1> phased =
      es.eigenvectors().adjoint() * s0.cast<complexd>();
  for (int i = 0; i < 8; ++i) phased(i) *= std::exp(-kI * ev(i) * t);
  return (es.eigenvectors() * phased).real();
}

}  // namespace su3b
