#include "su3bloch/su3.hpp"

#include <cmath>
#include <stdexcept>

namespace su3b {

namespace {

constexpr complexd kI{0.0, 1.0};

std::array<Matrix3, 8> make_basis() {
  std::array<Matrix3, 8> l;
  for (auto& m : l) m.setZero();
  l[0](0, 1) = 1.0;
  l[0](1, 0) = 1.0;
  l[1](0, 1) = -kI;
  l[1](1, 0) = kI;
  l[2](0, 0) = 1.0;
  l[2](1, 1) = -1.0;
  l[3](0, 2) = 1.0;
  l[3](2, 0) = 1.0;
  l[4](0, 2) = -kI;
  l[4](2, 0) = kI;
  l[5](1, 2) = 1.0;
  l[5](2, 1) = 1.0;
  l[6](1, 2) = -kI;
  l[6](2, 1) = kI;
  const double r3 = 1.0 / std::sqrt(3.0);
  l[7](0, 0) = r3;
  l[7](1, 1) = r3;
  l[7](2, 2) = -2.0 * r3;
  return l;
}

const std::array<Matrix3, 8>& basis() {
  static const std::array<Matrix3, 8> b = make_basis();
  return b;
}

Matrix3 diagonal3(double a, double b, double c) {
  Matrix3 m = Matrix3::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

double max_abs(const Matrix3& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

const Matrix3& gellmann(int i) {
  if (i < 1 || i > 8)
    throw std::invalid_argument("gellmann: index must be in 1..8, got " + std::to_string(i));
  return basis()[i - 1];
}

Matrix3 shift_operator(ShiftKind kind, ShiftPart part) {
  const auto ladder = [](const Matrix3& a, const Matrix3& b, int sign) {
    return ((a + double(sign) * kI * b) / 2.0).eval();
  };
  switch (kind) {
    case ShiftKind::T:
      if (part == ShiftPart::Plus) return ladder(gellmann(1), gellmann(2), +1);
      if (part == ShiftPart::Minus) return ladder(gellmann(1), gellmann(2), -1);
      return diagonal3(1, -1, 0);
    case ShiftKind::U:
      if (part == ShiftPart::Plus) return ladder(gellmann(6), gellmann(7), +1);
      if (part == ShiftPart::Minus) return ladder(gellmann(6), gellmann(7), -1);
      return diagonal3(0, 1, -1);
    case ShiftKind::V:
      if (part == ShiftPart::Plus) return ladder(gellmann(4), gellmann(5), +1);
      if (part == ShiftPart::Minus) return ladder(gellmann(4), gellmann(5), -1);
      return diagonal3(1, 0, -1);
  }
  throw std::invalid_argument("shift_operator: unknown kind");
}

// ------------------------- structure constants ----------------------------

int StructureConstants::idx(int i, int j, int k) {
  return ((i - 1) * 8 + (j - 1)) * 8 + (k - 1);
}

StructureConstants::StructureConstants() {
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      const Matrix3 ab = gellmann(i) * gellmann(j);
      const Matrix3 ba = gellmann(j) * gellmann(i);
      const Matrix3 comm = ab - ba;
      const Matrix3 anti = ab + ba;
      for (int k = 1; k <= 8; ++k) {
        f_[idx(i, j, k)] = ((comm * gellmann(k)).trace() / (4.0 * kI)).real();
        d_[idx(i, j, k)] = ((anti * gellmann(k)).trace() / 4.0).real();
      }
    }
  }
}

const StructureConstants& StructureConstants::instance() {
  static const StructureConstants sc;
  return sc;
}

double StructureConstants::f(int i, int j, int k) const {
  if (i < 1 || i > 8 || j < 1 || j > 8 || k < 1 || k > 8)
    throw std::invalid_argument("structure constant index out of range");
  return f_[idx(i, j, k)];
}

double StructureConstants::d(int i, int j, int k) const {
  if (i < 1 || i > 8 || j < 1 || j > 8 || k < 1 || k > 8)
    throw std::invalid_argument("structure constant index out of range");
  return d_[idx(i, j, k)];
}

double structure_constant_f(int i, int j, int k) {
  return StructureConstants::instance().f(i, j, k);
}

double structure_constant_d(int i, int j, int k) {
  return StructureConstants::instance().d(i, j, k);
}

std::vector<std::tuple<int, int, int, double>> nonzero_f_families() {
  std::vector<std::tuple<int, int, int, double>> out;
  const auto& sc = StructureConstants::instance();
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k)
        if (std::abs(sc.f(i, j, k)) > 1e-9) out.emplace_back(i, j, k, sc.f(i, j, k));
  return out;
}

std::vector<std::tuple<int, int, int, double>> nonzero_d_families() {
  std::vector<std::tuple<int, int, int, double>> out;
  const auto& sc = StructureConstants::instance();
  for (int i = 1; i <= 8; ++i)
    for (int j = i; j <= 8; ++j)
      for (int k = j; k <= 8; ++k)
        if (std::abs(sc.d(i, j, k)) > 1e-9) out.emplace_back(i, j, k, sc.d(i, j, k));
  return out;
}

// ------------------------------ verification ------------------------------

double AlgebraReport::max_residual() const {
  return std::max({commutator_residual, anticommutator_residual, orthonormality_residual,
                   f_antisymmetry_residual, d_symmetry_residual, jacobi_residual});
}

AlgebraReport verify_algebra(double perturbation) {
  std::array<Matrix3, 8> l;
  for (int i = 0; i < 8; ++i) l[i] = gellmann(i + 1);
  l[0](0, 0) += perturbation;

  const auto& sc = StructureConstants::instance();
  AlgebraReport r;

  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      const Matrix3 ab = l[i - 1] * l[j - 1];
      const Matrix3 ba = l[j - 1] * l[i - 1];

      Matrix3 comm_rhs = Matrix3::Zero();
      Matrix3 anti_rhs = Matrix3::Zero();
      for (int k = 1; k <= 8; ++k) {
        comm_rhs += 2.0 * kI * sc.f(i, j, k) * l[k - 1];
        anti_rhs += 2.0 * sc.d(i, j, k) * l[k - 1];
      }
      if (i == j) anti_rhs += (4.0 / 3.0) * Matrix3::Identity();

      r.commutator_residual = std::max(r.commutator_residual, max_abs(ab - ba - comm_rhs));
      r.anticommutator_residual =
          std::max(r.anticommutator_residual, max_abs(ab + ba - anti_rhs));

      const double tr = std::abs((ab.trace() - complexd(i == j ? 2.0 : 0.0)));
      r.orthonormality_residual = std::max(r.orthonormality_residual, tr);
    }
  }

  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      for (int k = 1; k <= 8; ++k) {
        r.f_antisymmetry_residual =
            std::max({r.f_antisymmetry_residual, std::abs(sc.f(i, j, k) + sc.f(j, i, k)),
                      std::abs(sc.f(i, j, k) + sc.f(i, k, j))});
        r.d_symmetry_residual =
            std::max({r.d_symmetry_residual, std::abs(sc.d(i, j, k) - sc.d(j, i, k)),
                      std::abs(sc.d(i, j, k) - sc.d(i, k, j))});
      }
    }
  }

  // sum_m (f_ijm f_mkl + f_jkm f_mil + f_kim f_mjl) = 0
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k)
        for (int n = 1; n <= 8; ++n) {
          double acc = 0;
          for (int m = 1; m <= 8; ++m)
            acc += sc.f(i, j, m) * sc.f(m, k, n) + sc.f(j, k, m) * sc.f(m, i, n) +
                   sc.f(k, i, m) * sc.f(m, j, n);
          r.jacobi_residual = std::max(r.jacobi_residual, std::abs(acc));
        }

  return r;
}

bool is_hermitian(const Matrix3& m, double tol) {
  return max_abs(m - m.adjoint().eval()) <= tol;
}

bool is_unitary(const Matrix3& m, double tol) {
  return max_abs(m * m.adjoint() - Matrix3::Identity()) <= tol;
}

}  // namespace su3b
