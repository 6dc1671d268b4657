// su3.hpp -- Gell-Mann basis, SU(3) shift operators, structure constants
#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <tuple>
#include <vector>

namespace su3b {

using complexd = std::complex<double>;
using Matrix3 = Eigen::Matrix3cd;

inline constexpr double kAlgebraTol = 1e-12;

// Gell-Mann matrix lambda_i for i in 1..8. Throws std::invalid_argument
// for any other index.
const Matrix3& gellmann(int i);

// Ladder-style combinations of the basis. T couples rows 1,2; U couples
// rows 2,3; V couples rows 1,3.
//   T+- = (l1 +- i l2)/2   T3 = l3
//   U+- = (l6 +- i l7)/2   U3 = (sqrt(3) l8 - l3)/2 = diag(0, 1, -1)
//   V+- = (l4 +- i l5)/2   V3 = (sqrt(3) l8 + l3)/2 = diag(1, 0, -1)
// The "Three" members are built as exact integer diagonals so that
// T3 + U3 - V3 vanishes identically.
enum class ShiftKind { T, U, V };
enum class ShiftPart { Plus, Minus, Three };

Matrix3 shift_operator(ShiftKind kind, ShiftPart part);

// Antisymmetric f and symmetric d tensors, computed once from the traces
//   f_ijk = Tr([l_i, l_j] l_k) / (4i),   d_ijk = Tr({l_i, l_j} l_k) / 4.
// Immutable after construction; safe to share across threads.
class StructureConstants {
 public:
  static const StructureConstants& instance();

  double f(int i, int j, int k) const;  // indices 1..8
  double d(int i, int j, int k) const;

 private:
  StructureConstants();
  static int idx(int i, int j, int k);

  std::array<double, 512> f_{};
  std::array<double, 512> d_{};
};

double structure_constant_f(int i, int j, int k);
double structure_constant_d(int i, int j, int k);

// Nonzero families as canonically ordered index triples (ascending) with
// their values. f has 9 families, d has 16.
std::vector<std::tuple<int, int, int, double>> nonzero_f_families();
std::vector<std::tuple<int, int, int, double>> nonzero_d_families();

struct AlgebraReport {
  double commutator_residual = 0;      // [l_i,l_j] - 2i sum_k f_ijk l_k
  double anticommutator_residual = 0;  // {l_i,l_j} - (4/3) delta_ij - 2 sum_k d_ijk l_k
  double orthonormality_residual = 0;  // Tr(l_i l_j) - 2 delta_ij
  double f_antisymmetry_residual = 0;
  double d_symmetry_residual = 0;
  double jacobi_residual = 0;

  double max_residual() const;
  bool pass(double tol = kAlgebraTol) const { return max_residual() < tol; }
};

// Re-derives every identity above over all index pairs. `perturbation` is a
// self-test hook: it is added to the (1,1) entry of lambda_1 before checking
// and any nonzero value must make the report fail.
AlgebraReport verify_algebra(double perturbation = 0.0);

bool is_hermitian(const Matrix3& m, double tol = kAlgebraTol);
bool is_unitary(const Matrix3& m, double tol = kAlgebraTol);

}  // namespace su3b
