// invariants.hpp -- conserved-subset search over the Bloch components
#pragma once

#include "su3bloch/bloch.hpp"
#include "su3bloch/exec.hpp"

#include <cstdint>
#include <random>
#include <span>

namespace su3b {

// Sum of squared components. 4/3 for every pure state; conserved for all
// parameters because the generator is antisymmetric.
double casimir_norm(const BlochVector8& s);

struct SubsetCandidate {
  std::vector<int> indices;  // strictly increasing, in 1..8
  double max_deviation = 0;
  bool conserved = false;
  bool minimal = false;  // conserved with no conserved proper subset
};

struct SearchOptions {
  int trials = 5;
  double tolerance = 1e-8;
  std::uint64_t seed = 42;
  int samples = 200;
  bool allow_degenerate = false;
  ExecPolicy exec = ExecPolicy::Parallel;
};

struct InvariantReport {
  Configuration configuration = Configuration::Cascade;
  bool resonant = false;
  int trials = 0;
  double tolerance = 0;
  std::uint64_t seed = 0;
  double kappa1 = 0, kappa2 = 0, delta1 = 0, delta2 = 0;
  double horizon = 0;
  int samples = 0;
  std::vector<SubsetCandidate> candidates;           // all 255, bitmask order
  std::vector<std::vector<int>> minimal_conserved;   // sorted by (size, lex)
  bool union_closure_ok = false;  // disjoint conserved unions stay conserved
};

// max_t |sum_{i in subset} S_i(t)^2 - same at t=0| over the trajectory.
// The subset must be nonempty, strictly increasing, within 1..8.
double subset_deviation(const Trajectory& traj, std::span<const int> subset);

// Evaluates all 255 component subsets over `trials` exactly propagated
// random initial states on t in [0, 20/reference_scale]. A subset counts as
// conserved when its worst deviation over every trial stays below
// tolerance. Rejects degenerate couplings (either kappa ~ 0, or equal
// kappas) unless allow_degenerate is set.
InvariantReport search_invariants(const SystemConfig& config,
                                  const SearchOptions& options = {});

// Slow direct-definition path: same draws, one Trajectory per trial and
// subset_deviation per candidate. Kept as the reference the parallel kernel
// is tested against; results are bit-identical.
InvariantReport search_invariants_reference(const SystemConfig& config,
                                            const SearchOptions& options = {});

// Connected components of the coupling graph |m_ij| > threshold, each
// sorted, ordered by smallest member.
std::vector<std::vector<int>> block_structure(const GeneratorMatrix8& m,
                                              double threshold = 1e-12);

// Row pairs coupled by the two fields, 1-based.
std::array<std::array<int, 2>, 2> coupled_row_pairs(Configuration configuration);

// The two resonant conservation blocks: the 3-component set whose norm is
// the small constant r2^2 and its 5-component complement.
std::pair<std::vector<int>, std::vector<int>> resonant_blocks(Configuration configuration);

// (r2^2, r4^2) for a normalized all-real initial amplitude vector:
// r2^2 = 4 (|c_p c_q|^2 + |c_q c_r|^2) over the coupled row pairs and
// r4^2 = 4/3 - r2^2. Complex input throws std::domain_error; evaluate the
// Bloch subset sums directly in that case.
std::pair<double, double> closed_form_constants(const Amplitude3& c0,
                                                const SystemConfig& config);

// Deterministic per-trial engine: mt19937_64 seeded from (seed, trial).
std::mt19937_64 trial_rng(std::uint64_t seed, int trial);

// Normalized complex (respectively real) Gaussian 3-vector.
Amplitude3 random_pure_state(std::mt19937_64& rng);
Amplitude3 random_real_state(std::mt19937_64& rng);

}  // namespace su3b
