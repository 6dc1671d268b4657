#include "su3bloch/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace su3b {

namespace {

// Fixed sample grid t_k = horizon * k / (samples - 1). Written with one
// multiplication order so every execution path sees identical doubles.
std::vector<double> sample_times(double horizon, int samples) {
  std::vector<double> times;
  times.reserve(samples);
  for (int k = 0; k < samples; ++k)
    times.push_back(horizon * (static_cast<double>(k) / (samples - 1)));
  return times;
}

std::vector<int> mask_indices(unsigned mask) {
  std::vector<int> idx;
  for (int b = 0; b < 8; ++b)
    if (mask & (1u << b)) idx.push_back(b + 1);
  return idx;
}

void validate_search(const SystemConfig& config, const SearchOptions& options) {
  if (options.trials < 1)
    throw std::invalid_argument("search_invariants: trials must be at least 1");
  if (options.samples < 2)
    throw std::invalid_argument("search_invariants: samples must be at least 2");
  if (!(options.tolerance > 0.0))
    throw std::invalid_argument("search_invariants: tolerance must be positive");
  if (options.allow_degenerate) return;
  if (std::abs(config.kappa1) < 1e-12 || std::abs(config.kappa2) < 1e-12)
    throw std::invalid_argument(
        "search_invariants: a coupling is zero; the coupling graph degenerates "
        "and extra subsets appear conserved (pass allow_degenerate to proceed)");
  if (std::abs(config.kappa1 - config.kappa2) < 1e-12)
    throw std::invalid_argument(
        "search_invariants: equal couplings create accidental symmetries "
        "(pass allow_degenerate to proceed)");
}

// Report skeleton plus the exactly propagated trial trajectories; shared by
// the fast and the reference path so both see identical inputs.
InvariantReport prepare_report(const SystemConfig& config, const SearchOptions& options,
                               std::vector<Trajectory>& trajectories) {
  validate_search(config, options);

  InvariantReport report;
  report.configuration = config.configuration;
  report.resonant = config.resonant();
  report.trials = options.trials;
  report.tolerance = options.tolerance;
  report.seed = options.seed;
  report.kappa1 = config.kappa1;
  report.kappa2 = config.kappa2;
  report.delta1 = config.delta1;
  report.delta2 = config.delta2;
  report.horizon = 20.0 / reference_scale(config);
  report.samples = options.samples;

  const Matrix3 h = dressed_hamiltonian(config);
  const std::vector<double> times = sample_times(report.horizon, options.samples);
  trajectories.reserve(options.trials);
  for (int trial = 0; trial < options.trials; ++trial) {
    std::mt19937_64 rng = trial_rng(options.seed, trial);
    trajectories.push_back(exact_trajectory(h, random_pure_state(rng), times));
  }

  report.candidates.resize(255);
  for (unsigned mask = 1; mask <= 255; ++mask)
    report.candidates[mask - 1].indices = mask_indices(mask);
  return report;
}

// Conserved/minimal flags, the minimal list, and the union-closure check
// from the filled deviations.
void finalize_report(InvariantReport& report) {
  std::array<bool, 256> conserved{};
  for (unsigned mask = 1; mask <= 255; ++mask) {
    SubsetCandidate& cand = report.candidates[mask - 1];
    cand.conserved = cand.max_deviation < report.tolerance;
    conserved[mask] = cand.conserved;
  }

  for (unsigned mask = 1; mask <= 255; ++mask) {
    SubsetCandidate& cand = report.candidates[mask - 1];
    cand.minimal = cand.conserved;
    if (!cand.minimal) continue;
    for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
      if (conserved[sub]) {
        cand.minimal = false;
        break;
      }
  }

  report.minimal_conserved.clear();
  for (const SubsetCandidate& cand : report.candidates)
    if (cand.minimal) report.minimal_conserved.push_back(cand.indices);
  std::sort(report.minimal_conserved.begin(), report.minimal_conserved.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  report.union_closure_ok = true;
  for (unsigned a = 1; a <= 255; ++a) {
    if (!conserved[a]) continue;
    for (unsigned b = a + 1; b <= 255; ++b)
      if (conserved[b] && (a & b) == 0 && !conserved[a | b])
        report.union_closure_ok = false;
  }
}

}  // namespace

double casimir_norm(const BlochVector8& s) { return s.squaredNorm(); }

double subset_deviation(const Trajectory& traj, std::span<const int> subset) {
  if (subset.empty()) throw std::invalid_argument("subset_deviation: empty subset");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > 8)
      throw std::invalid_argument("subset_deviation: indices must be in 1..8");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw std::invalid_argument("subset_deviation: indices must be strictly increasing");
  }
  if (traj.states.empty())
    throw std::invalid_argument("subset_deviation: empty trajectory");

  const auto subset_sum = [&subset](const BlochVector8& s) {
    double acc = 0.0;
    for (int i : subset) acc += s(i - 1) * s(i - 1);
    return acc;
  };

  const double ref = subset_sum(traj.states.front());
  double dev = 0.0;
  for (const BlochVector8& s : traj.states)
    dev = std::max(dev, std::abs(subset_sum(s) - ref));
  return dev;
}

InvariantReport search_invariants(const SystemConfig& config,
                                  const SearchOptions& options) {
  std::vector<Trajectory> trajectories;
  InvariantReport report = prepare_report(config, options, trajectories);

  // Squared components, trial-major; the mask loop reads this table in
  // ascending index order, matching subset_deviation bit for bit.
  const int nt = static_cast<int>(trajectories.front().states.size());
  const int trials = options.trials;
  std::vector<std::array<double, 8>> sq(static_cast<std::size_t>(trials) * nt);
  for (int trial = 0; trial < trials; ++trial)
    for (int k = 0; k < nt; ++k) {
      const BlochVector8& s = trajectories[trial].states[k];
      for (int i = 0; i < 8; ++i) sq[static_cast<std::size_t>(trial) * nt + k][i] = s(i) * s(i);
    }

  const bool parallel = options.exec == ExecPolicy::Parallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (int m = 1; m <= 255; ++m) {
    const unsigned mask = static_cast<unsigned>(m);
    double dev = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      const std::array<double, 8>* rows = &sq[static_cast<std::size_t>(trial) * nt];
      double ref = 0.0;
      for (int i = 0; i < 8; ++i)
        if (mask & (1u << i)) ref += rows[0][i];
      for (int k = 0; k < nt; ++k) {
        double acc = 0.0;
        for (int i = 0; i < 8; ++i)
          if (mask & (1u << i)) acc += rows[k][i];
        dev = std::max(dev, std::abs(acc - ref));
      }
    }
    report.candidates[mask - 1].max_deviation = dev;
  }

  finalize_report(report);
  return report;
}

InvariantReport search_invariants_reference(const SystemConfig& config,
                                            const SearchOptions& options) {
  std::vector<Trajectory> trajectories;
  InvariantReport report = prepare_report(config, options, trajectories);

  for (unsigned mask = 1; mask <= 255; ++mask) {
    SubsetCandidate& cand = report.candidates[mask - 1];
    double dev = 0.0;
    for (const Trajectory& traj : trajectories)
      dev = std::max(dev, subset_deviation(traj, cand.indices));
    cand.max_deviation = dev;
  }

  finalize_report(report);
  return report;
}

std::vector<std::vector<int>> block_structure(const GeneratorMatrix8& m,
                                              double threshold) {
  std::array<int, 8> component;
  component.fill(-1);
  std::vector<std::vector<int>> blocks;
  for (int start = 0; start < 8; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> block;
    std::vector<int> stack{start};
    component[start] = static_cast<int>(blocks.size());
    while (!stack.empty()) {
      const int node = stack.back();
      stack.pop_back();
      block.push_back(node + 1);
      for (int other = 0; other < 8; ++other) {
        if (component[other] >= 0) continue;
        if (std::abs(m(node, other)) > threshold || std::abs(m(other, node)) > threshold) {
          component[other] = component[start];
          stack.push_back(other);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::array<std::array<int, 2>, 2> coupled_row_pairs(Configuration configuration) {
  switch (configuration) {
    case Configuration::Cascade: return {{{2, 3}, {1, 2}}};
    case Configuration::Lambda: return {{{1, 3}, {1, 2}}};
    case Configuration::Vee: return {{{1, 3}, {2, 3}}};
  }
  throw std::invalid_argument("coupled_row_pairs: unknown configuration");
}

std::pair<std::vector<int>, std::vector<int>> resonant_blocks(Configuration configuration) {
  switch (configuration) {
    case Configuration::Cascade: return {{1, 5, 6}, {2, 3, 4, 7, 8}};
    case Configuration::Lambda: return {{1, 4, 7}, {2, 3, 5, 6, 8}};
    case Configuration::Vee: return {{2, 4, 6}, {1, 3, 5, 7, 8}};
  }
  throw std::invalid_argument("resonant_blocks: unknown configuration");
}

std::pair<double, double> closed_form_constants(const Amplitude3& c0,
                                                const SystemConfig& config) {
  if (std::abs(c0.squaredNorm() - 1.0) > 1e-10)
    throw std::invalid_argument("closed_form_constants: state is not normalized");
  for (int i = 0; i < 3; ++i)
    if (std::abs(c0(i).imag()) > 1e-12)
      throw std::domain_error(
          "closed_form_constants: closed forms hold for real amplitudes only; "
          "evaluate the Bloch subset sums directly for complex states");

  double r2sq = 0.0;
  for (const auto& pair : coupled_row_pairs(config.configuration)) {
    const double p = c0(pair[0] - 1).real();
    const double q = c0(pair[1] - 1).real();
    r2sq += p * p * q * q;
  }
  r2sq *= 4.0;
  return {r2sq, 4.0 / 3.0 - r2sq};
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffull),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), 0x53u};
  return std::mt19937_64(seq);
}

Amplitude3 random_pure_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Amplitude3 c;
    for (int i = 0; i < 3; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      c(i) = complexd(re, im);
    }
    const double n = c.norm();
    if (n > 1e-12) return c / n;
  }
}

Amplitude3 random_real_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Amplitude3 c;
    for (int i = 0; i < 3; ++i) c(i) = complexd(gauss(rng), 0.0);
    const double n = c.norm();
    if (n > 1e-12) return c / n;
  }
}

}  // namespace su3b
