#include "su3bloch/invariants.hpp"

#include <doctest.h>

#include <cmath>

using namespace su3b;

namespace {

SystemConfig make_config(Configuration c, double k1, double k2, double d1, double d2) {
  SystemConfig config;
  config.configuration = c;
  config.kappa1 = k1;
  config.kappa2 = k2;
  config.delta1 = d1;
  config.delta2 = d2;
  return config;
}

Trajectory sample_trajectory(const SystemConfig& config, std::uint64_t seed) {
  std::mt19937_64 rng = trial_rng(seed, 0);
  return exact_trajectory(dressed_hamiltonian(config), random_pure_state(rng),
                          time_grid(20.0 / reference_scale(config), 0.1));
}

bool identical_reports(const InvariantReport& a, const InvariantReport& b) {
  if (a.candidates.size() != b.candidates.size()) return false;
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    if (a.candidates[i].indices != b.candidates[i].indices) return false;
    if (a.candidates[i].max_deviation != b.candidates[i].max_deviation) return false;
    if (a.candidates[i].conserved != b.candidates[i].conserved) return false;
    if (a.candidates[i].minimal != b.candidates[i].minimal) return false;
  }
  return a.minimal_conserved == b.minimal_conserved &&
         a.union_closure_ok == b.union_closure_ok && a.horizon == b.horizon;
}

}  // namespace

TEST_CASE("casimir norm") {
  BlochVector8 s = BlochVector8::Zero();
  s(2) = 1.0;
  s(7) = 1.0 / std::sqrt(3.0);  // pure top-level state
  CHECK(casimir_norm(s) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

  Matrix3 mixed = Matrix3::Zero();
  mixed(0, 0) = 0.5;
  mixed(1, 1) = 0.5;
  CHECK(casimir_norm(bloch_from_density(mixed)) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("subset deviation validation and basic values") {
  const SystemConfig config = make_config(Configuration::Cascade, 1.0, 0.7, 0, 0);
  const Trajectory traj = sample_trajectory(config, 42);

  const int all[] = {1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(subset_deviation(traj, all) < 1e-12);

  const int small[] = {1, 5, 6};
  CHECK(subset_deviation(traj, small) < 1e-12);

  const int pair[] = {1, 2};
  CHECK(subset_deviation(traj, pair) > 0.01);

  CHECK_THROWS_AS(subset_deviation(traj, std::span<const int>{}), std::invalid_argument);
  const int bad_range[] = {0, 3};
  CHECK_THROWS_AS(subset_deviation(traj, bad_range), std::invalid_argument);
  const int bad_order[] = {3, 3};
  CHECK_THROWS_AS(subset_deviation(traj, bad_order), std::invalid_argument);
  CHECK_THROWS_AS(subset_deviation(Trajectory{}, small), std::invalid_argument);
}

TEST_CASE("resonant search finds the split for all three configurations") {
  SearchOptions options;
  options.trials = 3;

  const InvariantReport cascade =
      search_invariants(make_config(Configuration::Cascade, 1.0, 0.7, 0, 0), options);
  CHECK(cascade.resonant);
  CHECK(cascade.candidates.size() == 255);
  CHECK(cascade.minimal_conserved ==
        std::vector<std::vector<int>>{{1, 5, 6}, {2, 3, 4, 7, 8}});
  CHECK(cascade.union_closure_ok);

  const InvariantReport lambda =
      search_invariants(make_config(Configuration::Lambda, 1.0, 0.7, 0, 0), options);
  CHECK(lambda.minimal_conserved ==
        std::vector<std::vector<int>>{{1, 4, 7}, {2, 3, 5, 6, 8}});

  const InvariantReport vee =
      search_invariants(make_config(Configuration::Vee, 1.0, 0.7, 0, 0), options);
  CHECK(vee.minimal_conserved ==
        std::vector<std::vector<int>>{{2, 4, 6}, {1, 3, 5, 7, 8}});

  // the split itself is conserved far below tolerance
  for (const InvariantReport* rep : {&cascade, &lambda, &vee})
    for (const std::vector<int>& subset : rep->minimal_conserved)
      for (const SubsetCandidate& cand : rep->candidates)
        if (cand.indices == subset) CHECK(cand.max_deviation < 1e-9);
}

TEST_CASE("detuning collapses the split to the full sphere") {
  SearchOptions options;
  options.trials = 3;
  for (int c = 0; c < 3; ++c) {
    const InvariantReport rep = search_invariants(
        make_config(static_cast<Configuration>(c), 1.0, 0.7, 0.9, 1.3), options);
    CHECK_FALSE(rep.resonant);
    CHECK(rep.minimal_conserved ==
          std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6, 7, 8}});
    CHECK(rep.union_closure_ok);
  }
}

TEST_CASE("degenerate couplings are rejected unless explicitly allowed") {
  SearchOptions options;
  options.trials = 1;
  CHECK_THROWS_AS(
      search_invariants(make_config(Configuration::Cascade, 1.0, 0.0, 0, 0), options),
      std::invalid_argument);
  CHECK_THROWS_AS(
      search_invariants(make_config(Configuration::Cascade, 0.7, 0.7, 0, 0), options),
      std::invalid_argument);

  options.allow_degenerate = true;
  CHECK_NOTHROW(
      search_invariants(make_config(Configuration::Cascade, 1.0, 0.0, 0, 0), options));

  SearchOptions bad;
  bad.trials = 0;
  CHECK_THROWS_AS(
      search_invariants(make_config(Configuration::Cascade, 1.0, 0.7, 0, 0), bad),
      std::invalid_argument);
  bad.trials = 1;
  bad.tolerance = 0.0;
  CHECK_THROWS_AS(
      search_invariants(make_config(Configuration::Cascade, 1.0, 0.7, 0, 0), bad),
      std::invalid_argument);
}

TEST_CASE("swapping the couplings relabels nothing in the conserved family") {
  SearchOptions options;
  options.trials = 3;
  const InvariantReport a =
      search_invariants(make_config(Configuration::Lambda, 1.0, 0.7, 0, 0), options);
  const InvariantReport b =
      search_invariants(make_config(Configuration::Lambda, 0.7, 1.0, 0, 0), options);
  CHECK(a.minimal_conserved == b.minimal_conserved);
}

TEST_CASE("serial, parallel, and reference searches are bit-identical") {
  const SystemConfig config = make_config(Configuration::Vee, 1.3, 0.6, 0, 0);
  SearchOptions options;
  options.trials = 3;

  options.exec = ExecPolicy::Parallel;
  const InvariantReport par = search_invariants(config, options);
  options.exec = ExecPolicy::Serial;
  const InvariantReport ser = search_invariants(config, options);
  const InvariantReport ref = search_invariants_reference(config, options);

  CHECK(identical_reports(par, ser));
  CHECK(identical_reports(par, ref));
}

TEST_CASE("block structure of the propagating generator") {
  const GeneratorMatrix8 resonant = tabulated_generator(
      make_config(Configuration::Cascade, 1.0, 0.7, 0, 0));
  CHECK(block_structure(resonant) ==
        std::vector<std::vector<int>>{{1, 5, 6}, {2, 3, 4, 7, 8}});

  const GeneratorMatrix8 detuned = tabulated_generator(
      make_config(Configuration::Cascade, 1.0, 0.7, 0.9, 1.3));
  CHECK(block_structure(detuned) ==
        std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6, 7, 8}});

  CHECK(block_structure(GeneratorMatrix8::Zero()).size() == 8);

  const GeneratorMatrix8 lam = tabulated_generator(
      make_config(Configuration::Lambda, 1.0, 0.7, 0, 0));
  CHECK(block_structure(lam) ==
        std::vector<std::vector<int>>{{1, 4, 7}, {2, 3, 5, 6, 8}});

  const GeneratorMatrix8 vee = tabulated_generator(
      make_config(Configuration::Vee, 1.0, 0.7, 0, 0));
  CHECK(block_structure(vee) ==
        std::vector<std::vector<int>>{{1, 3, 5, 7, 8}, {2, 4, 6}});
}

TEST_CASE("coupled row pairs and resonant blocks") {
  const auto cascade = coupled_row_pairs(Configuration::Cascade);
  CHECK(cascade[0] == std::array<int, 2>{2, 3});
  CHECK(cascade[1] == std::array<int, 2>{1, 2});
  const auto lambda = coupled_row_pairs(Configuration::Lambda);
  CHECK(lambda[0] == std::array<int, 2>{1, 3});
  CHECK(lambda[1] == std::array<int, 2>{1, 2});
  const auto vee = coupled_row_pairs(Configuration::Vee);
  CHECK(vee[0] == std::array<int, 2>{1, 3});
  CHECK(vee[1] == std::array<int, 2>{2, 3});

  CHECK(resonant_blocks(Configuration::Cascade).first == std::vector<int>{1, 5, 6});
  CHECK(resonant_blocks(Configuration::Cascade).second ==
        std::vector<int>{2, 3, 4, 7, 8});
  CHECK(resonant_blocks(Configuration::Lambda).first == std::vector<int>{1, 4, 7});
  CHECK(resonant_blocks(Configuration::Vee).first == std::vector<int>{2, 4, 6});
}

TEST_CASE("closed-form constants at pinned states") {
  const SystemConfig cascade = make_config(Configuration::Cascade, 1.0, 0.7, 0, 0);

  const double r2 = 1.0 / std::sqrt(2.0);
  auto [r2a, r4a] = closed_form_constants(Amplitude3(r2, r2, 0), cascade);
  CHECK(r2a == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r4a == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const double r3 = 1.0 / std::sqrt(3.0);
  auto [r2b, r4b] = closed_form_constants(Amplitude3(r3, r3, r3), cascade);
  CHECK(r2b == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
  CHECK(r4b == doctest::Approx(4.0 / 9.0).epsilon(1e-14));

  auto [r2c, r4c] = closed_form_constants(Amplitude3(1, 0, 0), cascade);
  CHECK(r2c == 0.0);
  CHECK(r4c == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

  CHECK_THROWS_AS(closed_form_constants(Amplitude3(complexd(0, 1), 0, 0), cascade),
                  std::domain_error);
  CHECK_THROWS_AS(closed_form_constants(Amplitude3(1, 1, 0), cascade),
                  std::invalid_argument);
}

TEST_CASE("closed forms equal the subset sums along whole trajectories") {
  for (int c = 0; c < 3; ++c) {
    const SystemConfig config =
        make_config(static_cast<Configuration>(c), 1.0, 0.7, 0, 0);
    const auto [small, large] = resonant_blocks(config.configuration);

    for (int trial = 0; trial < 6; ++trial) {
      std::mt19937_64 rng = trial_rng(99, trial);
      const Amplitude3 c0 = random_real_state(rng);
      const auto [r2sq, r4sq] = closed_form_constants(c0, config);
      CHECK(r4sq == 4.0 / 3.0 - r2sq);  // complement to the bit, by construction

      const Trajectory traj = exact_trajectory(
          dressed_hamiltonian(config), c0, time_grid(20.0, 0.25));
      for (const BlochVector8& s : traj.states) {
        double got = 0.0;
        for (int i : small) got += s(i - 1) * s(i - 1);
        CHECK(std::abs(got - r2sq) < 1e-9);
        double rest = 0.0;
        for (int i : large) rest += s(i - 1) * s(i - 1);
        CHECK(std::abs(rest - r4sq) < 1e-9);
      }
    }
  }
}

TEST_CASE("trial rng is deterministic per (seed, trial)") {
  std::mt19937_64 a = trial_rng(42, 0);
  std::mt19937_64 b = trial_rng(42, 0);
  CHECK(a() == b());
  std::mt19937_64 c = trial_rng(42, 1);
  std::mt19937_64 d = trial_rng(43, 0);
  CHECK(trial_rng(42, 1)() == c());
  CHECK(c() != d());

  std::mt19937_64 r1 = trial_rng(7, 3);
  std::mt19937_64 r2 = trial_rng(7, 3);
  const Amplitude3 s1 = random_pure_state(r1);
  const Amplitude3 s2 = random_pure_state(r2);
  CHECK((s1 - s2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(s1.norm() == doctest::Approx(1.0).epsilon(1e-14));

  std::mt19937_64 r3 = trial_rng(7, 4);
  const Amplitude3 real = random_real_state(r3);
  CHECK(real.norm() == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 0; i < 3; ++i) CHECK(real(i).imag() == 0.0);
}
