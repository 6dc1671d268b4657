// Timing comparison of the serial reference paths against the OpenMP kernels,
// with a result-identity check so speed never trades against reproducibility.
#include "su3bloch/invariants.hpp"
#include "su3bloch/qutrit.hpp"

#include <omp.h>

#include <cstdio>

using namespace su3b;

namespace {

bool same_candidates(const InvariantReport& a, const InvariantReport& b) {
  for (std::size_t i = 0; i < a.candidates.size(); ++i)
    if (a.candidates[i].max_deviation != b.candidates[i].max_deviation) return false;
  return a.minimal_conserved == b.minimal_conserved;
}

}  // namespace

int main() {
  std::printf("threads %d\n\n", omp_get_max_threads());
  bool all_identical = true;

  {
    SystemConfig config;
    config.configuration = Configuration::Cascade;
    config.kappa1 = 1.0;
    config.kappa2 = 0.7;
    SearchOptions options;
    options.trials = 16;
    options.samples = 4000;

    double t0 = omp_get_wtime();
    options.exec = ExecPolicy::Serial;
    const InvariantReport reference = search_invariants_reference(config, options);
    double t1 = omp_get_wtime();
    const InvariantReport serial = search_invariants(config, options);
    double t2 = omp_get_wtime();
    options.exec = ExecPolicy::Parallel;
    const InvariantReport parallel = search_invariants(config, options);
    double t3 = omp_get_wtime();

    const bool identical =
        same_candidates(reference, serial) && same_candidates(serial, parallel);
    all_identical = all_identical && identical;

    std::printf("conserved-subset search (trials=%d, samples=%d, 255 subsets)\n",
                options.trials, options.samples);
    std::printf("  reference  %8.3f s\n", t1 - t0);
    std::printf("  serial     %8.3f s\n", t2 - t1);
    std::printf("  parallel   %8.3f s   speedup %.1fx   identical %s\n\n", t3 - t2,
                (t2 - t1) / (t3 - t2), identical ? "yes" : "NO");
  }

  {
    const int na = 41, np = 24;
    double t0 = omp_get_wtime();
    const QutritGridCheck serial = qutrit_grid_check(na, np, ExecPolicy::Serial);
    double t1 = omp_get_wtime();
    const QutritGridCheck parallel = qutrit_grid_check(na, np, ExecPolicy::Parallel);
    double t2 = omp_get_wtime();

    const bool identical =
        serial.max_norm_residual == parallel.max_norm_residual &&
        serial.max_purity_residual == parallel.max_purity_residual &&
        serial.max_bloch_norm_deviation == parallel.max_bloch_norm_deviation;
    all_identical = all_identical && identical;

    std::printf("qutrit grid check (%d^3 angles x %d phases, %ld points)\n", na, np,
                parallel.points);
    std::printf("  serial     %8.3f s\n", t1 - t0);
    std::printf("  parallel   %8.3f s   speedup %.1fx   identical %s\n", t2 - t1,
                (t1 - t0) / (t2 - t1), identical ? "yes" : "NO");
  }

  return all_identical ? 0 : 1;
}
