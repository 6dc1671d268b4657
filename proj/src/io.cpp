#include "su3bloch/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <ostream>

namespace su3b {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj,
                          Configuration configuration) {
  const auto [small, large] = resonant_blocks(configuration);
  const auto block_sum = [](const BlochVector8& s, const std::vector<int>& block) {
    double acc = 0.0;
    for (int i : block) acc += s(i - 1) * s(i - 1);
    return acc;
  };

  out << "t,S1,S2,S3,S4,S5,S6,S7,S8,p1,p2,p3,r2sq,r4sq,norm\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const BlochVector8& s = traj.states[k];
    out << format_g17(traj.times[k]);
    for (int i = 0; i < 8; ++i) out << ',' << format_g17(s(i));
    for (double p : traj.populations[k]) out << ',' << format_g17(p);
    out << ',' << format_g17(block_sum(s, small));
    out << ',' << format_g17(block_sum(s, large));
    out << ',' << format_g17(s.squaredNorm());
    out << '\n';
  }
}

std::string invariant_report_json(const InvariantReport& report, int indent) {
  nlohmann::json j;
  j["configuration"] = to_string(report.configuration);
  j["resonant"] = report.resonant;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["tolerance"] = report.tolerance;
  j["samples"] = report.samples;
  j["horizon"] = report.horizon;
  j["parameters"] = {{"kappa1", report.kappa1},
                     {"kappa2", report.kappa2},
                     {"delta1", report.delta1},
                     {"delta2", report.delta2}};
  j["minimal_conserved"] = report.minimal_conserved;
  j["union_closure_ok"] = report.union_closure_ok;

  nlohmann::json candidates = nlohmann::json::array();
  for (const SubsetCandidate& cand : report.candidates) {
    nlohmann::json entry;
    entry["subset"] = cand.indices;
    entry["max_deviation"] = cand.max_deviation;
    candidates.push_back(std::move(entry));
  }
  j["all_candidates"] = std::move(candidates);

  return j.dump(indent) + "\n";
}

}  // namespace su3b
