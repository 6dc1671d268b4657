// io.hpp -- CSV trajectory output and JSON report serialization
#pragma once

#include "su3bloch/invariants.hpp"

#include <iosfwd>
#include <string>

namespace su3b {

// Header t,S1,...,S8,p1,p2,p3,r2sq,r4sq,norm; every value at 17 significant
// digits. r2sq/r4sq are the configuration's resonant-block subset sums
// (constant only at resonance, still reported off resonance) and norm is the
// full squared length.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj,
                          Configuration configuration);

// Deterministic serialization: fixed indent, alphabetical keys, shortest
// round-trip doubles. Identical reports produce identical bytes.
std::string invariant_report_json(const InvariantReport& report, int indent = 2);

// %.17g rendering used by the CSV writer.
std::string format_g17(double v);

}  // namespace su3b
