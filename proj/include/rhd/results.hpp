#pragma once

#include <string>

#include "rhd/sim.hpp"

namespace rhd {

// Machine-readable results document. Top-level fields: total_distance_m,
// total_idle_s, tail_idle_s, percent_assigned, per_window[], plus the fully
// resolved config so a run can be reproduced from its output alone.
std::string results_json(const SimConfig& config, const Scenario& scenario,
                         const SimMetrics& metrics);

void write_results_json(const SimConfig& config, const Scenario& scenario,
                        const SimMetrics& metrics, const std::string& path);

// Flat per-window trace.
std::string results_csv(const SimMetrics& metrics);
void write_results_csv(const SimMetrics& metrics, const std::string& path);

}  // namespace rhd
