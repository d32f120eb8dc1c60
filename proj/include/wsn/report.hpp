#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "wsn/metrics.hpp"
#include "wsn/protocols.hpp"

namespace wsn {

struct RunSpec;

/// Shortest representation that round-trips exactly.
std::string format_double(double value);

/// Schema: round,alive,cluster_heads,packets_bs_round,packets_bs_cum,
/// energy_residual_total,energy_spent_round
void write_metrics_csv(std::ostream& os, const MetricsSeries& series);

struct RunResult {
  Protocol protocol = Protocol::Deec;
  std::uint64_t seed = 0;
  LifetimeSummary summary;
};

/// Resolved-config echo, one tab-separated line per run (thresholds that were
/// never reached print as max_rounds + 1), then per-protocol mean/min/max
/// lines with exclusion counts.
void write_summary(std::ostream& os, const RunSpec& spec,
                   const std::vector<RunResult>& results);

}  // namespace wsn
