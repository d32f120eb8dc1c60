#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace wsn {

struct MetricsRecord {
  std::size_t round = 0;
  std::size_t alive = 0;  // after round-end deaths
  std::size_t cluster_heads = 0;
  std::size_t packets_bs_round = 0;
  std::size_t packets_bs_cum = 0;
  double energy_residual_total = 0.0;
  double energy_spent_round = 0.0;
};

using MetricsSeries = std::vector<MetricsRecord>;

/// Lifetime landmarks of one run. A threshold the series never crosses is
/// left unset ("not reached").
struct LifetimeSummary {
  std::optional<std::size_t> fnd;  // first node death
  std::optional<std::size_t> hnd;  // alive first <= N/2
  std::optional<std::size_t> lnd;  // alive first == 0
  std::size_t total_packets = 0;
  std::size_t rounds_simulated = 0;

  std::optional<std::size_t> stability_period() const { return fnd; }
  std::optional<std::size_t> unstability_period() const {
    if (fnd && lnd) return *lnd - *fnd;
    return std::nullopt;
  }
};

/// Scans a series with rounds consecutive from 1. Throws on an empty series.
LifetimeSummary summarize(const MetricsSeries& series, std::size_t node_count);

struct AggregateStat {
  std::size_t included = 0;
  std::size_t excluded = 0;  // runs where the threshold was not reached
  double mean = 0.0;
  std::size_t min = 0;
  std::size_t max = 0;
};

struct SeedAggregate {
  AggregateStat fnd, hnd, lnd, unstability, total_packets;
};

/// Mean/min/max across runs; "not reached" values are excluded from the
/// statistics and counted in `excluded`.
SeedAggregate aggregate_seeds(const std::vector<LifetimeSummary>& summaries);

}  // namespace wsn
