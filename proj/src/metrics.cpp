#include "wsn/metrics.hpp"

#include <stdexcept>

namespace wsn {

LifetimeSummary summarize(const MetricsSeries& series, std::size_t node_count) {
  if (series.empty()) throw std::invalid_argument("summarize: empty series");

  LifetimeSummary summary;
  summary.rounds_simulated = series.size();
  summary.total_packets = series.back().packets_bs_cum;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const MetricsRecord& record = series[i];
    if (record.round != i + 1)
      throw std::invalid_argument("summarize: rounds must be consecutive from 1");
    if (!summary.fnd && record.alive < node_count) summary.fnd = record.round;
    if (!summary.hnd && 2 * record.alive <= node_count) summary.hnd = record.round;
    if (!summary.lnd && record.alive == 0) summary.lnd = record.round;
  }
  return summary;
}

namespace {

void accumulate(AggregateStat& stat, std::optional<std::size_t> value) {
  if (!value) {
    ++stat.excluded;
    return;
  }
  if (stat.included == 0) {
    stat.min = stat.max = *value;
  } else {
    stat.min = std::min(stat.min, *value);
    stat.max = std::max(stat.max, *value);
  }
  ++stat.included;
  stat.mean += static_cast<double>(*value);
}

void finish(AggregateStat& stat) {
  if (stat.included > 0) stat.mean /= static_cast<double>(stat.included);
}

}  // namespace

SeedAggregate aggregate_seeds(const std::vector<LifetimeSummary>& summaries) {
  if (summaries.empty()) throw std::invalid_argument("aggregate_seeds: no summaries");
  SeedAggregate agg;
  for (const LifetimeSummary& s : summaries) {
    accumulate(agg.fnd, s.fnd);
    accumulate(agg.hnd, s.hnd);
    accumulate(agg.lnd, s.lnd);
    accumulate(agg.unstability, s.unstability_period());
    accumulate(agg.total_packets, s.total_packets);
  }
  finish(agg.fnd);
  finish(agg.hnd);
  finish(agg.lnd);
  finish(agg.unstability);
  finish(agg.total_packets);
  return agg;
}

}  // namespace wsn
