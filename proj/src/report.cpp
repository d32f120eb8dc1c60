#include "wsn/report.hpp"

#include <charconv>
#include <map>

#include "wsn/config.hpp"

namespace wsn {

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

void write_metrics_csv(std::ostream& os, const MetricsSeries& series) {
  os << "round,alive,cluster_heads,packets_bs_round,packets_bs_cum,"
        "energy_residual_total,energy_spent_round\n";
  for (const MetricsRecord& r : series) {
    os << r.round << ',' << r.alive << ',' << r.cluster_heads << ','
       << r.packets_bs_round << ',' << r.packets_bs_cum << ','
       << format_double(r.energy_residual_total) << ','
       << format_double(r.energy_spent_round) << '\n';
  }
}

namespace {

std::string round_or_sentinel(std::optional<std::size_t> value, std::size_t sentinel) {
  return std::to_string(value ? *value : sentinel);
}

void write_stat_line(std::ostream& os, const std::string& protocol,
                     const std::string& field, const AggregateStat& stat) {
  os << "agg\t" << protocol << '\t' << field << '\t';
  if (stat.included == 0) {
    os << "nr\tnr\tnr";
  } else {
    os << format_double(stat.mean) << '\t' << stat.min << '\t' << stat.max;
  }
  os << '\t' << stat.included << '\t' << stat.excluded << '\n';
}

}  // namespace

void write_summary(std::ostream& os, const RunSpec& spec,
                   const std::vector<RunResult>& results) {
  os << "# wsnsim batch summary\n";
  os << "# resolved configuration:\n";
  for (const auto& [key, value] : describe(spec)) os << "#   " << key << " = " << value << '\n';
  const std::size_t sentinel = spec.network.max_rounds + 1;
  os << "# run lines: protocol seed fnd hnd lnd unstability total_packets"
        " ('not reached' printed as rounds+1 = "
     << sentinel << ")\n";
  os << "# agg lines: agg protocol field mean min max included excluded\n";

  for (const RunResult& result : results) {
    const LifetimeSummary& s = result.summary;
    os << to_string(result.protocol) << '\t' << result.seed << '\t'
       << round_or_sentinel(s.fnd, sentinel) << '\t'
       << round_or_sentinel(s.hnd, sentinel) << '\t'
       << round_or_sentinel(s.lnd, sentinel) << '\t'
       << round_or_sentinel(s.unstability_period(), sentinel) << '\t' << s.total_packets
       << '\n';
  }

  std::map<Protocol, std::vector<LifetimeSummary>> by_protocol;
  for (const RunResult& result : results)
    by_protocol[result.protocol].push_back(result.summary);
  for (const auto& [protocol, summaries] : by_protocol) {
    const SeedAggregate agg = aggregate_seeds(summaries);
    const std::string name = to_string(protocol);
    write_stat_line(os, name, "fnd", agg.fnd);
    write_stat_line(os, name, "hnd", agg.hnd);
    write_stat_line(os, name, "lnd", agg.lnd);
    write_stat_line(os, name, "unstability", agg.unstability);
    write_stat_line(os, name, "total_packets", agg.total_packets);
  }
}

}  // namespace wsn
