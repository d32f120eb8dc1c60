#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsn/chain.hpp"
#include "wsn/clustering.hpp"
#include "wsn/metrics.hpp"
#include "wsn/model.hpp"
#include "wsn/radio.hpp"

namespace wsn {

enum class Protocol { Deec, Sep, Hdeec, Mhdeec };

std::string to_string(Protocol protocol);
std::optional<Protocol> protocol_from_string(std::string_view name);

/// Per-round role assignment. beta_ids and chain stay empty for the
/// cluster-only protocols.
struct RoundTopology {
  std::size_t round = 0;
  std::vector<NodeId> beta_ids;                // ascending
  ClusterAssignment cluster;
  std::map<NodeId, NodeId> ch_relay_target;    // hybrid: cluster head -> nearest beta
  std::optional<ChainTopology> chain;
};

struct EnergyBreakdown {
  double member_tx = 0.0;
  double ch_rx = 0.0;
  double ch_agg = 0.0;
  double ch_tx = 0.0;
  double beta_rx = 0.0;
  double beta_agg = 0.0;
  double beta_tx = 0.0;

  double total() const {
    return member_tx + ch_rx + ch_agg + ch_tx + beta_rx + beta_agg + beta_tx;
  }
};

struct RoundOutcome {
  double energy_spent = 0.0;  // equals breakdown.total()
  std::size_t packets_to_bs = 0;  // one per originating cluster head delivered
  std::vector<NodeId> deaths;     // applied at round end
  EnergyBreakdown breakdown;
};

/// Hook for tracing a run. on_topology fires after role assignment and chain
/// construction but before any energy is charged; on_round_end fires after
/// deaths are applied.
class RoundObserver {
 public:
  virtual ~RoundObserver() = default;
  virtual void on_topology(const Network&, const RoundTopology&) {}
  virtual void on_round_end(const Network&, const RoundTopology&, const RoundOutcome&) {}
};

/// The max(1, floor(beta_fraction * alive)) alive nodes with the highest
/// residual energy, ties to lower id; returned ascending. Recomputed every
/// round by the hybrid engines.
std::vector<NodeId> select_beta_nodes(const Network& network);

/// One run of one protocol over one network. Round indices are 1-based.
class Simulation {
 public:
  Simulation(Network network, RadioParams radio, Protocol protocol);

  RoundOutcome run_round_deec(RoundObserver* observer = nullptr);
  RoundOutcome run_round_sep(RoundObserver* observer = nullptr);
  RoundOutcome run_round_hdeec(RoundObserver* observer = nullptr);
  RoundOutcome run_round_mhdeec(RoundObserver* observer = nullptr);

  /// One round of the protocol chosen at construction.
  RoundOutcome step(RoundObserver* observer = nullptr);

  /// Runs until max_rounds or until every node is dead; one record per round.
  MetricsSeries run(std::size_t max_rounds, RoundObserver* observer = nullptr);

  const Network& network() const { return net_; }
  Network& network() { return net_; }
  const RadioParams& radio() const { return radio_; }
  Protocol protocol() const { return protocol_; }
  double total_energy() const { return total_energy_; }
  const EnergyEstimate& estimate() const { return estimate_; }
  const RoundTopology& last_topology() const { return last_topology_; }

 private:
  RoundOutcome round_core(bool hybrid, bool multi_edge, bool sep_election,
                          RoundObserver* observer);
  std::vector<ChCandidate> deec_candidates(const std::vector<NodeId>& ids,
                                           std::size_t round) const;
  std::vector<ChCandidate> sep_candidates(const std::vector<NodeId>& ids) const;

  Network net_;
  RadioParams radio_;
  Protocol protocol_;
  double total_energy_ = 0.0;
  EnergyEstimate estimate_;
  RoundTopology last_topology_;
};

MetricsSeries run_simulation(Network network, Protocol protocol, const RadioParams& radio,
                             std::size_t max_rounds, RoundObserver* observer = nullptr);

}  // namespace wsn
