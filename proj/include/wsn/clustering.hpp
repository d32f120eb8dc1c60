#pragma once

#include <map>
#include <span>
#include <vector>

#include "wsn/model.hpp"
#include "wsn/radio.hpp"

namespace wsn {

/// Run-level energy forecast: the estimated network-wide drain per round and
/// the round count at which the average-energy estimate reaches zero.
struct EnergyEstimate {
  double round_budget = 0.0;       // E_round, joules per round
  double lifetime_estimate = 0.0;  // R = E_total / E_round, rounds
};

struct ClusterAssignment {
  std::vector<NodeId> ch_ids;                  // ascending
  std::map<NodeId, NodeId> membership;         // member -> cluster head
  std::map<NodeId, std::size_t> member_count;  // cluster head -> member count
};

/// Expected energy drained by one round of cluster traffic:
///   L * (2*N*E_elec + N*E_DA + k*eps_mp*d_bs^4 + N*eps_fs*d_ch^2)
/// with k = p_opt*N clusters, d_ch = M/sqrt(2*pi*k) and d_bs the mean
/// node-to-sink distance of this deployment. Constant across a run.
double estimate_round_budget(const Network& network, const RadioParams& radio);

/// Average-energy estimate for a round: (E_total/N) * (1 - round/lifetime),
/// clamped below at zero.
double average_energy(double round, double total_energy, std::size_t node_count,
                      double lifetime_estimate);

/// Per-node cluster-head probability, weighted by the node's energy surplus
/// and its residual-to-average energy ratio; clamped to [0,1].
/// population/extra_sum describe the electing population.
double ch_probability(const Node& node, double avg_energy, std::size_t population,
                      double extra_sum, double p_opt);

struct ChCandidate {
  NodeId id = 0;
  double probability = 0.0;  // p_i for this round
};

/// Rotating-epoch threshold election. A candidate's epoch is round(1/p_i)
/// rounds long, aligned to the global round index; a candidate that has not
/// served as CH since its current epoch began draws u ~ U[0,1) and is elected
/// iff u < p_i / (1 - p_i * (round mod round(1/p_i))), which escalates to
/// certainty at the epoch's last phase so every node serves once per epoch.
/// Elected nodes reset their window. Blocked candidates and candidates with
/// p_i <= 0 consume no draw. Returns elected ids in candidate order; an empty
/// result is allowed.
std::vector<NodeId> elect_cluster_heads(std::vector<Node>& nodes,
                                        std::span<const ChCandidate> candidates,
                                        std::size_t round, Rng& rng);

/// Joins every alive normal non-CH node to its nearest cluster head,
/// Euclidean, ties to the lower CH id. Empty ch_ids yields empty membership.
ClusterAssignment assign_clusters(const std::vector<Node>& nodes,
                                  const std::vector<NodeId>& ch_ids);

}  // namespace wsn
