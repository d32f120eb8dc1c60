#include "wsn/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wsn {

double estimate_round_budget(const Network& network, const RadioParams& radio) {
  const NetworkConfig& cfg = network.config;
  const auto n = static_cast<double>(cfg.node_count);
  const double k = cfg.p_opt * n;
  const double d_ch = cfg.field_side / std::sqrt(2.0 * std::numbers::pi * k);

  double d_bs = 0.0;
  for (const Node& node : network.nodes) d_bs += distance(node.position, cfg.bs_position);
  d_bs /= n;

  const double per_bit = 2.0 * n * radio.elec_per_bit + n * radio.agg_per_bit_signal +
                         k * radio.mp_amp * d_bs * d_bs * d_bs * d_bs +
                         n * radio.fs_amp * d_ch * d_ch;
  return static_cast<double>(cfg.packet_bits) * per_bit;
}

double average_energy(double round, double total_energy, std::size_t node_count,
                      double lifetime_estimate) {
  if (!(lifetime_estimate > 0.0))
    throw std::invalid_argument("average_energy: lifetime estimate must be > 0");
  const double avg =
      total_energy / static_cast<double>(node_count) * (1.0 - round / lifetime_estimate);
  return std::max(0.0, avg);
}

double ch_probability(const Node& node, double avg_energy, std::size_t population,
                      double extra_sum, double p_opt) {
  if (!(avg_energy > 0.0))
    throw std::invalid_argument("ch_probability: average energy must be > 0");
  if (!node.alive) throw std::logic_error("ch_probability: dead candidate");
  // Grouped so the heterogeneity factor cancels exactly when all a_i are
  // equal, and so scaling every energy by the same power of two is a no-op.
  const auto n = static_cast<double>(population);
  const double factor = n * (1.0 + node.extra_fraction) / (n + extra_sum);
  const double p = p_opt * factor * (node.residual_energy / avg_energy);
  return std::clamp(p, 0.0, 1.0);
}

std::vector<NodeId> elect_cluster_heads(std::vector<Node>& nodes,
                                        std::span<const ChCandidate> candidates,
                                        std::size_t round, Rng& rng) {
  std::vector<NodeId> elected;
  for (const ChCandidate& candidate : candidates) {
    Node& node = nodes.at(candidate.id);
    if (!node.alive) throw std::logic_error("elect_cluster_heads: dead candidate");
    const double p = std::clamp(candidate.probability, 0.0, 1.0);
    if (p <= 0.0) continue;
    const auto epoch =
        static_cast<std::size_t>(std::max<long long>(1, std::llround(1.0 / p)));
    // Eligible only if the node has not served since its current epoch began;
    // the escalating threshold then hands every node one term per epoch.
    const std::size_t phase = round % epoch;
    if (node.rounds_since_ch <= phase) continue;  // served within this epoch
    const double denom = 1.0 - p * static_cast<double>(phase);
    const double threshold = denom <= 0.0 ? 1.0 : std::min(1.0, p / denom);
    if (rng.uniform01() < threshold) {
      node.rounds_since_ch = 0;
      elected.push_back(node.id);
    }
  }
  return elected;
}

ClusterAssignment assign_clusters(const std::vector<Node>& nodes,
                                  const std::vector<NodeId>& ch_ids) {
  ClusterAssignment assignment;
  assignment.ch_ids = ch_ids;
  std::sort(assignment.ch_ids.begin(), assignment.ch_ids.end());
  for (NodeId ch : assignment.ch_ids) assignment.member_count[ch] = 0;
  if (assignment.ch_ids.empty()) return assignment;

  for (const Node& node : nodes) {
    if (!node.alive) continue;
    if (node.role == Role::Beta || node.role == Role::BetaLeader) continue;
    if (std::binary_search(assignment.ch_ids.begin(), assignment.ch_ids.end(), node.id))
      continue;
    NodeId best = assignment.ch_ids.front();
    double best_dist = distance(node.position, nodes.at(best).position);
    for (NodeId ch : assignment.ch_ids) {
      const double d = distance(node.position, nodes.at(ch).position);
      if (d < best_dist) {  // strict: ties keep the lower id
        best = ch;
        best_dist = d;
      }
    }
    assignment.membership[node.id] = best;
    ++assignment.member_count[best];
  }
  return assignment;
}

}  // namespace wsn
