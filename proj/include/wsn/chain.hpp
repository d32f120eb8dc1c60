#pragma once

#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wsn/model.hpp"

namespace wsn {

struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Next-hop target of the chain leader: the base station itself.
constexpr NodeId kBsSentinel = std::numeric_limits<NodeId>::max();

/// Relay backbone over the beta nodes. The greedy construction yields a
/// simple path (member_ids in path order); the multi-edge construction yields
/// a tree where nodes may accept several attachments.
struct ChainTopology {
  std::vector<NodeId> member_ids;  // construction order
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId leader_id = kBsSentinel;
  std::map<NodeId, NodeId> next_hop;  // toward the leader; leader -> kBsSentinel
};

struct LeaderWeight {
  NodeId id = 0;
  double dist_to_bs = 0.0;
  double avg_dist = 0.0;
  double distance_factor = 0.0;  // (dist_to_bs / avg_dist)^4
  double energy_ratio = 0.0;     // initial / residual
  double weight = 0.0;           // w1 * energy_ratio + w2 * distance_factor
};

/// Path built by starting at the beta node farthest from the sink and
/// repeatedly appending the nearest unchained beta node. Ties to lower id.
ChainTopology build_greedy_chain(const std::vector<Node>& nodes,
                                 const std::vector<NodeId>& beta_ids, Point bs);

/// Tree built by processing beta nodes farthest-from-sink first; each
/// subsequent node attaches to its nearest already-processed node, so nodes
/// may take several attachments and the result is always connected.
ChainTopology build_multi_edge_chain(const std::vector<Node>& nodes,
                                     const std::vector<NodeId>& beta_ids, Point bs);

NodeId select_leader_nearest(const std::vector<Node>& nodes,
                             const std::vector<NodeId>& beta_ids, Point bs);

/// Combined weights for leader selection; exposed for inspection and tests.
std::vector<LeaderWeight> leader_weights(const std::vector<Node>& nodes,
                                         const std::vector<NodeId>& beta_ids, Point bs,
                                         double w1, double w2);

/// Picks the beta node with the minimum combined weight of (normalized)
/// fourth-power sink distance and drained-energy ratio. Ties to lower id.
NodeId select_leader_weighted(const std::vector<Node>& nodes,
                              const std::vector<NodeId>& beta_ids, Point bs, double w1,
                              double w2);

/// Next hop toward the leader for every member; the leader maps to the base
/// station sentinel. Throws TopologyError if any member cannot reach the
/// leader over the chain edges.
std::map<NodeId, NodeId> route_to_leader(const ChainTopology& topology);

}  // namespace wsn
