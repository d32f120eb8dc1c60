#include "wsn/chain.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wsn {

namespace {

NodeId farthest_from(const std::vector<Node>& nodes, const std::vector<NodeId>& ids,
                     Point bs) {
  NodeId best = ids.front();
  double best_dist = distance(nodes.at(best).position, bs);
  for (NodeId id : ids) {
    const double d = distance(nodes.at(id).position, bs);
    if (d > best_dist) {  // strict: ties keep the lower id (ids ascend)
      best = id;
      best_dist = d;
    }
  }
  return best;
}

std::vector<NodeId> sorted_ids(const std::vector<NodeId>& beta_ids) {
  std::vector<NodeId> ids = beta_ids;
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

ChainTopology build_greedy_chain(const std::vector<Node>& nodes,
                                 const std::vector<NodeId>& beta_ids, Point bs) {
  if (beta_ids.empty()) throw TopologyError("build_greedy_chain: empty beta set");
  const std::vector<NodeId> ids = sorted_ids(beta_ids);

  ChainTopology chain;
  std::set<NodeId> remaining(ids.begin(), ids.end());

  NodeId current = farthest_from(nodes, ids, bs);
  chain.member_ids.push_back(current);
  remaining.erase(current);

  while (!remaining.empty()) {
    NodeId best = *remaining.begin();
    double best_dist = distance(nodes.at(current).position, nodes.at(best).position);
    for (NodeId id : remaining) {
      const double d = distance(nodes.at(current).position, nodes.at(id).position);
      if (d < best_dist) {
        best = id;
        best_dist = d;
      }
    }
    chain.edges.emplace_back(current, best);
    chain.member_ids.push_back(best);
    remaining.erase(best);
    current = best;
  }
  return chain;
}

ChainTopology build_multi_edge_chain(const std::vector<Node>& nodes,
                                     const std::vector<NodeId>& beta_ids, Point bs) {
  if (beta_ids.empty()) throw TopologyError("build_multi_edge_chain: empty beta set");
  std::vector<NodeId> order = sorted_ids(beta_ids);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return distance(nodes.at(a).position, bs) > distance(nodes.at(b).position, bs);
  });

  ChainTopology chain;
  chain.member_ids.push_back(order.front());
  for (std::size_t i = 1; i < order.size(); ++i) {
    const NodeId incoming = order[i];
    NodeId best = chain.member_ids.front();
    double best_dist = distance(nodes.at(incoming).position, nodes.at(best).position);
    for (NodeId processed : chain.member_ids) {
      const double d = distance(nodes.at(incoming).position, nodes.at(processed).position);
      if (d < best_dist || (d == best_dist && processed < best)) {
        best = processed;
        best_dist = d;
      }
    }
    chain.edges.emplace_back(incoming, best);
    chain.member_ids.push_back(incoming);
  }
  return chain;
}

NodeId select_leader_nearest(const std::vector<Node>& nodes,
                             const std::vector<NodeId>& beta_ids, Point bs) {
  if (beta_ids.empty()) throw TopologyError("select_leader_nearest: empty beta set");
  const std::vector<NodeId> ids = sorted_ids(beta_ids);
  NodeId best = ids.front();
  double best_dist = distance(nodes.at(best).position, bs);
  for (NodeId id : ids) {
    const double d = distance(nodes.at(id).position, bs);
    if (d < best_dist) {
      best = id;
      best_dist = d;
    }
  }
  return best;
}

std::vector<LeaderWeight> leader_weights(const std::vector<Node>& nodes,
                                         const std::vector<NodeId>& beta_ids, Point bs,
                                         double w1, double w2) {
  if (beta_ids.empty()) throw TopologyError("leader_weights: empty beta set");
  const std::vector<NodeId> ids = sorted_ids(beta_ids);

  double avg_dist = 0.0;
  for (NodeId id : ids) avg_dist += distance(nodes.at(id).position, bs);
  avg_dist /= static_cast<double>(ids.size());

  std::vector<LeaderWeight> weights;
  weights.reserve(ids.size());
  for (NodeId id : ids) {
    const Node& node = nodes.at(id);
    if (!(node.residual_energy > 0.0))
      throw std::logic_error("leader_weights: beta node " + std::to_string(id) +
                             " has no residual energy");
    LeaderWeight w;
    w.id = id;
    w.dist_to_bs = distance(node.position, bs);
    w.avg_dist = avg_dist;
    const double ratio = w.dist_to_bs / avg_dist;
    w.distance_factor = ratio * ratio * ratio * ratio;
    w.energy_ratio = node.initial_energy / node.residual_energy;
    w.weight = w1 * w.energy_ratio + w2 * w.distance_factor;
    weights.push_back(w);
  }
  return weights;
}

NodeId select_leader_weighted(const std::vector<Node>& nodes,
                              const std::vector<NodeId>& beta_ids, Point bs, double w1,
                              double w2) {
  const std::vector<LeaderWeight> weights = leader_weights(nodes, beta_ids, bs, w1, w2);
  const LeaderWeight* best = &weights.front();
  for (const LeaderWeight& w : weights)
    if (w.weight < best->weight) best = &w;  // ids ascend: ties keep the lower id
  return best->id;
}

std::map<NodeId, NodeId> route_to_leader(const ChainTopology& topology) {
  if (topology.member_ids.empty()) throw TopologyError("route_to_leader: empty chain");
  std::map<NodeId, std::vector<NodeId>> adjacency;
  for (NodeId id : topology.member_ids) adjacency[id];
  for (const auto& [u, v] : topology.edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  if (adjacency.find(topology.leader_id) == adjacency.end())
    throw TopologyError("route_to_leader: leader is not a chain member");

  std::map<NodeId, NodeId> next_hop;
  next_hop[topology.leader_id] = kBsSentinel;
  std::deque<NodeId> frontier{topology.leader_id};
  while (!frontier.empty()) {
    const NodeId current = frontier.front();
    frontier.pop_front();
    for (NodeId neighbor : adjacency.at(current)) {
      if (next_hop.find(neighbor) != next_hop.end()) continue;
      next_hop[neighbor] = current;
      frontier.push_back(neighbor);
    }
  }
  if (next_hop.size() != adjacency.size())
    throw TopologyError("route_to_leader: chain is disconnected");
  return next_hop;
}

}  // namespace wsn
