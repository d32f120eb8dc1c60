#include "wsn/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsn {

std::string to_string(Protocol protocol) {
  switch (protocol) {
    case Protocol::Deec: return "deec";
    case Protocol::Sep: return "sep";
    case Protocol::Hdeec: return "hdeec";
    case Protocol::Mhdeec: return "mhdeec";
  }
  return "unknown";
}

std::optional<Protocol> protocol_from_string(std::string_view name) {
  if (name == "deec") return Protocol::Deec;
  if (name == "sep") return Protocol::Sep;
  if (name == "hdeec") return Protocol::Hdeec;
  if (name == "mhdeec") return Protocol::Mhdeec;
  return std::nullopt;
}

std::vector<NodeId> select_beta_nodes(const Network& network) {
  std::vector<NodeId> alive;
  for (const Node& node : network.nodes)
    if (node.alive) alive.push_back(node.id);
  if (alive.empty()) throw std::logic_error("select_beta_nodes: no alive nodes");

  // floor of the real-valued product; the epsilon undoes representation
  // error in fractions like 0.29 * 100.
  const auto count = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(
             network.config.beta_fraction * static_cast<double>(alive.size()) + 1e-9)));

  std::sort(alive.begin(), alive.end(), [&](NodeId a, NodeId b) {
    const double ea = network.nodes[a].residual_energy;
    const double eb = network.nodes[b].residual_energy;
    if (ea != eb) return ea > eb;
    return a < b;
  });
  alive.resize(std::min(count, alive.size()));
  std::sort(alive.begin(), alive.end());
  return alive;
}

namespace {

void charge_to(Node& node, double cost, double& bucket) {
  bucket += charge(node, cost);
}

std::size_t lookup(const std::map<NodeId, std::size_t>& m, NodeId id) {
  const auto it = m.find(id);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

Simulation::Simulation(Network network, RadioParams radio, Protocol protocol)
    : net_(std::move(network)), radio_(radio), protocol_(protocol) {
  net_.config.validate();
  radio_.validate();
  total_energy_ = total_initial_energy(net_);
  estimate_.round_budget = estimate_round_budget(net_, radio_);
  estimate_.lifetime_estimate = total_energy_ / estimate_.round_budget;
}

std::vector<ChCandidate> Simulation::deec_candidates(const std::vector<NodeId>& ids,
                                                     std::size_t round) const {
  double avg = average_energy(static_cast<double>(round), total_energy_,
                              net_.config.node_count, estimate_.lifetime_estimate);
  if (avg <= 0.0) {
    // Past the estimated lifetime: use the true mean residual energy of the
    // alive nodes so election keeps working until the last death.
    double sum = 0.0;
    std::size_t alive = 0;
    for (const Node& node : net_.nodes) {
      if (!node.alive) continue;
      sum += node.residual_energy;
      ++alive;
    }
    avg = alive > 0 ? sum / static_cast<double>(alive) : 0.0;
  }

  double extra_sum = 0.0;
  for (NodeId id : ids) extra_sum += net_.nodes[id].extra_fraction;

  std::vector<ChCandidate> candidates;
  candidates.reserve(ids.size());
  for (NodeId id : ids) {
    const double p =
        avg > 0.0
            ? ch_probability(net_.nodes[id], avg, ids.size(), extra_sum, net_.config.p_opt)
            : 0.0;
    candidates.push_back({id, p});
  }
  return candidates;
}

std::vector<ChCandidate> Simulation::sep_candidates(const std::vector<NodeId>& ids) const {
  const double m = net_.config.sep.advanced_fraction;
  const double a = net_.config.sep.advanced_factor;
  const double p_normal = net_.config.p_opt / (1.0 + m * a);
  const double p_advanced = net_.config.p_opt * (1.0 + a) / (1.0 + m * a);

  std::vector<ChCandidate> candidates;
  candidates.reserve(ids.size());
  for (NodeId id : ids) {
    const bool advanced = net_.nodes[id].extra_fraction > 0.0;
    candidates.push_back({id, advanced ? p_advanced : p_normal});
  }
  return candidates;
}

RoundOutcome Simulation::round_core(bool hybrid, bool multi_edge, bool sep_election,
                                    RoundObserver* observer) {
  const NetworkConfig& cfg = net_.config;
  const std::size_t round = ++net_.round_index;

  RoundTopology topo;
  topo.round = round;
  RoundOutcome out;

  std::vector<NodeId> alive_ids;
  for (Node& node : net_.nodes) {
    if (!node.alive) continue;
    alive_ids.push_back(node.id);
    node.role = Role::Normal;
    if (node.rounds_since_ch < kNeverServedCh) ++node.rounds_since_ch;
  }
  if (alive_ids.empty()) {
    last_topology_ = std::move(topo);
    return out;
  }

  // Role assignment: backbone first, then cluster-head election among the rest.
  std::vector<NodeId> candidates;
  if (hybrid) {
    topo.beta_ids = select_beta_nodes(net_);
    for (NodeId id : topo.beta_ids) net_.nodes[id].role = Role::Beta;
    for (NodeId id : alive_ids)
      if (net_.nodes[id].role == Role::Normal) candidates.push_back(id);
  } else {
    candidates = alive_ids;
  }

  const std::vector<ChCandidate> probabilities =
      sep_election ? sep_candidates(candidates) : deec_candidates(candidates, round);
  std::vector<NodeId> ch_ids =
      elect_cluster_heads(net_.nodes, probabilities, round, net_.rng);
  for (NodeId id : ch_ids) net_.nodes[id].role = Role::ClusterHead;
  topo.cluster = assign_clusters(net_.nodes, ch_ids);

  if (hybrid) {
    ChainTopology chain = multi_edge
                              ? build_multi_edge_chain(net_.nodes, topo.beta_ids, cfg.bs_position)
                              : build_greedy_chain(net_.nodes, topo.beta_ids, cfg.bs_position);
    chain.leader_id = multi_edge
                          ? select_leader_weighted(net_.nodes, topo.beta_ids, cfg.bs_position,
                                                   cfg.weight_w1, cfg.weight_w2)
                          : select_leader_nearest(net_.nodes, topo.beta_ids, cfg.bs_position);
    chain.next_hop = route_to_leader(chain);
    net_.nodes[chain.leader_id].role = Role::BetaLeader;

    for (NodeId ch : topo.cluster.ch_ids) {
      NodeId best = topo.beta_ids.front();
      double best_dist = distance(net_.nodes[ch].position, net_.nodes[best].position);
      for (NodeId beta : topo.beta_ids) {
        const double d = distance(net_.nodes[ch].position, net_.nodes[beta].position);
        if (d < best_dist) {
          best = beta;
          best_dist = d;
        }
      }
      topo.ch_relay_target[ch] = best;
    }
    topo.chain = std::move(chain);
  }

  if (observer) observer->on_topology(net_, topo);

  // Data flow. Deaths only take effect at round end, so a node that clamps
  // to zero mid-round still completes its duties (paying only what it had).
  EnergyBreakdown& spent = out.breakdown;
  const std::size_t bits = cfg.packet_bits;

  for (const auto& [member, ch] : topo.cluster.membership) {
    const double d = distance(net_.nodes[member].position, net_.nodes[ch].position);
    charge_to(net_.nodes[member], tx_energy(bits, d, radio_), spent.member_tx);
    charge_to(net_.nodes[ch], rx_energy(bits, radio_), spent.ch_rx);
  }

  std::map<NodeId, std::size_t> beta_signals;  // physical packets arriving at a beta
  std::map<NodeId, std::size_t> beta_origins;  // originating CHs accumulated at a beta
  for (NodeId ch : topo.cluster.ch_ids) {
    // A cluster head folds its own reading into the aggregate.
    const std::size_t signals = topo.cluster.member_count.at(ch) + 1;
    charge_to(net_.nodes[ch], aggregation_energy(bits, signals, radio_), spent.ch_agg);
    if (hybrid) {
      const NodeId target = topo.ch_relay_target.at(ch);
      const double d = distance(net_.nodes[ch].position, net_.nodes[target].position);
      charge_to(net_.nodes[ch], tx_energy(bits, d, radio_), spent.ch_tx);
      charge_to(net_.nodes[target], rx_energy(bits, radio_), spent.beta_rx);
      ++beta_signals[target];
      ++beta_origins[target];
    } else {
      const double d = distance(net_.nodes[ch].position, cfg.bs_position);
      charge_to(net_.nodes[ch], tx_energy(bits, d, radio_), spent.ch_tx);
      ++out.packets_to_bs;
    }
  }

  if (hybrid && topo.chain) {
    const ChainTopology& chain = *topo.chain;
    // Relay children before parents: order members by hop distance from the
    // leader, deepest first.
    std::map<NodeId, std::size_t> depth;
    for (NodeId id : chain.member_ids) {
      std::size_t hops = 0;
      for (NodeId v = id; v != chain.leader_id; v = chain.next_hop.at(v)) ++hops;
      depth[id] = hops;
    }
    std::vector<NodeId> order(chain.member_ids);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      if (depth[a] != depth[b]) return depth[a] > depth[b];
      return a < b;
    });

    for (NodeId beta : order) {
      const std::size_t signals = lookup(beta_signals, beta);
      if (signals == 0) continue;  // nothing to relay; idle at zero cost
      charge_to(net_.nodes[beta], aggregation_energy(bits, signals, radio_),
                spent.beta_agg);
      if (beta == chain.leader_id) {
        const double d = distance(net_.nodes[beta].position, cfg.bs_position);
        charge_to(net_.nodes[beta], tx_energy(bits, d, radio_), spent.beta_tx);
        out.packets_to_bs += lookup(beta_origins, beta);
      } else {
        const NodeId next = chain.next_hop.at(beta);
        const double d = distance(net_.nodes[beta].position, net_.nodes[next].position);
        charge_to(net_.nodes[beta], tx_energy(bits, d, radio_), spent.beta_tx);
        charge_to(net_.nodes[next], rx_energy(bits, radio_), spent.beta_rx);
        ++beta_signals[next];
        beta_origins[next] += lookup(beta_origins, beta);
      }
    }
  }

  for (Node& node : net_.nodes) {
    if (node.alive && node.residual_energy <= 0.0) {
      node.alive = false;
      node.role = Role::None;
      out.deaths.push_back(node.id);
    }
  }

  out.energy_spent = spent.total();
  last_topology_ = std::move(topo);
  if (observer) observer->on_round_end(net_, last_topology_, out);
  return out;
}

RoundOutcome Simulation::run_round_deec(RoundObserver* observer) {
  return round_core(false, false, false, observer);
}

RoundOutcome Simulation::run_round_sep(RoundObserver* observer) {
  return round_core(false, false, true, observer);
}

RoundOutcome Simulation::run_round_hdeec(RoundObserver* observer) {
  return round_core(true, false, false, observer);
}

RoundOutcome Simulation::run_round_mhdeec(RoundObserver* observer) {
  return round_core(true, true, false, observer);
}

RoundOutcome Simulation::step(RoundObserver* observer) {
  switch (protocol_) {
    case Protocol::Deec: return run_round_deec(observer);
    case Protocol::Sep: return run_round_sep(observer);
    case Protocol::Hdeec: return run_round_hdeec(observer);
    case Protocol::Mhdeec: return run_round_mhdeec(observer);
  }
  throw std::logic_error("step: unknown protocol");
}

MetricsSeries Simulation::run(std::size_t max_rounds, RoundObserver* observer) {
  MetricsSeries series;
  std::size_t packets_cum = 0;
  for (std::size_t i = 0; i < max_rounds; ++i) {
    if (net_.alive_count() == 0) break;
    const RoundOutcome outcome = step(observer);
    packets_cum += outcome.packets_to_bs;

    double residual = 0.0;
    for (const Node& node : net_.nodes) residual += node.residual_energy;

    MetricsRecord record;
    record.round = net_.round_index;
    record.alive = net_.alive_count();
    record.cluster_heads = last_topology_.cluster.ch_ids.size();
    record.packets_bs_round = outcome.packets_to_bs;
    record.packets_bs_cum = packets_cum;
    record.energy_residual_total = residual;
    record.energy_spent_round = outcome.energy_spent;
    series.push_back(record);
  }
  return series;
}

MetricsSeries run_simulation(Network network, Protocol protocol, const RadioParams& radio,
                             std::size_t max_rounds, RoundObserver* observer) {
  Simulation sim(std::move(network), radio, protocol);
  return sim.run(max_rounds, observer);
}

}  // namespace wsn
