#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>

#include "doctest.h"
#include "support.hpp"
#include "wsn/protocols.hpp"

using namespace wsn;
using wsn::test::make_node;

namespace {

NetworkConfig small_config(std::size_t nodes) {
  NetworkConfig cfg;
  cfg.node_count = nodes;
  return cfg;
}

Network hand_network(NetworkConfig cfg, std::vector<Node> nodes) {
  return Network{cfg, std::move(nodes), Rng(1), 0};
}

}  // namespace

TEST_CASE("beta selection takes the energy top slice, ties by id") {
  NetworkConfig cfg = small_config(100);
  Network net = init_network(cfg, 3);
  CHECK(select_beta_nodes(net).size() == 10);

  for (std::size_t i = 5; i < 100; ++i) net.nodes[i].alive = false;
  CHECK(select_beta_nodes(net).size() == 1);  // floor(0.5) clamped to 1

  // sort oracle on random instances
  Rng rng(11);
  for (int instance = 0; instance < 100; ++instance) {
    Network random_net = init_network(cfg, 100 + instance);
    for (Node& node : random_net.nodes) {
      node.residual_energy = rng.uniform(0.0, 1.0);
      if (rng.uniform01() < 0.2) node.alive = false;
    }
    if (random_net.alive_count() == 0) random_net.nodes[0].alive = true;
    const std::vector<NodeId> beta = select_beta_nodes(random_net);

    std::vector<NodeId> alive;
    for (const Node& n : random_net.nodes)
      if (n.alive) alive.push_back(n.id);
    std::sort(alive.begin(), alive.end(), [&](NodeId a, NodeId b) {
      const Node& na = random_net.nodes[a];
      const Node& nb = random_net.nodes[b];
      if (na.residual_energy != nb.residual_energy)
        return na.residual_energy > nb.residual_energy;
      return a < b;
    });
    const std::size_t k = std::max<std::size_t>(
        1, static_cast<std::size_t>(0.1 * static_cast<double>(alive.size())));
    std::vector<NodeId> expected(alive.begin(), alive.begin() + k);
    std::sort(expected.begin(), expected.end());
    CHECK(beta == expected);
  }
}

TEST_CASE("equal energies break beta ties toward lower ids") {
  NetworkConfig cfg = small_config(20);
  cfg.heterogeneity.a_max = 0.0;
  Network net = init_network(cfg, 1);
  const std::vector<NodeId> beta = select_beta_nodes(net);
  CHECK(beta == std::vector<NodeId>{0, 1});
}

TEST_CASE("a round with every candidate window-blocked moves no energy") {
  NetworkConfig cfg = small_config(10);
  cfg.heterogeneity.a_max = 0.0;
  for (Protocol protocol : {Protocol::Deec, Protocol::Sep, Protocol::Hdeec, Protocol::Mhdeec}) {
    Network net = init_network(cfg, 2);
    for (Node& node : net.nodes) node.rounds_since_ch = 0;  // all just served
    Simulation sim(std::move(net), RadioParams{}, protocol);
    const RoundOutcome out = sim.step();
    CHECK(out.energy_spent == 0.0);
    CHECK(out.packets_to_bs == 0);
    CHECK(out.deaths.empty());
    CHECK(sim.last_topology().cluster.ch_ids.empty());
    if (protocol == Protocol::Hdeec || protocol == Protocol::Mhdeec) {
      CHECK(!sim.last_topology().beta_ids.empty());  // backbone exists, idles
      CHECK(sim.last_topology().chain.has_value());
    }
  }
}

TEST_CASE("a lone cluster head pays aggregation plus the sink hop") {
  NetworkConfig cfg = small_config(2);
  cfg.heterogeneity.a_max = 0.0;
  std::vector<Node> nodes = {make_node(0, 30, 50, 40.0), make_node(1, 10, 10, 0.5)};
  nodes[1].alive = false;
  nodes[1].residual_energy = 0.0;
  Network net = hand_network(cfg, std::move(nodes));
  Simulation sim(std::move(net), RadioParams{}, Protocol::Deec);

  const RoundOutcome out = sim.run_round_deec();
  // node 0 is 100 m from the sink and rich enough that p clamps to 1
  CHECK(out.packets_to_bs == 1);
  const RadioParams radio;
  const double expected = aggregation_energy(4000, 1, radio) + tx_energy(4000, 100.0, radio);
  CHECK(out.energy_spent == doctest::Approx(expected).epsilon(1e-12));
  CHECK(out.breakdown.ch_agg == doctest::Approx(aggregation_energy(4000, 1, radio)));
  CHECK(out.breakdown.ch_tx == doctest::Approx(tx_energy(4000, 100.0, radio)));
  CHECK(out.breakdown.member_tx == 0.0);
  CHECK(out.breakdown.ch_rx == 0.0);
}

TEST_CASE("hybrid minimal relay: one cluster head, one beta node") {
  NetworkConfig cfg = small_config(2);
  cfg.heterogeneity.a_max = 0.0;
  // node 1 holds more energy, so it becomes the beta node; node 0 the CH
  std::vector<Node> nodes = {make_node(0, 30, 40, 30.0), make_node(1, 30, 60, 40.0)};
  Network net = hand_network(cfg, std::move(nodes));
  Simulation sim(std::move(net), RadioParams{}, Protocol::Hdeec);

  // Rounds without an elected CH are free, so energies and roles are pristine
  // when the escalating threshold finally elects node 0 (within one epoch).
  RoundOutcome out;
  for (int tries = 0; tries < 50 && out.packets_to_bs == 0; ++tries)
    out = sim.run_round_hdeec();
  CHECK(sim.last_topology().beta_ids == std::vector<NodeId>{1});
  REQUIRE(sim.last_topology().cluster.ch_ids == std::vector<NodeId>{0});
  CHECK(out.packets_to_bs == 1);

  const RadioParams radio;
  const double expected = aggregation_energy(4000, 1, radio)   // CH aggregates itself
                          + tx_energy(4000, 20.0, radio)       // CH -> beta
                          + rx_energy(4000, radio)             // beta receives
                          + aggregation_energy(4000, 1, radio) // beta aggregates
                          + tx_energy(4000, 90.0, radio);      // leader -> BS
  CHECK(out.energy_spent == doctest::Approx(expected).epsilon(1e-12));
  CHECK(out.breakdown.beta_tx == doctest::Approx(tx_energy(4000, 90.0, radio)));
}

TEST_CASE("per-round conservation holds for every protocol") {
  for (Protocol protocol : {Protocol::Deec, Protocol::Sep, Protocol::Hdeec, Protocol::Mhdeec}) {
    NetworkConfig cfg;  // Table 1
    Network net = init_network(
        cfg, protocol == Protocol::Sep ? 8 : 9);
    if (protocol == Protocol::Sep) net.config.heterogeneity.mode = HeterogeneityMode::TwoLevel;
    Simulation sim(init_network(net.config, 5), RadioParams{}, protocol);
    const double total = sim.total_energy();
    double cumulative = 0.0;
    for (int round = 0; round < 500; ++round) {
      const RoundOutcome out = sim.step();
      cumulative += out.energy_spent;
      double residual = 0.0;
      for (const Node& n : sim.network().nodes) residual += n.residual_energy;
      REQUIRE(std::abs(total - (residual + cumulative)) <= 1e-9 * total);
      // breakdown adds up exactly
      REQUIRE(out.energy_spent == out.breakdown.total());
    }
  }
}

TEST_CASE("sep advanced nodes outlive normal nodes on average") {
  struct DeathLog : RoundObserver {
    std::map<NodeId, std::size_t> death_round;
    void on_round_end(const Network&, const RoundTopology& t, const RoundOutcome& o) override {
      for (NodeId id : o.deaths) death_round[id] = t.round;
    }
  };

  double advanced_sum = 0.0, normal_sum = 0.0;
  std::size_t advanced_count = 0, normal_count = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    NetworkConfig cfg;
    cfg.heterogeneity.mode = HeterogeneityMode::TwoLevel;
    Network net = init_network(cfg, seed);
    DeathLog log;
    Simulation sim(std::move(net), RadioParams{}, Protocol::Sep);
    sim.run(60000, &log);
    for (const Node& node : sim.network().nodes) {
      const auto it = log.death_round.find(node.id);
      if (it == log.death_round.end()) continue;
      if (node.extra_fraction > 0.0) {
        advanced_sum += static_cast<double>(it->second);
        ++advanced_count;
      } else {
        normal_sum += static_cast<double>(it->second);
        ++normal_count;
      }
    }
  }
  REQUIRE(advanced_count > 0);
  REQUIRE(normal_count > 0);
  CHECK(advanced_sum / advanced_count > normal_sum / normal_count);
}

TEST_CASE("sep weights degenerate as the parameters say") {
  NetworkConfig cfg;
  cfg.sep.advanced_factor = 0.0;
  Network net = init_network(cfg, 1);
  // a = 0: p_adv == p_nrm == p_opt; indirectly checked through one round
  Simulation sim(std::move(net), RadioParams{}, Protocol::Sep);
  CHECK_NOTHROW(sim.run_round_sep());
}

TEST_CASE("hybrid cluster heads always relay to their nearest beta node") {
  struct RelayCheck : RoundObserver {
    void on_topology(const Network& net, const RoundTopology& topo) override {
      for (const auto& [ch, target] : topo.ch_relay_target) {
        const double chosen = distance(net.nodes[ch].position, net.nodes[target].position);
        for (NodeId beta : topo.beta_ids) {
          const double alt = distance(net.nodes[ch].position, net.nodes[beta].position);
          REQUIRE(chosen <= alt);
        }
      }
    }
  };
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    RelayCheck check;
    NetworkConfig cfg;
    run_simulation(init_network(cfg, seed), Protocol::Hdeec, RadioParams{}, 4000, &check);
  }
}

TEST_CASE("the weighted leader matches the brute-force argmin every round") {
  struct LeaderCheck : RoundObserver {
    void on_topology(const Network& net, const RoundTopology& topo) override {
      if (!topo.chain) return;
      double avg = 0.0;
      for (NodeId id : topo.beta_ids)
        avg += distance(net.nodes[id].position, net.config.bs_position);
      avg /= static_cast<double>(topo.beta_ids.size());
      NodeId best = topo.beta_ids.front();
      double best_weight = 1e300;
      for (NodeId id : topo.beta_ids) {
        const Node& n = net.nodes[id];
        const double d = distance(n.position, net.config.bs_position);
        const double ratio = d / avg;
        const double w = 0.5 * (n.initial_energy / n.residual_energy) +
                         0.5 * ratio * ratio * ratio * ratio;
        if (w < best_weight) {
          best_weight = w;
          best = id;
        }
      }
      REQUIRE(topo.chain->leader_id == best);
    }
  };
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    LeaderCheck check;
    NetworkConfig cfg;
    run_simulation(init_network(cfg, seed), Protocol::Mhdeec, RadioParams{}, 4000, &check);
  }
}

TEST_CASE("with one beta node the two hybrid protocols coincide") {
  NetworkConfig cfg = small_config(10);  // 10 alive -> exactly 1 beta node
  const MetricsSeries h = run_simulation(init_network(cfg, 6), Protocol::Hdeec,
                                         RadioParams{}, 3000);
  const MetricsSeries mh = run_simulation(init_network(cfg, 6), Protocol::Mhdeec,
                                          RadioParams{}, 3000);
  REQUIRE(h.size() == mh.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    CHECK(h[i].alive == mh[i].alive);
    CHECK(h[i].cluster_heads == mh[i].cluster_heads);
    CHECK(h[i].packets_bs_round == mh[i].packets_bs_round);
    CHECK(h[i].energy_residual_total == mh[i].energy_residual_total);
    CHECK(h[i].energy_spent_round == mh[i].energy_spent_round);
  }
}

TEST_CASE("tree routing reaches the leader within the backbone size") {
  struct HopCheck : RoundObserver {
    void on_topology(const Network&, const RoundTopology& topo) override {
      if (!topo.chain) return;
      for (NodeId start : topo.chain->member_ids) {
        NodeId v = start;
        std::size_t hops = 0;
        while (v != topo.chain->leader_id) {
          v = topo.chain->next_hop.at(v);
          ++hops;
          REQUIRE(hops < topo.chain->member_ids.size());
        }
      }
    }
  };
  HopCheck check;
  NetworkConfig cfg;
  run_simulation(init_network(cfg, 4), Protocol::Mhdeec, RadioParams{}, 2000, &check);
}

TEST_CASE("roles stay disjoint and dead nodes stay out of topologies") {
  struct RoleCheck : RoundObserver {
    void on_topology(const Network& net, const RoundTopology& topo) override {
      for (NodeId beta : topo.beta_ids) {
        REQUIRE(net.nodes[beta].alive);
        REQUIRE(!std::binary_search(topo.cluster.ch_ids.begin(),
                                    topo.cluster.ch_ids.end(), beta));
      }
      for (NodeId ch : topo.cluster.ch_ids) REQUIRE(net.nodes[ch].alive);
      for (const auto& [member, ch] : topo.cluster.membership) {
        REQUIRE(net.nodes[member].alive);
        REQUIRE(net.nodes[ch].alive);
      }
    }
  };
  for (Protocol protocol : {Protocol::Hdeec, Protocol::Mhdeec}) {
    RoleCheck check;
    NetworkConfig cfg;
    run_simulation(init_network(cfg, 12), protocol, RadioParams{}, 4000, &check);
  }
}

TEST_CASE("run halts on a dead network and respects max_rounds") {
  NetworkConfig cfg = small_config(4);
  cfg.base_energy = 0.002;  // drains within a few dozen rounds
  cfg.heterogeneity.a_max = 0.0;
  const MetricsSeries series = run_simulation(init_network(cfg, 2), Protocol::Deec,
                                              RadioParams{}, 100000);
  REQUIRE(!series.empty());
  CHECK(series.back().alive == 0);
  CHECK(series.size() < 100000);

  const MetricsSeries empty = run_simulation(init_network(cfg, 2), Protocol::Deec,
                                             RadioParams{}, 0);
  CHECK(empty.empty());
}

TEST_CASE("alive counts fall and packet counts rise monotonically") {
  NetworkConfig cfg;
  for (Protocol protocol : {Protocol::Deec, Protocol::Sep, Protocol::Hdeec, Protocol::Mhdeec}) {
    const MetricsSeries series =
        run_simulation(init_network(cfg, 13), protocol, RadioParams{}, 3000);
    for (std::size_t i = 1; i < series.size(); ++i) {
      CHECK(series[i].alive <= series[i - 1].alive);
      CHECK(series[i].packets_bs_cum >= series[i - 1].packets_bs_cum);
      CHECK(series[i].energy_residual_total <= series[i - 1].energy_residual_total);
    }
  }
}

TEST_CASE("identical seeds give identical runs") {
  NetworkConfig cfg;
  for (Protocol protocol : {Protocol::Deec, Protocol::Mhdeec}) {
    const MetricsSeries a = run_simulation(init_network(cfg, 77), protocol, RadioParams{}, 1500);
    const MetricsSeries b = run_simulation(init_network(cfg, 77), protocol, RadioParams{}, 1500);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].energy_residual_total == b[i].energy_residual_total);
      CHECK(a[i].packets_bs_cum == b[i].packets_bs_cum);
    }
  }
}
