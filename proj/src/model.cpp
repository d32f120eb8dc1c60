#include "wsn/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wsn {

void NetworkConfig::validate() const {
  if (node_count < 2) throw ConfigError("nodes must be >= 2");
  if (!(field_side > 0.0)) throw ConfigError("field must be > 0");
  if (!(p_opt > 0.0 && p_opt < 1.0)) throw ConfigError("p_opt must be in (0,1)");
  if (packet_bits == 0) throw ConfigError("packet_bits must be > 0");
  if (!(base_energy > 0.0)) throw ConfigError("e0 must be > 0");
  if (!(beta_fraction > 0.0 && beta_fraction < 1.0))
    throw ConfigError("beta_fraction must be in (0,1)");
  if (!(weight_w1 >= 0.0 && weight_w1 <= 1.0 && weight_w2 >= 0.0 && weight_w2 <= 1.0))
    throw ConfigError("w1 and w2 must be in [0,1]");
  if (std::abs(weight_w1 + weight_w2 - 1.0) > 1e-9)
    throw ConfigError("w1 + w2 must equal 1");
  if (heterogeneity.mode == HeterogeneityMode::UniformRandom) {
    if (heterogeneity.a_max < 0.0) throw ConfigError("a_max must be >= 0");
  }
  if (!(sep.advanced_fraction >= 0.0 && sep.advanced_fraction <= 1.0))
    throw ConfigError("sep_m must be in [0,1]");
  if (sep.advanced_factor < 0.0) throw ConfigError("sep_a must be >= 0");
}

std::size_t Network::alive_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.alive; }));
}

Network init_network(const NetworkConfig& config, std::uint64_t seed) {
  config.validate();

  // Substreams: 0 = positions (optionally pinned by layout_seed),
  // 1 = initial energies, 2 = election draws during simulation.
  Rng position_rng(derive_stream_seed(config.layout_seed.value_or(seed), 0));
  Rng energy_rng(derive_stream_seed(seed, 1));

  Network net{config, {}, Rng(derive_stream_seed(seed, 2)), 0};
  net.nodes.resize(config.node_count);

  const double side = config.field_side;
  for (NodeId i = 0; i < config.node_count; ++i) {
    Node& node = net.nodes[i];
    node.id = i;
    node.position.x = position_rng.uniform(0.0, side);
    node.position.y = position_rng.uniform(0.0, side);
  }

  switch (config.heterogeneity.mode) {
    case HeterogeneityMode::UniformRandom:
      for (Node& node : net.nodes)
        node.extra_fraction = energy_rng.uniform(0.0, config.heterogeneity.a_max);
      break;
    case HeterogeneityMode::TwoLevel: {
      // Exactly floor(m*N) advanced nodes, picked by a partial shuffle.
      std::vector<NodeId> ids(config.node_count);
      std::iota(ids.begin(), ids.end(), NodeId{0});
      const auto advanced = static_cast<std::size_t>(std::floor(
          config.sep.advanced_fraction * static_cast<double>(config.node_count) + 1e-9));
      for (std::size_t i = 0; i < advanced && i < ids.size(); ++i) {
        const std::size_t j = i + energy_rng.uniform_index(ids.size() - i);
        std::swap(ids[i], ids[j]);
      }
      for (std::size_t i = 0; i < advanced && i < ids.size(); ++i)
        net.nodes[ids[i]].extra_fraction = config.sep.advanced_factor;
      break;
    }
  }

  for (Node& node : net.nodes) {
    node.initial_energy = config.base_energy * (1.0 + node.extra_fraction);
    node.residual_energy = node.initial_energy;
  }
  return net;
}

double total_initial_energy(const Network& network) {
  double total = 0.0;
  for (const Node& node : network.nodes) total += node.initial_energy;
  return total;
}

}  // namespace wsn
