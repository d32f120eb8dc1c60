#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wsn/geometry.hpp"
#include "wsn/rng.hpp"

namespace wsn {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class HeterogeneityMode { UniformRandom, TwoLevel };

/// SEP-style two-level parameters: a fraction m of "advanced" nodes carries
/// a times extra initial energy. Also used as the election weighting of the
/// SEP protocol itself.
struct SepParams {
  double advanced_fraction = 0.1;  // m
  double advanced_factor = 1.0;    // a
};

struct HeterogeneityModel {
  HeterogeneityMode mode = HeterogeneityMode::UniformRandom;
  double a_max = 1.0;  // uniform-random mode: a_i ~ Uniform[0, a_max]
};

struct NetworkConfig {
  std::size_t node_count = 100;
  double field_side = 100.0;       // meters; nodes live in [0,M] x [0,M]
  Point bs_position{30.0, 150.0};  // base station, typically outside the field
  double p_opt = 0.1;              // reference cluster-head probability
  std::size_t packet_bits = 4000;
  double base_energy = 0.5;        // E0, joules
  double beta_fraction = 0.10;     // share of alive nodes forming the relay backbone
  std::size_t max_rounds = 4000;
  HeterogeneityModel heterogeneity;
  SepParams sep;
  double weight_w1 = 0.5;  // leader weight: energy term
  double weight_w2 = 0.5;  // leader weight: distance term
  // When set, node positions come from this seed instead of the run seed,
  // so a batch can re-randomize energies while keeping one fixed layout.
  std::optional<std::uint64_t> layout_seed;

  /// Throws ConfigError naming the violated constraint.
  void validate() const;
};

enum class Role { None, Normal, ClusterHead, Beta, BetaLeader };

using NodeId = std::size_t;

// rounds_since_ch for a node that never served; large enough to pass any
// election window, small enough to keep incrementing safely.
constexpr std::size_t kNeverServedCh = std::size_t{1} << 30;

struct Node {
  NodeId id = 0;
  Point position{};
  double initial_energy = 0.0;
  double residual_energy = 0.0;
  double extra_fraction = 0.0;  // a_i: fractional surplus over base energy
  bool alive = true;
  Role role = Role::Normal;
  std::size_t rounds_since_ch = kNeverServedCh;
};

struct Network {
  NetworkConfig config;
  std::vector<Node> nodes;
  Rng rng;  // election stream; positions/energies use separate derived streams
  std::size_t round_index = 0;

  std::size_t alive_count() const;
};

/// Deploys node_count nodes i.i.d. uniform over the field and assigns initial
/// energies per the heterogeneity model. Identical (config, seed) pairs yield
/// bit-identical networks.
Network init_network(const NetworkConfig& config, std::uint64_t seed);

/// Sum of initial energies; constant for the life of a run.
double total_initial_energy(const Network& network);

}  // namespace wsn
