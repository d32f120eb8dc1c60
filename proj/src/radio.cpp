#include "wsn/radio.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wsn {

void RadioParams::validate() const {
  if (!(elec_per_bit > 0.0)) throw ConfigError("e_elec must be > 0");
  if (!(fs_amp > 0.0)) throw ConfigError("eps_fs must be > 0");
  if (!(mp_amp > 0.0)) throw ConfigError("eps_mp must be > 0");
  if (!(distance_threshold > 0.0)) throw ConfigError("d0 must be > 0");
  if (!(agg_per_bit_signal > 0.0)) throw ConfigError("e_da must be > 0");
}

double tx_energy(std::size_t bits, double dist, const RadioParams& params) {
  if (bits == 0) throw std::invalid_argument("tx_energy: bits must be > 0");
  if (dist < 0.0) throw std::invalid_argument("tx_energy: distance must be >= 0");
  const double b = static_cast<double>(bits);
  const double electronics = b * params.elec_per_bit;
  if (dist < params.distance_threshold)
    return electronics + b * params.fs_amp * dist * dist;
  return electronics + b * params.mp_amp * dist * dist * dist * dist;
}

double rx_energy(std::size_t bits, const RadioParams& params) {
  if (bits == 0) throw std::invalid_argument("rx_energy: bits must be > 0");
  return static_cast<double>(bits) * params.elec_per_bit;
}

double aggregation_energy(std::size_t bits, std::size_t signal_count, const RadioParams& params) {
  if (bits == 0) throw std::invalid_argument("aggregation_energy: bits must be > 0");
  if (signal_count == 0)
    throw std::invalid_argument("aggregation_energy: signal_count must be >= 1");
  return static_cast<double>(bits) * static_cast<double>(signal_count) * params.agg_per_bit_signal;
}

double charge(Node& node, double cost) {
  if (!node.alive)
    throw std::logic_error("charge: node " + std::to_string(node.id) + " is dead");
  if (cost < 0.0) throw std::invalid_argument("charge: cost must be >= 0");
  const double deducted = std::min(cost, node.residual_energy);
  node.residual_energy -= deducted;
  return deducted;
}

}  // namespace wsn
