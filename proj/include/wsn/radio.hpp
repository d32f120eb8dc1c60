#pragma once

#include <cstddef>

#include "wsn/model.hpp"

namespace wsn {

/// First-order radio dissipation constants. Transmitting L bits over
/// distance d costs L*E_elec plus the amplifier term: L*eps_fs*d^2 below the
/// distance threshold, L*eps_mp*d^4 at or above it. Receiving costs L*E_elec.
///
/// Note: with the default amplifier constants the free-space/multipath
/// crossover sits near 87.7 m, not at the 70 m threshold used here, so
/// tx_energy is deliberately discontinuous at the threshold.
struct RadioParams {
  double elec_per_bit = 5e-9;         // E_elec, J/bit
  double fs_amp = 10e-12;             // eps_fs, J/bit/m^2
  double mp_amp = 0.0013e-12;         // eps_mp, J/bit/m^4
  double distance_threshold = 70.0;   // d0, meters
  double agg_per_bit_signal = 5e-9;   // E_DA, J/bit/signal

  void validate() const;  // throws ConfigError; all constants strictly positive
};

double tx_energy(std::size_t bits, double dist, const RadioParams& params);
double rx_energy(std::size_t bits, const RadioParams& params);
double aggregation_energy(std::size_t bits, std::size_t signal_count, const RadioParams& params);

/// Deducts cost from the node's residual energy, clamped at zero, and returns
/// the amount actually deducted. A node that hits zero keeps transmitting for
/// the rest of the round; the round engine marks it dead at round end.
/// Charging an already-dead node is a protocol bug and throws.
double charge(Node& node, double cost);

}  // namespace wsn
