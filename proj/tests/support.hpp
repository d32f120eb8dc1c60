#pragma once

#include <cmath>
#include <vector>

#include "wsn/model.hpp"
#include "wsn/rng.hpp"

namespace wsn::test {

// Hand-built node for unit fixtures.
inline Node make_node(NodeId id, double x, double y, double energy = 0.5,
                      double extra = 0.0) {
  Node node;
  node.id = id;
  node.position = {x, y};
  node.extra_fraction = extra;
  node.initial_energy = energy;
  node.residual_energy = energy;
  return node;
}

inline std::vector<NodeId> ids_of(const std::vector<Node>& nodes) {
  std::vector<NodeId> ids;
  for (const Node& n : nodes) ids.push_back(n.id);
  return ids;
}

inline bool within_ulps(double a, double b, int ulps = 1) {
  if (a == b) return true;
  double lo = a, hi = a;
  for (int i = 0; i < ulps; ++i) {
    lo = std::nextafter(lo, -1e308);
    hi = std::nextafter(hi, 1e308);
  }
  return lo <= b && b <= hi;
}

}  // namespace wsn::test
