#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsn/model.hpp"
#include "wsn/protocols.hpp"
#include "wsn/radio.hpp"

namespace wsn {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fully-resolved batch description: which protocols and seeds to run, with
/// the network and radio parameters already merged from defaults, config
/// file, and flag overrides (in that precedence order).
struct RunSpec {
  std::vector<Protocol> protocols{Protocol::Deec, Protocol::Sep, Protocol::Hdeec,
                                  Protocol::Mhdeec};
  std::vector<std::uint64_t> seeds{1};
  std::filesystem::path out_dir = "out";
  bool dump_topology = false;
  NetworkConfig network;
  RadioParams radio;
  // True when the user picked a heterogeneity mode; otherwise SEP runs
  // default to the two-level model its election is defined for.
  bool heterogeneity_explicit = false;
};

/// Parses `key = value` lines ('#' starts a comment), then applies flag
/// overrides on top. Unknown keys, unparsable values, and violated
/// constraints raise UsageError naming the offending key.
RunSpec parse_config(std::string_view file_text,
                     const std::vector<std::pair<std::string, std::string>>& overrides);

/// The network config a given protocol actually runs with.
NetworkConfig effective_network_config(const RunSpec& spec, Protocol protocol);

/// Every resolved value, as stable key/value pairs, for provenance echoing.
std::vector<std::pair<std::string, std::string>> describe(const RunSpec& spec);

}  // namespace wsn
