#include "wsn/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "wsn/report.hpp"

namespace wsn {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string current;
  for (char c : value) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!current.empty()) items.push_back(std::exchange(current, {}));
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) items.push_back(current);
  return items;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw UsageError("invalid value for '" + key + "': " + value);
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t parsed = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw UsageError("invalid value for '" + key + "': " + value);
  return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "off" || value == "no") return false;
  throw UsageError("invalid value for '" + key + "': " + value);
}

Point parse_point(const std::string& key, const std::string& value) {
  const std::vector<std::string> parts = split_list(value);
  if (parts.size() != 2) throw UsageError("invalid value for '" + key + "': expected X,Y");
  return {parse_double(key, parts[0]), parse_double(key, parts[1])};
}

struct Builder {
  RunSpec spec;
  std::set<std::string> touched;

  void apply(const std::string& key, const std::string& value) {
    touched.insert(key);
    if (key == "protocol" || key == "protocols") {
      spec.protocols.clear();
      for (const std::string& item : split_list(value)) {
        if (item == "all") {
          spec.protocols = {Protocol::Deec, Protocol::Sep, Protocol::Hdeec,
                            Protocol::Mhdeec};
          continue;
        }
        const auto protocol = protocol_from_string(item);
        if (!protocol)
          throw UsageError("invalid value for 'protocol': " + item +
                           " (expected deec|sep|hdeec|mhdeec|all)");
        spec.protocols.push_back(*protocol);
      }
      if (spec.protocols.empty()) throw UsageError("'protocol' must name at least one protocol");
    } else if (key == "seed" || key == "seeds") {
      spec.seeds.clear();
      for (const std::string& item : split_list(value))
        spec.seeds.push_back(parse_u64("seed", item));
      if (spec.seeds.empty()) throw UsageError("'seeds' must list at least one seed");
    } else if (key == "rounds") {
      spec.network.max_rounds = parse_u64(key, value);
    } else if (key == "nodes") {
      spec.network.node_count = parse_u64(key, value);
    } else if (key == "field") {
      spec.network.field_side = parse_double(key, value);
    } else if (key == "bs") {
      spec.network.bs_position = parse_point(key, value);
    } else if (key == "p_opt") {
      spec.network.p_opt = parse_double(key, value);
    } else if (key == "packet_bits") {
      spec.network.packet_bits = parse_u64(key, value);
    } else if (key == "e0") {
      spec.network.base_energy = parse_double(key, value);
    } else if (key == "beta_fraction") {
      spec.network.beta_fraction = parse_double(key, value);
    } else if (key == "heterogeneity") {
      if (value == "uniform") {
        spec.network.heterogeneity.mode = HeterogeneityMode::UniformRandom;
      } else if (value == "two-level") {
        spec.network.heterogeneity.mode = HeterogeneityMode::TwoLevel;
      } else {
        throw UsageError("invalid value for 'heterogeneity': " + value +
                         " (expected uniform|two-level)");
      }
      spec.heterogeneity_explicit = true;
    } else if (key == "a_max") {
      spec.network.heterogeneity.a_max = parse_double(key, value);
    } else if (key == "sep_m") {
      spec.network.sep.advanced_fraction = parse_double(key, value);
    } else if (key == "sep_a") {
      spec.network.sep.advanced_factor = parse_double(key, value);
    } else if (key == "w1") {
      spec.network.weight_w1 = parse_double(key, value);
    } else if (key == "w2") {
      spec.network.weight_w2 = parse_double(key, value);
    } else if (key == "e_elec") {
      spec.radio.elec_per_bit = parse_double(key, value);
    } else if (key == "eps_fs") {
      spec.radio.fs_amp = parse_double(key, value);
    } else if (key == "eps_mp") {
      spec.radio.mp_amp = parse_double(key, value);
    } else if (key == "d0") {
      spec.radio.distance_threshold = parse_double(key, value);
    } else if (key == "e_da") {
      spec.radio.agg_per_bit_signal = parse_double(key, value);
    } else if (key == "out") {
      spec.out_dir = value;
    } else if (key == "dump_topology") {
      spec.dump_topology = parse_bool(key, value);
    } else if (key == "layout_seed") {
      spec.network.layout_seed = parse_u64(key, value);
    } else {
      throw UsageError("unknown key '" + key + "'");
    }
  }
};

}  // namespace

RunSpec parse_config(std::string_view file_text,
                     const std::vector<std::pair<std::string, std::string>>& overrides) {
  Builder builder;

  std::size_t line_number = 0;
  std::istringstream lines{std::string(file_text)};
  for (std::string raw; std::getline(lines, raw);) {
    ++line_number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(line_number) +
                       ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw UsageError("config line " + std::to_string(line_number) + ": missing key");
    builder.apply(key, value);
  }

  for (const auto& [key, value] : overrides) builder.apply(key, value);

  // Setting only one leader weight fixes the other to their required sum.
  const bool w1_set = builder.touched.contains("w1");
  const bool w2_set = builder.touched.contains("w2");
  if (w1_set && !w2_set) builder.spec.network.weight_w2 = 1.0 - builder.spec.network.weight_w1;
  if (w2_set && !w1_set) builder.spec.network.weight_w1 = 1.0 - builder.spec.network.weight_w2;

  try {
    builder.spec.network.validate();
    builder.spec.radio.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return builder.spec;
}

NetworkConfig effective_network_config(const RunSpec& spec, Protocol protocol) {
  NetworkConfig config = spec.network;
  // SEP's weighted election is defined for the two-level energy model, so it
  // gets that model unless the user pinned one explicitly.
  if (protocol == Protocol::Sep && !spec.heterogeneity_explicit)
    config.heterogeneity.mode = HeterogeneityMode::TwoLevel;
  return config;
}

std::vector<std::pair<std::string, std::string>> describe(const RunSpec& spec) {
  std::vector<std::pair<std::string, std::string>> kv;
  std::string protocols;
  for (const Protocol protocol : spec.protocols) {
    if (!protocols.empty()) protocols += ",";
    protocols += to_string(protocol);
  }
  std::string seeds;
  for (const std::uint64_t seed : spec.seeds) {
    if (!seeds.empty()) seeds += ",";
    seeds += std::to_string(seed);
  }
  kv.emplace_back("protocol", protocols);
  kv.emplace_back("seeds", seeds);
  kv.emplace_back("rounds", std::to_string(spec.network.max_rounds));
  kv.emplace_back("nodes", std::to_string(spec.network.node_count));
  kv.emplace_back("field", format_double(spec.network.field_side));
  kv.emplace_back("bs", format_double(spec.network.bs_position.x) + "," +
                            format_double(spec.network.bs_position.y));
  kv.emplace_back("p_opt", format_double(spec.network.p_opt));
  kv.emplace_back("packet_bits", std::to_string(spec.network.packet_bits));
  kv.emplace_back("e0", format_double(spec.network.base_energy));
  kv.emplace_back("beta_fraction", format_double(spec.network.beta_fraction));
  kv.emplace_back("heterogeneity",
                  spec.network.heterogeneity.mode == HeterogeneityMode::UniformRandom
                      ? "uniform"
                      : "two-level");
  kv.emplace_back("a_max", format_double(spec.network.heterogeneity.a_max));
  kv.emplace_back("sep_m", format_double(spec.network.sep.advanced_fraction));
  kv.emplace_back("sep_a", format_double(spec.network.sep.advanced_factor));
  kv.emplace_back("w1", format_double(spec.network.weight_w1));
  kv.emplace_back("w2", format_double(spec.network.weight_w2));
  kv.emplace_back("e_elec", format_double(spec.radio.elec_per_bit));
  kv.emplace_back("eps_fs", format_double(spec.radio.fs_amp));
  kv.emplace_back("eps_mp", format_double(spec.radio.mp_amp));
  kv.emplace_back("d0", format_double(spec.radio.distance_threshold));
  kv.emplace_back("e_da", format_double(spec.radio.agg_per_bit_signal));
  kv.emplace_back("out", spec.out_dir.string());
  kv.emplace_back("dump_topology", spec.dump_topology ? "true" : "false");
  if (spec.network.layout_seed)
    kv.emplace_back("layout_seed", std::to_string(*spec.network.layout_seed));
  return kv;
}

}  // namespace wsn
