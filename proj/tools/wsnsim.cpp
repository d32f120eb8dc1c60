#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "wsn/batch.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wsn::UsageError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wsnsim - round-based simulator for heterogeneous WSN routing protocols\n"
      "(deec, sep, hdeec, mhdeec); writes one CSV per run plus a summary table"};

  std::string config_path;
  std::vector<std::string> protocols;
  std::vector<std::string> seeds;
  std::string rounds, nodes, field, bs, out_dir;
  bool dump_topology = false;
  std::vector<std::string> sets;

  app.add_option("--config", config_path, "config file with 'key = value' lines");
  app.add_option("--protocol", protocols, "protocol to run (repeatable): deec|sep|hdeec|mhdeec|all");
  app.add_option("--seed", seeds, "run seed (repeatable)");
  app.add_option("--rounds", rounds, "maximum number of rounds");
  app.add_option("--nodes", nodes, "number of nodes");
  app.add_option("--field", field, "field side length in meters");
  app.add_option("--bs", bs, "base station position X,Y");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--dump-topology", dump_topology, "write per-round backbone edge lists");
  app.add_option("--set", sets, "extra override KEY=VALUE (repeatable); see README for keys");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    std::string file_text;
    if (!config_path.empty()) file_text = read_file(config_path);

    std::vector<std::pair<std::string, std::string>> overrides;
    if (!protocols.empty()) {
      std::string joined;
      for (const std::string& p : protocols) joined += (joined.empty() ? "" : ",") + p;
      overrides.emplace_back("protocol", joined);
    }
    if (!seeds.empty()) {
      std::string joined;
      for (const std::string& s : seeds) joined += (joined.empty() ? "" : ",") + s;
      overrides.emplace_back("seeds", joined);
    }
    if (!rounds.empty()) overrides.emplace_back("rounds", rounds);
    if (!nodes.empty()) overrides.emplace_back("nodes", nodes);
    if (!field.empty()) overrides.emplace_back("field", field);
    if (!bs.empty()) overrides.emplace_back("bs", bs);
    if (!out_dir.empty()) overrides.emplace_back("out", out_dir);
    if (dump_topology) overrides.emplace_back("dump_topology", "true");
    for (const std::string& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw wsn::UsageError("--set expects KEY=VALUE, got '" + kv + "'");
      overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }

    const wsn::RunSpec spec = wsn::parse_config(file_text, overrides);
    return wsn::run_batch(spec);
  } catch (const wsn::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
