#include "wsn/batch.hpp"

#include <fstream>
#include <iostream>
#include <memory>

#include "wsn/report.hpp"

namespace wsn {

namespace {

class TopologyDumper : public RoundObserver {
 public:
  explicit TopologyDumper(const std::filesystem::path& path) : os_(path) {}

  bool good() const { return os_.good(); }

  void on_topology(const Network&, const RoundTopology& topo) override {
    if (!topo.chain) return;
    os_ << "# round " << topo.round << '\n';
    for (const auto& [u, v] : topo.chain->edges) os_ << u << ' ' << v << '\n';
  }

 private:
  std::ofstream os_;
};

}  // namespace

int run_batch(const RunSpec& spec) {
  std::error_code ec;
  std::filesystem::create_directories(spec.out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory '" << spec.out_dir.string()
              << "': " << ec.message() << '\n';
    return 1;
  }

  std::vector<RunResult> results;
  for (const Protocol protocol : spec.protocols) {
    for (const std::uint64_t seed : spec.seeds) {
      const NetworkConfig config = effective_network_config(spec, protocol);
      Simulation sim(init_network(config, seed), spec.radio, protocol);

      const std::string stem = to_string(protocol) + "_seed" + std::to_string(seed);
      std::unique_ptr<TopologyDumper> dumper;
      if (spec.dump_topology &&
          (protocol == Protocol::Hdeec || protocol == Protocol::Mhdeec)) {
        dumper = std::make_unique<TopologyDumper>(spec.out_dir / (stem + ".edges.txt"));
        if (!dumper->good()) {
          std::cerr << "error: cannot write topology dump for " << stem << '\n';
          return 1;
        }
      }

      const MetricsSeries series = sim.run(config.max_rounds, dumper.get());

      const std::filesystem::path csv_path = spec.out_dir / (stem + ".csv");
      std::ofstream csv(csv_path);
      write_metrics_csv(csv, series);
      csv.flush();
      if (!csv.good()) {
        std::cerr << "error: cannot write '" << csv_path.string() << "'\n";
        return 1;
      }

      RunResult result;
      result.protocol = protocol;
      result.seed = seed;
      if (!series.empty()) result.summary = summarize(series, config.node_count);
      result.summary.rounds_simulated = series.size();
      results.push_back(result);
    }
  }

  const std::filesystem::path summary_path = spec.out_dir / "summary.txt";
  std::ofstream summary(summary_path);
  write_summary(summary, spec, results);
  summary.flush();
  if (!summary.good()) {
    std::cerr << "error: cannot write '" << summary_path.string() << "'\n";
    return 1;
  }
  return 0;
}

}  // namespace wsn
