// Experiment harness: builds or loads a physical network, runs the
// three-colony simulation and writes CSV/snapshot outputs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dps/cost.h"
#include "dps/engine.h"
#include "dps/report.h"
#include "dps/topology.h"

namespace fs = std::filesystem;

namespace {

struct RunFlags {
  std::optional<std::size_t> nodes;
  std::optional<double> avg_degree;
  std::optional<std::string> graph;
  std::optional<std::string> manifest;
  std::optional<std::uint64_t> seed;
  std::optional<dps::Round> rounds;
  std::optional<dps::NodeId> src;
  std::vector<dps::NodeId> dsts;
  std::optional<double> volume;
  bool paper_defaults = false;
  std::string out = "dps_out";

  std::optional<double> alpha, beta, rho, rho_g, rho_n, tau0, tau_min, q,
      sigma0, c_h, c_t, gamma, eta0;
  std::optional<int> k_pos, k_neg, k_exp;
  std::optional<dps::Round> ttl, evaporation_period;
  std::optional<std::string> eta_denominator;
};

std::ifstream OpenInput(const std::string& path, std::string_view what) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + std::string(what) + " file '" +
                             path + "'");
  }
  return in;
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
}

template <typename T>
void Apply(const std::optional<T>& flag, T& field) {
  if (flag) field = *flag;
}

dps::SimConfig BuildConfig(const RunFlags& f) {
  dps::SimConfig c;
  if (f.manifest) {
    auto in = OpenInput(*f.manifest, "manifest");
    c = dps::ReadManifest(in);
  }
  if (f.paper_defaults) {
    c.network.reset();
    c.nodes = 10;
    c.avg_degree = 4.0;
    c.ants.colony = dps::ColonyParams{};
    c.ants.cost = dps::CostParams{};
  }
  if (f.graph) {
    auto in = OpenInput(*f.graph, "graph");
    c.network = dps::ReadGraph(in);
  } else if (f.nodes || f.avg_degree) {
    c.network.reset();
  }
  Apply(f.nodes, c.nodes);
  Apply(f.avg_degree, c.avg_degree);
  if (f.seed) {
    c.seed = *f.seed;
    // A generated graph follows the seed; a loaded one does not.
    if (!f.graph && f.manifest && !f.nodes && !f.avg_degree) c.network.reset();
  }
  Apply(f.rounds, c.rounds);
  Apply(f.src, c.src);
  if (!f.dsts.empty()) c.destinations = f.dsts;
  Apply(f.volume, c.volume);

  dps::ColonyParams& k = c.ants.colony;
  Apply(f.alpha, k.alpha);
  Apply(f.beta, k.beta);
  Apply(f.rho, k.rho);
  Apply(f.rho_g, k.rho_g);
  Apply(f.rho_n, k.rho_n);
  Apply(f.tau0, k.tau0);
  Apply(f.tau_min, k.tau_min);
  Apply(f.q, k.q);
  Apply(f.sigma0, k.sigma0);
  Apply(f.c_h, c.ants.cost.c_h);
  Apply(f.c_t, c.ants.cost.c_t);
  Apply(f.gamma, c.ants.gamma);
  Apply(f.eta0, c.eta0);
  Apply(f.k_pos, c.counts.positive);
  Apply(f.k_neg, c.counts.negative);
  Apply(f.k_exp, c.counts.exploiter);
  Apply(f.ttl, c.ttl);
  Apply(f.evaporation_period, c.evaporation_period);
  if (f.eta_denominator) {
    c.ants.eta_denominator = dps::ParseEtaDenominator(*f.eta_denominator);
  }
  if (f.src && f.dsts.empty()) c.destinations.clear();
  return dps::Resolve(std::move(c));
}

int Run(const RunFlags& flags) {
  dps::SimConfig config = BuildConfig(flags);
  dps::Simulation sim(config);
  sim.RunToEnd();
  const dps::Metrics& m = sim.metrics();
  const dps::SimConfig& resolved = sim.config();

  fs::create_directories(flags.out);
  const fs::path dir(flags.out);
  std::ostringstream text;

  WriteFile(dir / "manifest.json", dps::ManifestJson(resolved));

  text.str("");
  dps::WriteGraph(text, sim.network());
  WriteFile(dir / "graph.txt", text.str());

  text.str("");
  dps::WriteConvergenceCsv(text, m);
  WriteFile(dir / "convergence.csv", text.str());

  text.str("");
  dps::WriteSummaryCsv(text, m, sim.network(), resolved);
  WriteFile(dir / "summary.csv", text.str());

  text.str("");
  dps::WriteAntTraceCsv(text, m);
  WriteFile(dir / "ants.csv", text.str());

  text.str("");
  dps::WriteRoundsCsv(text, m);
  WriteFile(dir / "rounds.csv", text.str());

  text.str("");
  dps::WriteOverlaySnapshot(text, sim.overlay(), sim.round(),
                            m.rounds.back().cost);
  WriteFile(dir / "overlay.txt", text.str());

  text.str("");
  dps::WriteStateSnapshot(text, sim.states());
  WriteFile(dir / "state.txt", text.str());

  std::size_t arrived = 0, dispatched = 0;
  for (const auto& r : m.rounds) {
    arrived += r.arrived;
    dispatched += r.dispatched;
  }
  std::cout << "nodes " << sim.network().node_count() << ", edges "
            << sim.network().edge_count() << ", rounds " << sim.round()
            << ", ants " << dispatched << " (" << arrived << " arrived)\n"
            << "final C(G) " << m.rounds.back().cost.value << ", overlay links "
            << sim.overlay().size() << "\n"
            << "outputs in " << dir.string() << "\n";
  return 0;
}

int Cost(const std::string& graph_path, const std::string& overlay_path,
         const std::optional<std::string>& demand_path, double c_h,
         double c_t) {
  auto graph_in = OpenInput(graph_path, "graph");
  dps::PhysicalNetwork net = dps::ReadGraph(graph_in);
  auto overlay_in = OpenInput(overlay_path, "overlay");
  dps::OverlayNetwork overlay = dps::ReadOverlayLinks(overlay_in, net);
  dps::TrafficDemand demand;
  if (demand_path) {
    auto demand_in = OpenInput(*demand_path, "demand");
    demand = dps::ReadDemand(demand_in);
  }
  dps::CostParams params{c_h, c_t};
  params.Validate();
  for (dps::NodeId i = 0; i < net.node_count(); ++i) {
    dps::CostValue c = dps::NodeCost(i, overlay, net, demand, params);
    std::cout << "node " << i << ' ';
    if (c.finite()) {
      std::cout << c.value << '\n';
    } else {
      std::cout << "inf (" << c.unreachable_pairs << " unreachable)\n";
    }
  }
  dps::CostValue total = dps::TotalCost(overlay, net, demand, params);
  std::cout << "total " << total.value << " unreachable "
            << total.unreachable_pairs << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-colony ant routing and overlay construction simulator"};
  app.set_version_flag("--version", std::string(dps::kToolVersion));

  RunFlags f;
  app.add_option("--nodes", f.nodes, "Node count of a generated graph");
  app.add_option("--avg-degree", f.avg_degree, "Mean degree of a generated graph");
  app.add_option("--graph", f.graph, "Load the physical graph from a file");
  app.add_option("--manifest", f.manifest, "Re-run a manifest.json");
  app.add_option("--seed", f.seed, "Random seed");
  app.add_option("--rounds", f.rounds, "Rounds to simulate (default 1000)");
  app.add_option("--src", f.src, "Source node (default 0)");
  app.add_option("--dsts", f.dsts, "Destinations (default: all others)")
      ->delimiter(',');
  app.add_option("--volume", f.volume, "Volume per forward ant (default 1)");
  app.add_flag("--paper-defaults", f.paper_defaults,
               "10 nodes, mean degree 4, reference parameter set");
  app.add_option("--out", f.out, "Output directory")->capture_default_str();
  app.add_option("--alpha", f.alpha);
  app.add_option("--beta", f.beta);
  app.add_option("--rho", f.rho, "Local evaporation rate");
  app.add_option("--rho-g", f.rho_g, "Global evaporation rate");
  app.add_option("--rho-n", f.rho_n, "Negative evaporation rate");
  app.add_option("--tau0", f.tau0, "Initial pheromone");
  app.add_option("--tau-min", f.tau_min, "No-entry threshold");
  app.add_option("--q", f.q, "Overlay value scale");
  app.add_option("--sigma0", f.sigma0, "Overlay value floor");
  app.add_option("--c-h", f.c_h, "Overlay cost per physical hop");
  app.add_option("--c-t", f.c_t, "Transit cost per link per unit demand");
  app.add_option("--ttl", f.ttl, "Logical link lifetime in rounds");
  app.add_option("--gamma", f.gamma, "Bad-trail factor");
  app.add_option("--eta-denominator", f.eta_denominator, "to-dst or to-src")
      ->check(CLI::IsMember({"to-dst", "to-src"}));
  app.add_option("--eta0", f.eta0, "Desirability before any estimate");
  app.add_option("--k-pos", f.k_pos, "Positive explorers per destination per round");
  app.add_option("--k-neg", f.k_neg, "Negative explorers per destination per round");
  app.add_option("--k-exp", f.k_exp, "Exploiters per destination per round");
  app.add_option("--evaporation-period", f.evaporation_period,
                 "Rounds between periodic activities");

  std::string cost_graph, cost_overlay;
  std::optional<std::string> cost_demand;
  double cost_ch = 2.0, cost_ct = 1.0;
  CLI::App* cost = app.add_subcommand(
      "cost", "Evaluate C_i and C(G) for an overlay snapshot");
  cost->add_option("--graph", cost_graph)->required();
  cost->add_option("--overlay", cost_overlay)->required();
  cost->add_option("--demand", cost_demand, "Lines 'i j d_ij'");
  cost->add_option("--c-h", cost_ch)->capture_default_str();
  cost->add_option("--c-t", cost_ct)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*cost) return Cost(cost_graph, cost_overlay, cost_demand, cost_ch, cost_ct);
    return Run(f);
  } catch (const std::exception& e) {
    std::cerr << "dps: error: " << e.what() << '\n';
    return 1;
  }
}
