#include "dps/report.h"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dps {
namespace {

using Json = nlohmann::ordered_json;

std::string Real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::string Hex(std::uint64_t x) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace

EtaDenominator ParseEtaDenominator(std::string_view text) {
  if (text == "to-dst") return EtaDenominator::kHopsToDst;
  if (text == "to-src") return EtaDenominator::kHopsToSrc;
  throw std::invalid_argument("eta denominator must be to-dst or to-src, got '" +
                              std::string(text) + "'");
}

std::string_view EtaDenominatorName(EtaDenominator d) {
  return d == EtaDenominator::kHopsToDst ? "to-dst" : "to-src";
}

void WriteConvergenceCsv(std::ostream& out, const Metrics& metrics) {
  out << "round,colony,dst,hop_length,status\n";
  for (const TraceRecord& r : metrics.trace) {
    out << r.round << ',' << ColonyName(r.colony) << ',' << r.dst << ',';
    if (r.status == AntStatus::kArrived) out << r.hop_count;
    out << ',' << StatusName(r.status) << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, const Metrics& metrics,
                     const PhysicalNetwork& net, const SimConfig& config) {
  const auto bfs = ShortestHops(net, config.src);
  out << "dst,min_hop_length,bfs_shortest,match\n";
  for (NodeId dst : config.destinations) {
    out << dst << ',';
    auto it = metrics.min_hops.find(dst);
    bool match = false;
    if (it != metrics.min_hops.end()) {
      out << it->second;
      match = it->second == bfs[dst];
    }
    out << ',' << bfs[dst] << ',' << (match ? "true" : "false") << '\n';
  }
}

void WriteAntTraceCsv(std::ostream& out, const Metrics& metrics) {
  out << "round,colony,src,dst,status,hop_count,bad_trail,min_overlay_cost,"
         "candidate,established\n";
  for (const TraceRecord& r : metrics.trace) {
    out << r.round << ',' << ColonyName(r.colony) << ',' << r.src << ','
        << r.dst << ',' << StatusName(r.status) << ',' << r.hop_count << ','
        << (r.bad_trail ? 1 : 0) << ',';
    if (r.min_overlay_cost) out << Real(*r.min_overlay_cost);
    out << ',';
    if (r.candidate) out << *r.candidate;
    out << ',' << (r.established ? 1 : 0) << '\n';
  }
}

void WriteRoundsCsv(std::ostream& out, const Metrics& metrics) {
  out << "round,dispatched,arrived,dead_end,blocked,negative_marks,"
         "overlay_links,cost,unreachable_pairs,cost_truth\n";
  for (const RoundSummary& s : metrics.rounds) {
    out << s.round << ',' << s.dispatched << ',' << s.arrived << ','
        << s.dead_end << ',' << s.blocked << ',' << s.negative_marks << ','
        << s.overlay_links << ',' << Real(s.cost.value) << ','
        << s.cost.unreachable_pairs << ',' << Real(s.cost_truth.value)
        << '\n';
  }
}

void WriteOverlaySnapshot(std::ostream& out, const OverlayNetwork& overlay,
                          Round round, const CostValue& cost) {
  out << "# overlay round " << round << '\n';
  WriteOverlayLinks(out, overlay);
  out << "# total_cost " << Real(cost.value) << " unreachable "
      << cost.unreachable_pairs << '\n';
}

std::string ManifestJson(const SimConfig& c) {
  if (!c.network) throw std::invalid_argument("manifest needs a resolved config");
  const PhysicalNetwork& net = *c.network;
  Json edges = Json::array();
  for (const auto& [u, v] : net.edges()) edges.push_back({u, v});
  const ColonyParams& k = c.ants.colony;
  Json j;
  j["version"] = kToolVersion;
  j["seed"] = c.seed;
  j["graph"] = {{"nodes", net.node_count()},
                {"edges", edges},
                {"fingerprint", Hex(Fingerprint(net))}};
  j["rounds"] = c.rounds;
  j["src"] = c.src;
  j["destinations"] = c.destinations;
  j["volume"] = c.volume;
  j["counts"] = {{"positive", c.counts.positive},
                 {"negative", c.counts.negative},
                 {"exploiter", c.counts.exploiter}};
  j["colony"] = {{"alpha", k.alpha},   {"beta", k.beta},
                 {"rho", k.rho},       {"rho_g", k.rho_g},
                 {"rho_n", k.rho_n},   {"tau0", k.tau0},
                 {"tau_min", k.tau_min}, {"q", k.q},
                 {"sigma0", k.sigma0}};
  j["cost"] = {{"c_h", c.ants.cost.c_h}, {"c_t", c.ants.cost.c_t}};
  j["gamma"] = c.ants.gamma;
  j["eta_denominator"] = EtaDenominatorName(c.ants.eta_denominator);
  j["eta0"] = c.eta0;
  j["ttl"] = c.ttl;
  j["evaporation_period"] = c.evaporation_period;
  return j.dump(2) + "\n";
}

SimConfig ReadManifest(std::istream& in) {
  try {
    Json j = Json::parse(in);
    SimConfig c;
    const Json& g = j.at("graph");
    std::vector<Edge> edges;
    for (const Json& e : g.at("edges")) {
      edges.push_back({e.at(0).get<NodeId>(), e.at(1).get<NodeId>()});
    }
    c.network = PhysicalNetwork(g.at("nodes").get<std::size_t>(), edges);
    if (g.contains("fingerprint") &&
        g.at("fingerprint").get<std::string>() != Hex(Fingerprint(*c.network))) {
      throw std::invalid_argument("manifest graph does not match its fingerprint");
    }
    c.seed = j.at("seed").get<std::uint64_t>();
    c.rounds = j.at("rounds").get<Round>();
    c.src = j.at("src").get<NodeId>();
    c.destinations = j.at("destinations").get<std::vector<NodeId>>();
    c.volume = j.at("volume").get<double>();
    const Json& n = j.at("counts");
    c.counts = {n.at("positive").get<int>(), n.at("negative").get<int>(),
                n.at("exploiter").get<int>()};
    const Json& k = j.at("colony");
    ColonyParams& p = c.ants.colony;
    p.alpha = k.at("alpha").get<double>();
    p.beta = k.at("beta").get<double>();
    p.rho = k.at("rho").get<double>();
    p.rho_g = k.at("rho_g").get<double>();
    p.rho_n = k.at("rho_n").get<double>();
    p.tau0 = k.at("tau0").get<double>();
    p.tau_min = k.at("tau_min").get<double>();
    p.q = k.at("q").get<double>();
    p.sigma0 = k.at("sigma0").get<double>();
    c.ants.cost.c_h = j.at("cost").at("c_h").get<double>();
    c.ants.cost.c_t = j.at("cost").at("c_t").get<double>();
    c.ants.gamma = j.at("gamma").get<double>();
    c.ants.eta_denominator =
        ParseEtaDenominator(j.at("eta_denominator").get<std::string>());
    c.eta0 = j.at("eta0").get<double>();
    c.ttl = j.at("ttl").get<Round>();
    c.evaporation_period = j.at("evaporation_period").get<Round>();
    return Resolve(std::move(c));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad manifest: ") + e.what());
  }
}

}  // namespace dps
