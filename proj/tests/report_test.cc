#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "dps/engine.h"
#include "dps/report.h"

using namespace dps;

namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> Split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

TEST_CASE("convergence csv: one row per dispatched ant") {
  SimConfig c;
  c.rounds = 20;
  Simulation sim(c);
  sim.RunToEnd();
  std::ostringstream out;
  WriteConvergenceCsv(out, sim.metrics());
  auto lines = Lines(out.str());
  REQUIRE(lines.front() == "round,colony,dst,hop_length,status");
  CHECK(lines.size() - 1 == 20 * 27);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto f = Split(lines[k]);
    REQUIRE(f.size() == 5);
    CHECK((f[3].empty() == (f[4] != "arrived")));
  }
}

TEST_CASE("summary csv min equals the trace minimum") {
  SimConfig c;
  c.rounds = 200;
  c.seed = 4;
  Simulation sim(c);
  sim.RunToEnd();
  std::ostringstream conv, summary;
  WriteConvergenceCsv(conv, sim.metrics());
  WriteSummaryCsv(summary, sim.metrics(), sim.network(), sim.config());
  std::map<std::string, int> trace_min;
  auto rows = Lines(conv.str());
  for (std::size_t k = 1; k < rows.size(); ++k) {
    auto f = Split(rows[k]);
    if (f[4] != "arrived") continue;
    int h = std::stoi(f[3]);
    auto [it, fresh] = trace_min.emplace(f[2], h);
    if (!fresh) it->second = std::min(it->second, h);
  }
  auto lines = Lines(summary.str());
  REQUIRE(lines.front() == "dst,min_hop_length,bfs_shortest,match");
  const auto bfs = ShortestHops(sim.network(), 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto f = Split(lines[k]);
    CHECK(std::stoi(f[1]) == trace_min.at(f[0]));
    CHECK(std::stoi(f[2]) == bfs[std::stoi(f[0])]);
    CHECK((f[3] == "true") == (f[1] == f[2]));
  }
}

TEST_CASE("summary csv with no arrivals") {
  SimConfig c = Resolve(SimConfig{});
  Metrics empty;
  std::ostringstream out;
  WriteSummaryCsv(out, empty, *c.network, c);
  auto lines = Lines(out.str());
  REQUIRE(lines.size() == 10);
  auto f = Split(lines[1]);
  CHECK(f[1].empty());
  CHECK(f[3] == "false");
}

TEST_CASE("overlay snapshot: empty and one link") {
  PhysicalNetwork net(3, {{0, 1}, {1, 2}});
  OverlayNetwork overlay;
  std::ostringstream empty;
  WriteOverlaySnapshot(empty, overlay, 7, {});
  CHECK(empty.str() == "# overlay round 7\n# total_cost 0 unreachable 0\n");
  overlay.Establish(net, 0, 2, 2, 1, 50);
  std::ostringstream one;
  WriteOverlaySnapshot(one, overlay, 7, {4.0, 0});
  CHECK(one.str() ==
        "# overlay round 7\n0 2 2 2 51\n# total_cost 4 unreachable 0\n");
}

TEST_CASE("overlay snapshot re-parses to the same total cost") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SimConfig c;
    c.seed = seed;
    c.rounds = 300;
    Simulation sim(c);
    sim.RunToEnd();
    std::stringstream text;
    WriteOverlaySnapshot(text, sim.overlay(), sim.round(),
                         sim.metrics().rounds.back().cost);
    OverlayNetwork back = ReadOverlayLinks(text, sim.network());
    CHECK(back.size() == sim.overlay().size());
    CostValue again = SampleTotalCost(sim.states(), back, sim.network(),
                                      sim.config());
    CHECK(again.value == sim.metrics().rounds.back().cost.value);
    CHECK(again.unreachable_pairs ==
          sim.metrics().rounds.back().cost.unreachable_pairs);
  }
}

TEST_CASE("manifest round trip reproduces the config") {
  SimConfig c;
  c.seed = 12;
  c.rounds = 30;
  c.destinations = {3, 5};
  c.counts = {2, 1, 0};
  c.ants.gamma = 1.25;
  c.ants.eta_denominator = EtaDenominator::kHopsToSrc;
  c.ttl = 20;
  SimConfig resolved = Resolve(c);
  const std::string json = ManifestJson(resolved);
  std::istringstream in(json);
  SimConfig back = ReadManifest(in);
  CHECK(ManifestJson(back) == json);
  CHECK(back.network->edges() == resolved.network->edges());
  CHECK(back.ants.eta_denominator == EtaDenominator::kHopsToSrc);
  CHECK(back.counts.exploiter == 0);
}

TEST_CASE("manifest rejects tampered graphs and junk") {
  SimConfig resolved = Resolve(SimConfig{});
  std::string json = ManifestJson(resolved);
  const auto at = json.find("\"fingerprint\": \"");
  REQUIRE(at != std::string::npos);
  json[at + 16] = json[at + 16] == '0' ? '1' : '0';
  std::istringstream tampered(json);
  CHECK_THROWS_AS(ReadManifest(tampered), std::invalid_argument);
  std::istringstream junk("{ not json");
  CHECK_THROWS_AS(ReadManifest(junk), std::invalid_argument);
}

TEST_CASE("eta denominator names") {
  CHECK(ParseEtaDenominator("to-dst") == EtaDenominator::kHopsToDst);
  CHECK(EtaDenominatorName(EtaDenominator::kHopsToSrc) == "to-src");
  CHECK_THROWS_AS(ParseEtaDenominator("dst"), std::invalid_argument);
}
