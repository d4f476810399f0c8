#include "dps/cost.h"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dps {

void CostParams::Validate() const {
  if (!(c_h >= 0.0) || !(c_t >= 0.0) || !std::isfinite(c_h) ||
      !std::isfinite(c_t)) {
    throw std::invalid_argument("cost coefficients must be finite and >= 0");
  }
}

void TrafficDemand::Set(NodeId i, NodeId j, double volume) {
  if (i == j) {
    throw std::invalid_argument("node " + std::to_string(i) +
                                " cannot demand traffic to itself");
  }
  if (!(volume >= 0.0) || !std::isfinite(volume)) {
    throw std::invalid_argument("demand must be finite and >= 0");
  }
  demand_[{i, j}] = volume;
}

double TrafficDemand::Get(NodeId i, NodeId j) const {
  auto it = demand_.find({i, j});
  return it == demand_.end() ? 0.0 : it->second;
}

std::set<NodeId> TrafficDemand::Destinations(NodeId i) const {
  std::set<NodeId> out;
  for (auto it = demand_.lower_bound({i, 0});
       it != demand_.end() && it->first.first == i; ++it) {
    out.insert(it->first.second);
  }
  return out;
}

TrafficDemand ReadDemand(std::istream& in) {
  TrafficDemand demand;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long i = 0, j = 0;
    double d = 0.0;
    if (!(fields >> i >> j >> d) || i < 0 || j < 0) {
      throw std::invalid_argument("malformed demand line: " + line);
    }
    demand.Set(static_cast<NodeId>(i), static_cast<NodeId>(j), d);
  }
  return demand;
}

CostValue NodeCost(NodeId i, const OverlayNetwork& overlay,
                   const PhysicalNetwork& net, const TrafficDemand& demand,
                   const CostParams& params) {
  // B_i is a set of endpoints; a second link to the same endpoint (for a
  // different destination) does not add another overlay edge.
  std::map<NodeId, int> owned;
  for (const auto& [key, link] : overlay.links()) {
    if (link.owner != i) continue;
    auto [it, inserted] = owned.emplace(link.endpoint, link.hop_length);
    if (!inserted && link.hop_length < it->second) it->second = link.hop_length;
  }
  CostValue cost;
  for (const auto& [endpoint, hops] : owned) cost.value += params.c_h * hops;
  for (NodeId j : demand.Destinations(i)) {
    auto transit = OverlayTransitCount(overlay, net, i, j);
    if (!transit) {
      ++cost.unreachable_pairs;
      continue;
    }
    cost.value += params.c_t * *transit * demand.Get(i, j);
  }
  return cost;
}

CostValue TotalCost(const OverlayNetwork& overlay, const PhysicalNetwork& net,
                    const TrafficDemand& demand, const CostParams& params) {
  CostValue total;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    CostValue c = NodeCost(i, overlay, net, demand, params);
    total.value += c.value;
    total.unreachable_pairs += c.unreachable_pairs;
  }
  return total;
}

}  // namespace dps
