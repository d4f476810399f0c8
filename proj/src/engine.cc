#include "dps/engine.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dps {
namespace {

// Keeps the simulation stream distinct from the graph-generation stream
// while both derive from the one configured seed.
constexpr std::uint64_t kSimulationStream = 0x9e3779b97f4a7c15ULL;

}  // namespace

int ColonyCounts::Of(ColonyKind kind) const {
  switch (kind) {
    case ColonyKind::kPositiveExplorer:
      return positive;
    case ColonyKind::kNegativeExplorer:
      return negative;
    case ColonyKind::kExploiter:
      return exploiter;
  }
  return 0;
}

SimConfig Resolve(SimConfig config) {
  if (config.rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  if (config.counts.positive < 0 || config.counts.negative < 0 ||
      config.counts.exploiter < 0 || config.counts.Total() < 1) {
    throw std::invalid_argument(
        "colony counts must be >= 0 with at least one ant per destination");
  }
  if (!(config.volume >= 0.0) || !std::isfinite(config.volume)) {
    throw std::invalid_argument("volume must be finite and >= 0");
  }
  if (config.ttl < 1) throw std::invalid_argument("ttl must be >= 1");
  if (config.evaporation_period < 1) {
    throw std::invalid_argument("evaporation period must be >= 1");
  }
  config.ants.Validate();

  if (!config.network) {
    config.network =
        GenerateRandomNetwork(config.nodes, config.avg_degree, config.seed);
  }
  const std::size_t n = config.network->node_count();
  config.nodes = n;
  config.avg_degree = config.network->MeanDegree();
  if (config.src >= n) {
    throw std::invalid_argument("source " + std::to_string(config.src) +
                                " out of range");
  }
  if (config.destinations.empty()) {
    for (NodeId v = 0; v < n; ++v) {
      if (v != config.src) config.destinations.push_back(v);
    }
  }
  std::sort(config.destinations.begin(), config.destinations.end());
  if (std::adjacent_find(config.destinations.begin(),
                         config.destinations.end()) !=
      config.destinations.end()) {
    throw std::invalid_argument("duplicate destination");
  }
  for (NodeId d : config.destinations) {
    if (d >= n) {
      throw std::invalid_argument("destination " + std::to_string(d) +
                                  " out of range");
    }
    if (d == config.src) {
      throw std::invalid_argument("source cannot be a destination");
    }
  }
  if (config.destinations.empty()) {
    throw std::invalid_argument("no destinations");
  }
  if (!(config.eta0 >= 0.0) || !std::isfinite(config.eta0)) {
    throw std::invalid_argument("eta0 must be finite and >= 0");
  }
  return config;
}

Simulation::Simulation(SimConfig config)
    : config_(Resolve(std::move(config))),
      rng_(config_.seed ^ kSimulationStream) {
  const PhysicalNetwork& net = *config_.network;
  const double tau0 = config_.ants.colony.tau0;
  states_.assign(net.node_count(),
                 NodeState(config_.ants.colony.sigma0, config_.eta0));
  for (NodeId u = 0; u < net.node_count(); ++u) {
    for (NodeId dst : config_.destinations) {
      if (u == dst) continue;
      for (NodeId v : net.neighbors(u)) states_[u].pheromone.At(v, dst, tau0);
    }
  }
}

bool Simulation::Step() {
  if (round_ >= config_.rounds) return false;
  const Round now = ++round_;
  const PhysicalNetwork& net = *config_.network;
  const AntParams& params = config_.ants;

  std::vector<ForwardAnt> ants;
  for (ColonyKind kind : kColonies) {
    for (NodeId dst : config_.destinations) {
      for (int k = 0; k < config_.counts.Of(kind); ++k) {
        ants.emplace_back(kind, config_.src, dst, config_.volume);
      }
    }
  }
  for (ForwardAnt& ant : ants) {
    ForwardWalk(ant, states_, overlay_, net, params, rng_);
  }

  RoundSummary summary;
  summary.round = now;
  for (const ForwardAnt& ant : ants) {
    TraceRecord record;
    record.round = now;
    record.colony = ant.colony;
    record.src = ant.src;
    record.dst = ant.dst;
    record.status = ant.status;
    record.hop_count = ant.hop_count;

    if (ant.colony == ColonyKind::kExploiter) {
      for (const AntStep& step : ant.steps) {
        if (step.via_overlay) continue;
        ++metrics_.exploiter_physical_moves;
        if (step.tau_at_selection < params.colony.tau_min) {
          ++metrics_.no_entry_violations;
        }
      }
    }

    ++summary.dispatched;
    switch (ant.status) {
      case AntStatus::kArrived:
        ++summary.arrived;
        break;
      case AntStatus::kDeadEnd:
        ++summary.dead_end;
        break;
      case AntStatus::kBlocked:
        ++summary.blocked;
        break;
      case AntStatus::kAlive:
        throw std::logic_error("forward walk returned a live ant");
    }

    if (ant.status == AntStatus::kArrived) {
      metrics_.arrivals[ant.dst].push_back({now, ant.hop_count});
      auto [it, inserted] = metrics_.min_hops.emplace(ant.dst, ant.hop_count);
      if (!inserted) it->second = std::min(it->second, ant.hop_count);

      record.bad_trail = ClassifyBadTrail(ant, states_, params.gamma);
      BackwardAnt bant =
          BackwardWalk(ant, record.bad_trail, states_, net, params);
      summary.negative_marks += static_cast<std::size_t>(bant.negative_marks);
      if (bant.overlay_candidate) {
        record.min_overlay_cost = bant.min_overlay_cost;
        record.candidate = bant.overlay_candidate;
      }
      if (auto link = EstablishOverlayAtSource(bant, overlay_, net, now,
                                               config_.ttl)) {
        record.established = true;
        metrics_.overlay_events.push_back(
            {now, OverlayEvent::Kind::kCreated, *link});
      }
    }
    metrics_.trace.push_back(record);
  }

  if (now % config_.evaporation_period == 0) {
    for (LogicalLink& link : overlay_.Expire(now)) {
      metrics_.overlay_events.push_back(
          {now, OverlayEvent::Kind::kExpired, std::move(link)});
    }
    const double bound = params.colony.tau0;
    for (NodeState& state : states_) {
      state.pheromone.Evaporate(params.colony);
      for (const auto& [key, tau] : state.pheromone.entries()) {
        if (tau < -bound || tau > bound) ++metrics_.closure_violations;
      }
    }
  }

  summary.overlay_links = overlay_.size();
  summary.cost = SampleTotalCost(states_, overlay_, net, config_);
  summary.cost_truth =
      SampleTotalCost(states_, overlay_, net, config_, config_.volume);
  metrics_.rounds.push_back(summary);
  return true;
}

void Simulation::RunToEnd() {
  while (Step()) {
  }
}

Metrics Run(const SimConfig& config) {
  Simulation sim(config);
  sim.RunToEnd();
  return sim.metrics();
}

CostValue SampleTotalCost(std::span<const NodeState> states,
                          const OverlayNetwork& overlay,
                          const PhysicalNetwork& net, const SimConfig& config,
                          std::optional<double> truth) {
  TrafficDemand demand;
  for (NodeId dst : config.destinations) {
    demand.Set(config.src, dst,
               truth ? *truth : states[config.src].Demand(dst));
  }
  return TotalCost(overlay, net, demand, config.ants.cost);
}

}  // namespace dps
