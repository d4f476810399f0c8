#include "dps/ants.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dps {

std::string_view ColonyName(ColonyKind kind) {
  switch (kind) {
    case ColonyKind::kPositiveExplorer:
      return "positive";
    case ColonyKind::kNegativeExplorer:
      return "negative";
    case ColonyKind::kExploiter:
      return "exploiter";
  }
  return "?";
}

std::string_view StatusName(AntStatus status) {
  switch (status) {
    case AntStatus::kAlive:
      return "alive";
    case AntStatus::kArrived:
      return "arrived";
    case AntStatus::kDeadEnd:
      return "dead_end";
    case AntStatus::kBlocked:
      return "blocked";
  }
  return "?";
}

void AntParams::Validate() const {
  colony.Validate();
  cost.Validate();
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("gamma must be finite and >= 1");
  }
}

std::vector<Candidate> ScoreCandidates(NodeId node, NodeId dst,
                                       const std::vector<bool>& visited,
                                       ColonyKind colony,
                                       std::span<const NodeState> states,
                                       const PhysicalNetwork& net,
                                       const AntParams& params,
                                       std::size_t* physical_options) {
  const ColonyParams& cp = params.colony;
  const PheromoneTable& table = states[node].pheromone;
  std::vector<Candidate> out;
  std::size_t options = 0;
  for (NodeId nb : net.neighbors(node)) {
    if (visited[nb]) continue;
    ++options;
    const double tau = table.Get(nb, dst, cp.tau0);
    if (colony == ColonyKind::kExploiter && tau < cp.tau_min) continue;
    const double eta = states[nb].Eta(dst);
    const double weight = std::pow(std::max(tau, 0.0), cp.alpha) *
                          std::pow(std::max(eta, 0.0), cp.beta);
    out.push_back({nb, tau, weight});
  }
  if (physical_options) *physical_options = options;
  return out;
}

HopChoice SelectNextHop(NodeId node, NodeId dst,
                        const std::vector<bool>& visited, ColonyKind colony,
                        std::span<const NodeState> states,
                        const OverlayNetwork& overlay,
                        const PhysicalNetwork& net, const AntParams& params,
                        Rng& rng) {
  HopChoice choice;
  choice.step.from = node;

  if (const LogicalLink* link = overlay.Find(node, dst);
      link && !visited[link->endpoint]) {
    choice.step.to = link->endpoint;
    choice.step.via_overlay = true;
    choice.step.hops = link->hop_length;
    choice.step.tau_at_selection =
        states[node].pheromone.Get(link->endpoint, dst, params.colony.tau0);
    return choice;
  }

  std::size_t options = 0;
  auto candidates = ScoreCandidates(node, dst, visited, colony, states, net,
                                    params, &options);
  if (candidates.empty()) {
    choice.outcome = options > 0 ? AntStatus::kBlocked : AntStatus::kDeadEnd;
    return choice;
  }

  auto take = [&](const Candidate& c) {
    choice.step.to = c.node;
    choice.step.hops = 1;
    choice.step.tau_at_selection = c.tau;
    return choice;
  };

  // The destination is zero hops from itself: its desirability is unbounded
  // and dominates every finite weight. Exploiters only get here when the
  // no-entry filter admitted it.
  for (const Candidate& c : candidates) {
    if (c.node == dst) return take(c);
  }

  double total = 0.0;
  for (const Candidate& c : candidates) total += c.weight;
  if (!(total > 0.0)) {
    return take(candidates[rng.UniformIndex(candidates.size())]);
  }
  const double target = rng.UniformReal() * total;
  double cumulative = 0.0;
  for (const Candidate& c : candidates) {
    cumulative += c.weight;
    if (target < cumulative) return take(c);
  }
  // Round-off at the top of the range: last positive-weight candidate.
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    if (it->weight > 0.0) return take(*it);
  }
  return take(candidates.back());
}

void ForwardWalk(ForwardAnt& ant, std::span<NodeState> states,
                 const OverlayNetwork& overlay, const PhysicalNetwork& net,
                 const AntParams& params, Rng& rng) {
  if (ant.src == ant.dst) {
    throw std::invalid_argument("forward ant source equals destination");
  }
  std::vector<bool> visited(net.node_count(), false);
  visited[ant.src] = true;
  for (NodeId n : ant.path) visited[n] = true;
  NodeId current = ant.path.empty() ? ant.src : ant.path.back();

  while (current != ant.dst) {
    HopChoice choice = SelectNextHop(current, ant.dst, visited, ant.colony,
                                     states, overlay, net, params, rng);
    if (choice.outcome != AntStatus::kAlive) {
      ant.status = choice.outcome;
      return;
    }
    const NodeId next = choice.step.to;
    ant.path.push_back(next);
    ant.steps.push_back(choice.step);
    ant.hop_count += choice.step.hops;
    visited[next] = true;
    current = next;

    NodeState& here = states[current];
    here.demand_est[ant.dst] =
        UpdateDemand(here.Demand(ant.dst), ant.volume, params.colony);
    here.hops_from[ant.src] =
        UpdateHopsFrom(here.HopsFrom(ant.src), ant.hop_count);
  }
  ant.status = AntStatus::kArrived;
}

bool ClassifyBadTrail(const ForwardAnt& ant, std::span<const NodeState> states,
                      double gamma) {
  if (ant.status != AntStatus::kArrived) return false;
  auto best = states[ant.dst].HopsFrom(ant.src);
  if (!best) return false;
  return ant.hop_count > gamma * *best;
}

BackwardAnt BackwardWalk(const ForwardAnt& origin, bool bad_trail,
                         std::span<NodeState> states,
                         const PhysicalNetwork& net, const AntParams& params) {
  if (origin.status != AntStatus::kArrived || origin.path.empty() ||
      origin.path.back() != origin.dst ||
      origin.steps.size() != origin.path.size()) {
    throw std::logic_error("backward walk needs an arrived forward ant");
  }
  for (const AntStep& s : origin.steps) {
    if (!s.via_overlay && !net.HasEdge(s.from, s.to)) {
      throw std::logic_error("forward path uses a missing edge " +
                             std::to_string(s.from) + "-" +
                             std::to_string(s.to));
    }
  }

  const ColonyParams& cp = params.colony;
  BackwardAnt bant;
  bant.colony = origin.colony;
  bant.src = origin.src;
  bant.dst = origin.dst;
  bant.bad_trail = bad_trail;
  const bool repel =
      bad_trail && origin.colony == ColonyKind::kNegativeExplorer;

  // steps[k] leaves the k-th intermediate node (steps[0] leaves src), so
  // walking k from the back visits intermediates dst-side first.
  for (std::size_t k = origin.steps.size() - 1; k >= 1; --k) {
    const NodeId v = origin.steps[k].from;
    const NodeId w = origin.steps[k].to;
    NodeState& state = states[v];
    ++bant.nodes_visited;

    auto from_src = state.HopsFrom(origin.src);
    if (!from_src) {
      throw std::logic_error("node " + std::to_string(v) +
                             " on the path has no hop estimate from src");
    }
    const int to_dst = UpdateHopsTo(origin.hop_count, *from_src);
    state.hops_to[origin.dst] = to_dst;

    const int denominator = params.eta_denominator == EtaDenominator::kHopsToDst
                                ? to_dst
                                : *from_src;
    state.eta[origin.dst] = UpdateEta(state.Eta(origin.dst), denominator);

    double& tau = state.pheromone.At(w, origin.dst, cp.tau0);
    if (repel) {
      tau = NegativeUpdate(tau, cp);
      ++bant.negative_marks;
    } else {
      tau = LocalPositiveUpdate(tau, cp);
    }

    if (!bad_trail) {
      const double cost = AntOverlayCost(*from_src, state.Demand(origin.dst),
                                         to_dst, params.cost);
      if (auto sigma = UpdateSigma(state.sigma, cost, cp)) state.sigma = *sigma;
      if (cost <= bant.min_overlay_cost && tau >= cp.tau_min) {
        bant.min_overlay_cost = cost;
        bant.overlay_candidate = v;
        bant.sigma_at_candidate = state.sigma;
      }
    }
    if (k == 1) break;
  }
  return bant;
}

std::optional<LogicalLink> EstablishOverlayAtSource(const BackwardAnt& bant,
                                                    OverlayNetwork& overlay,
                                                    const PhysicalNetwork& net,
                                                    Round now, Round ttl) {
  if (!bant.overlay_candidate || *bant.overlay_candidate == bant.src) {
    return std::nullopt;
  }
  return overlay.Establish(net, bant.src, *bant.overlay_candidate, bant.dst,
                           now, ttl);
}

}  // namespace dps
