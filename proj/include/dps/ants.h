#ifndef DPS_ANTS_H
#define DPS_ANTS_H

#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dps/colony.h"
#include "dps/cost.h"
#include "dps/random.h"
#include "dps/topology.h"

namespace dps {

enum class ColonyKind { kPositiveExplorer, kNegativeExplorer, kExploiter };

inline constexpr ColonyKind kColonies[] = {ColonyKind::kPositiveExplorer,
                                           ColonyKind::kNegativeExplorer,
                                           ColonyKind::kExploiter};

std::string_view ColonyName(ColonyKind kind);

enum class AntStatus { kAlive, kArrived, kDeadEnd, kBlocked };

std::string_view StatusName(AntStatus status);

// Everything an ant consults when walking.
struct AntParams {
  ColonyParams colony;
  CostParams cost;
  double gamma = 1.5;  // bad-trail factor over the best known hop count
  EtaDenominator eta_denominator = EtaDenominator::kHopsToDst;

  void Validate() const;
};

// One move of a forward ant, kept for the backward pass and for auditing
// the no-entry constraint.
struct AntStep {
  NodeId from = 0;
  NodeId to = 0;
  bool via_overlay = false;
  int hops = 1;               // physical hops covered by this move
  double tau_at_selection = 0.0;
};

struct ForwardAnt {
  ColonyKind colony = ColonyKind::kPositiveExplorer;
  NodeId src = 0;
  NodeId dst = 0;
  double volume = 1.0;
  std::vector<NodeId> path;  // nodes after src, in visiting order
  std::vector<AntStep> steps;
  int hop_count = 0;
  AntStatus status = AntStatus::kAlive;

  ForwardAnt(ColonyKind kind, NodeId from, NodeId to, double vol)
      : colony(kind), src(from), dst(to), volume(vol) {}
};

struct BackwardAnt {
  ColonyKind colony = ColonyKind::kPositiveExplorer;
  NodeId src = 0;
  NodeId dst = 0;
  bool bad_trail = false;
  double min_overlay_cost = std::numeric_limits<double>::infinity();
  std::optional<NodeId> overlay_candidate;
  double sigma_at_candidate = 0.0;
  int nodes_visited = 0;
  int negative_marks = 0;
};

struct Candidate {
  NodeId node = 0;
  double tau = 0.0;
  double weight = 0.0;
};

// Unvisited physical neighbors of `node` with their selection weights
// max(tau,0)^alpha * max(eta,0)^beta. Exploiters only see neighbors whose
// pheromone toward dst is at least tau_min. `physical_options` receives the
// number of unvisited neighbors before that filter.
std::vector<Candidate> ScoreCandidates(NodeId node, NodeId dst,
                                       const std::vector<bool>& visited,
                                       ColonyKind colony,
                                       std::span<const NodeState> states,
                                       const PhysicalNetwork& net,
                                       const AntParams& params,
                                       std::size_t* physical_options = nullptr);

struct HopChoice {
  AntStatus outcome = AntStatus::kAlive;  // kAlive when a hop was chosen
  AntStep step;
};

// Next hop for an ant at `node` heading to `dst`:
//  - an unvisited overlay endpoint indexed by (node, dst) wins outright;
//  - otherwise the destination itself is taken when it is an admissible
//    candidate (its desirability is unbounded);
//  - otherwise roulette over ScoreCandidates, uniform if all weights are 0.
// No candidates yields kDeadEnd, or kBlocked when the no-entry filter
// removed every option.
HopChoice SelectNextHop(NodeId node, NodeId dst,
                        const std::vector<bool>& visited, ColonyKind colony,
                        std::span<const NodeState> states,
                        const OverlayNetwork& overlay,
                        const PhysicalNetwork& net, const AntParams& params,
                        Rng& rng);

// Walks from src until dst or a dead end, updating demand and hops-from
// estimates at every node entered.
void ForwardWalk(ForwardAnt& ant, std::span<NodeState> states,
                 const OverlayNetwork& overlay, const PhysicalNetwork& net,
                 const AntParams& params, Rng& rng);

// True when the arrived walk is longer than gamma times the best hop count
// recorded at dst for this source. False while no baseline exists.
bool ClassifyBadTrail(const ForwardAnt& ant, std::span<const NodeState> states,
                      double gamma);

// Retraces an arrived ant from dst to src over the intermediate nodes,
// updating hops-to, eta, pheromone and sigma, and picking the cheapest
// overlay anchor whose outgoing pheromone clears tau_min. Negative
// explorers on a bad trail apply the repellent rule instead of the
// positive one; bad trails never nominate an overlay anchor.
// Throws std::logic_error on a path that does not follow the network.
BackwardAnt BackwardWalk(const ForwardAnt& origin, bool bad_trail,
                         std::span<NodeState> states,
                         const PhysicalNetwork& net, const AntParams& params);

// Source-side overlay creation toward the backward ant's candidate.
std::optional<LogicalLink> EstablishOverlayAtSource(const BackwardAnt& bant,
                                                    OverlayNetwork& overlay,
                                                    const PhysicalNetwork& net,
                                                    Round now, Round ttl);

}  // namespace dps

#endif  // DPS_ANTS_H
