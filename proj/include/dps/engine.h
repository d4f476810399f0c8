#ifndef DPS_ENGINE_H
#define DPS_ENGINE_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dps/ants.h"
#include "dps/colony.h"
#include "dps/cost.h"
#include "dps/random.h"
#include "dps/topology.h"

namespace dps {

struct ColonyCounts {
  int positive = 1;
  int negative = 1;
  int exploiter = 1;

  int Of(ColonyKind kind) const;
  int Total() const { return positive + negative + exploiter; }
};

struct SimConfig {
  // Graph source: `network` when set, otherwise a random graph generated
  // from (nodes, avg_degree, seed).
  std::optional<PhysicalNetwork> network;
  std::size_t nodes = 10;
  double avg_degree = 4.0;

  std::uint64_t seed = 1;
  Round rounds = 1000;
  NodeId src = 0;
  std::vector<NodeId> destinations;  // empty: every node except src
  double volume = 1.0;               // carried by every forward ant
  ColonyCounts counts;               // ants per destination per round
  AntParams ants;
  // Desirability of a node toward a destination it has no estimate for.
  // A positive value (at most 1/(n-1), the lowest a true hop distance can
  // produce) keeps never-visited nodes selectable.
  double eta0 = 0.0;
  Round ttl = 50;
  Round evaporation_period = 1;
};

struct TraceRecord {
  Round round = 0;
  ColonyKind colony = ColonyKind::kPositiveExplorer;
  NodeId src = 0;
  NodeId dst = 0;
  AntStatus status = AntStatus::kAlive;
  int hop_count = 0;
  bool bad_trail = false;
  std::optional<double> min_overlay_cost;
  std::optional<NodeId> candidate;
  bool established = false;
};

struct RoundSummary {
  Round round = 0;
  std::size_t dispatched = 0;
  std::size_t arrived = 0;
  std::size_t dead_end = 0;
  std::size_t blocked = 0;
  std::size_t negative_marks = 0;
  std::size_t overlay_links = 0;
  CostValue cost;        // C(G) with node-held demand estimates
  CostValue cost_truth;  // C(G) with the injected volume as demand
};

struct OverlayEvent {
  enum class Kind { kCreated, kExpired };
  Round round = 0;
  Kind kind = Kind::kCreated;
  LogicalLink link;
};

struct Metrics {
  std::vector<TraceRecord> trace;
  std::vector<RoundSummary> rounds;
  std::vector<OverlayEvent> overlay_events;
  // Arrived hop counts per destination, in dispatch order, with their round.
  std::map<NodeId, std::vector<std::pair<Round, int>>> arrivals;
  std::map<NodeId, int> min_hops;
  // Exploiter moves over a physical edge whose pheromone toward the ant's
  // destination was below tau_min when the move was chosen.
  std::size_t exploiter_physical_moves = 0;
  std::size_t no_entry_violations = 0;
  // Pheromone entries seen outside [-tau0, tau0] at periodic checks.
  std::size_t closure_violations = 0;
};

// Fills in defaults (destinations) and rejects invalid settings with
// std::invalid_argument. Generates the network if none was supplied.
SimConfig Resolve(SimConfig config);

// One simulation instance. Not thread-safe; independent instances are.
class Simulation {
 public:
  explicit Simulation(SimConfig config);

  // Runs the next round; returns false once `rounds` have been run.
  bool Step();
  void RunToEnd();

  Round round() const { return round_; }
  const SimConfig& config() const { return config_; }
  const PhysicalNetwork& network() const { return *config_.network; }
  const OverlayNetwork& overlay() const { return overlay_; }
  const std::vector<NodeState>& states() const { return states_; }
  const Metrics& metrics() const { return metrics_; }

 private:
  SimConfig config_;
  Rng rng_;
  OverlayNetwork overlay_;
  std::vector<NodeState> states_;
  Metrics metrics_;
  Round round_ = 0;
};

Metrics Run(const SimConfig& config);

// C(G) over the configured (src, dst) pairs. With `truth` unset the demand
// is the estimate held at src; otherwise it is the given injected volume.
CostValue SampleTotalCost(std::span<const NodeState> states,
                          const OverlayNetwork& overlay,
                          const PhysicalNetwork& net, const SimConfig& config,
                          std::optional<double> truth = std::nullopt);

}  // namespace dps

#endif  // DPS_ENGINE_H
