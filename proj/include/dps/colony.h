#ifndef DPS_COLONY_H
#define DPS_COLONY_H

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <utility>

#include "dps/topology.h"

namespace dps {

struct ColonyParams {
  double alpha = 1.0;     // pheromone exponent
  double beta = 3.0;      // desirability exponent
  double rho = 0.05;      // local evaporation
  double rho_g = 0.02;    // global evaporation
  double rho_n = 0.02;    // negative evaporation
  double tau0 = 0.1;      // initial pheromone
  double tau_min = 0.01;  // no-entry threshold; <= -tau0 disables the filter
  double q = 100.0;       // overlay value scale
  double sigma0 = 0.1;    // overlay value floor

  // Throws std::invalid_argument when a rate leaves (0,1), tau0 <= tau_min,
  // tau0, q or sigma0 is not positive, or an exponent is negative.
  void Validate() const;
};

enum class EtaDenominator { kHopsToDst, kHopsToSrc };

// Update rules. All are pure.

inline double LocalPositiveUpdate(double tau, const ColonyParams& p) {
  return (1.0 - p.rho) * tau + p.rho * p.tau0;
}

// Repellent marking: the result carries the opposite sign.
inline double NegativeUpdate(double tau, const ColonyParams& p) {
  return -((1.0 - p.rho_n) * tau + p.rho_n * p.tau0);
}

inline double GlobalEvaporate(double tau, const ColonyParams& p) {
  return (1.0 - p.rho_g) * tau;
}

inline double UpdateDemand(double d, double volume, const ColonyParams& p) {
  return (1.0 - p.rho) * d + p.rho * volume;
}

// Absent estimate means "infinite".
inline int UpdateHopsFrom(std::optional<int> current, int hop_count) {
  return current && *current < hop_count ? *current : hop_count;
}

// max(eta, 1/denominator); a denominator of 0 leaves eta unchanged.
double UpdateEta(double eta, int denominator);

// max(sigma0, (1-rho) sigma + rho Q / cost), or nullopt when cost <= 0.
std::optional<double> UpdateSigma(double sigma, double cost,
                                  const ColonyParams& p);

// hop_count - hops_from_src. Throws std::logic_error if negative, which
// means the forward pass left inconsistent hop estimates.
int UpdateHopsTo(int hop_count, int hops_from_src);

// Per-node pheromone entries keyed by (next hop, destination). Entries that
// were never created read as tau0.
class PheromoneTable {
 public:
  using Key = std::pair<NodeId, NodeId>;  // (neighbor, dst)

  double Get(NodeId neighbor, NodeId dst, double tau0) const;
  double& At(NodeId neighbor, NodeId dst, double tau0);
  void Evaporate(const ColonyParams& p);
  const std::map<Key, double>& entries() const { return tau_; }

 private:
  std::map<Key, double> tau_;
};

struct NodeState {
  PheromoneTable pheromone;
  std::map<NodeId, double> eta;         // desirability toward dst
  double sigma = 0.0;                   // overlay value of this node
  std::map<NodeId, double> demand_est;  // EMA of volume toward dst
  std::map<NodeId, int> hops_from;      // best hop count from src
  std::map<NodeId, int> hops_to;        // latest hop estimate to dst
  double eta0 = 0.0;                    // desirability before any estimate

  explicit NodeState(double sigma0 = 0.1, double initial_eta = 0.0)
      : sigma(sigma0), eta0(initial_eta) {}

  double Eta(NodeId dst) const;
  double Demand(NodeId dst) const;
  std::optional<int> HopsFrom(NodeId src) const;
  std::optional<int> HopsTo(NodeId dst) const;
};

// Per node: "node <i>", then "tau <neighbor> <dst> <v>", "eta <dst> <v>",
// "sigma <v>", "d <dst> <v>", "hops_from <src> <v>", "hops_to <dst> <v>",
// reals with 9 significant digits.
void WriteStateSnapshot(std::ostream& out, std::span<const NodeState> states);

}  // namespace dps

#endif  // DPS_COLONY_H
