#ifndef DPS_COST_H
#define DPS_COST_H

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <utility>

#include "dps/topology.h"

namespace dps {

struct CostParams {
  double c_h = 2.0;  // per physical hop of an owned logical link
  double c_t = 1.0;  // per transit virtual link per unit of demand

  void Validate() const;
};

// Per-node demand toward a destination subset. A pair is present iff the
// destination belongs to the node's subset; self-demand is rejected.
class TrafficDemand {
 public:
  // Throws std::invalid_argument on i == j or a negative/non-finite volume.
  void Set(NodeId i, NodeId j, double volume);
  double Get(NodeId i, NodeId j) const;  // 0 when j is not in S_i
  std::set<NodeId> Destinations(NodeId i) const;
  const std::map<std::pair<NodeId, NodeId>, double>& pairs() const {
    return demand_;
  }
  bool empty() const { return demand_.empty(); }

 private:
  std::map<std::pair<NodeId, NodeId>, double> demand_;
};

// "i j d_ij" per line; blank lines and '#' comments are skipped.
TrafficDemand ReadDemand(std::istream& in);

// A cost with unreachable destination pairs counted apart from the sum.
// The cost is infinite whenever unreachable_pairs > 0.
struct CostValue {
  double value = 0.0;
  std::size_t unreachable_pairs = 0;

  bool finite() const { return unreachable_pairs == 0; }
};

// C_i = sum_{j in B_i} c_h h_ij + sum_{j in S_i} c_t t_ij d_ij.
CostValue NodeCost(NodeId i, const OverlayNetwork& overlay,
                   const PhysicalNetwork& net, const TrafficDemand& demand,
                   const CostParams& params);

// C(G) = sum_i C_i.
CostValue TotalCost(const OverlayNetwork& overlay, const PhysicalNetwork& net,
                    const TrafficDemand& demand, const CostParams& params);

// Cost a backward ant assigns to anchoring an overlay link at a node.
inline double AntOverlayCost(int hops_to_src, double demand_estimate,
                             int hops_to_dst, const CostParams& params) {
  return params.c_h * hops_to_src +
         params.c_t * demand_estimate * hops_to_dst;
}

}  // namespace dps

#endif  // DPS_COST_H
