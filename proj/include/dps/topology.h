#ifndef DPS_TOPOLOGY_H
#define DPS_TOPOLOGY_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace dps {

// Dense node index in [0, n).
using NodeId = std::uint32_t;

// Simulation time, counted in rounds.
using Round = std::int64_t;

using Edge = std::pair<NodeId, NodeId>;

// Undirected, unweighted, connected physical substrate.
//
// Edges are stored canonically (u < v, sorted) and every adjacency list is
// sorted by neighbor id, which is what makes path tie-breaking deterministic.
class PhysicalNetwork {
 public:
  // Throws std::invalid_argument on self-loops, duplicates, out-of-range ids,
  // or a disconnected edge set.
  PhysicalNetwork(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeId>& neighbors(NodeId node) const {
    return adjacency_.at(node);
  }
  bool HasEdge(NodeId a, NodeId b) const;
  double MeanDegree() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

// Uniform random spanning tree (Aldous-Broder random walk) topped up with
// uniformly random extra edges until n * avg_degree / 2 edges exist.
// Throws std::invalid_argument when the combination is infeasible.
PhysicalNetwork GenerateRandomNetwork(std::size_t node_count, double avg_degree,
                                      std::uint64_t seed);

// BFS hop distance from src to every node.
std::vector<int> ShortestHops(const PhysicalNetwork& net, NodeId src);

// A shortest path src..dst inclusive. Ties go to the lowest neighbor id.
std::vector<NodeId> PhysicalPath(const PhysicalNetwork& net, NodeId src,
                                 NodeId dst);

// "n <count>" then one sorted "u v" line per edge. ReadGraph also skips
// blank lines and '#' comments.
void WriteGraph(std::ostream& out, const PhysicalNetwork& net);
PhysicalNetwork ReadGraph(std::istream& in);

// Canonical-edge-list fingerprint (64-bit FNV-1a over the graph file text).
std::uint64_t Fingerprint(const PhysicalNetwork& net);

struct LogicalLink {
  NodeId owner = 0;
  NodeId endpoint = 0;
  NodeId serves_dst = 0;
  std::vector<NodeId> physical_path;
  int hop_length = 0;
  Round created_round = 0;
  Round expires_round = 0;

  bool operator==(const LogicalLink&) const = default;
};

// Destination-tagged virtual links; at most one per (owner, serves_dst).
class OverlayNetwork {
 public:
  using Key = std::pair<NodeId, NodeId>;  // (owner, serves_dst)

  // Creates owner->endpoint for serves_dst unless that slot is taken, in
  // which case nothing changes and nullopt is returned. The physical path is
  // frozen at creation. Throws std::invalid_argument if owner == endpoint.
  std::optional<LogicalLink> Establish(const PhysicalNetwork& net,
                                       NodeId owner, NodeId endpoint,
                                       NodeId serves_dst, Round now,
                                       Round ttl);

  // Removes every link with expires_round <= now; returns them.
  std::vector<LogicalLink> Expire(Round now);

  const LogicalLink* Find(NodeId owner, NodeId serves_dst) const;
  std::size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }
  const std::map<Key, LogicalLink>& links() const { return links_; }

  // Inserts a fully specified link (snapshot loading). Throws if the slot is
  // taken or the link is malformed with respect to net.
  void Insert(const PhysicalNetwork& net, LogicalLink link);

 private:
  std::map<Key, LogicalLink> links_;
};

// Minimum number of virtual links from i to j when every logical link and
// every physical edge count as one arc each. nullopt if unreachable.
std::optional<int> OverlayTransitCount(const OverlayNetwork& overlay,
                                       const PhysicalNetwork& net, NodeId i,
                                       NodeId j);

// "owner endpoint serves_dst hop_length expires_round" per line.
void WriteOverlayLinks(std::ostream& out, const OverlayNetwork& overlay);

// Parses link lines (skipping blank lines and '#' comments). Physical paths
// are recomputed with PhysicalPath(); created_round is set to
// expires_round - 1 since the snapshot does not carry it.
OverlayNetwork ReadOverlayLinks(std::istream& in, const PhysicalNetwork& net);

}  // namespace dps

#endif  // DPS_TOPOLOGY_H
