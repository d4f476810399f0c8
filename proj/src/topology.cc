#include "dps/topology.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dps/random.h"

namespace dps {
namespace {

Edge Canonical(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool IsConnected(const std::vector<std::vector<NodeId>>& adjacency) {
  if (adjacency.empty()) return true;
  std::vector<bool> seen(adjacency.size(), false);
  std::vector<NodeId> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == adjacency.size();
}

}  // namespace

PhysicalNetwork::PhysicalNetwork(std::size_t node_count,
                                 std::vector<Edge> edges)
    : adjacency_(node_count) {
  if (node_count == 0) throw std::invalid_argument("network has no nodes");
  for (auto& e : edges) {
    if (e.first >= node_count || e.second >= node_count) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(e.first) + " " +
                                  std::to_string(e.second));
    }
    if (e.first == e.second) {
      throw std::invalid_argument("self-loop at node " +
                                  std::to_string(e.first));
    }
    e = Canonical(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->first) +
                                " " + std::to_string(dup->second));
  }
  for (const auto& [u, v] : edges) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  if (!IsConnected(adjacency_)) {
    throw std::invalid_argument("physical network is not connected");
  }
  edges_ = std::move(edges);
}

bool PhysicalNetwork::HasEdge(NodeId a, NodeId b) const {
  if (a >= node_count() || b >= node_count()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

double PhysicalNetwork::MeanDegree() const {
  return 2.0 * static_cast<double>(edges_.size()) /
         static_cast<double>(node_count());
}

PhysicalNetwork GenerateRandomNetwork(std::size_t node_count,
                                      double avg_degree, std::uint64_t seed) {
  if (node_count < 2) {
    throw std::invalid_argument("random network needs at least 2 nodes");
  }
  const double n = static_cast<double>(node_count);
  const double target = n * avg_degree / 2.0;
  const double max_edges = n * (n - 1.0) / 2.0;
  if (!std::isfinite(target) || std::fabs(target - std::round(target)) > 1e-9) {
    throw std::invalid_argument("n * avg_degree / 2 must be an integer");
  }
  const auto edge_count = static_cast<std::size_t>(std::llround(target));
  if (edge_count < node_count - 1) {
    throw std::invalid_argument(
        "average degree too low for a connected graph: need >= " +
        std::to_string(2.0 * (n - 1.0) / n));
  }
  if (static_cast<double>(edge_count) > max_edges) {
    throw std::invalid_argument("average degree exceeds the complete graph");
  }

  Rng rng(seed);
  std::set<Edge> chosen;

  // Aldous-Broder on the complete graph: the first-entrance edges of a
  // random walk form a uniform spanning tree.
  std::vector<bool> visited(node_count, false);
  NodeId current = static_cast<NodeId>(rng.UniformIndex(node_count));
  visited[current] = true;
  std::size_t remaining = node_count - 1;
  while (remaining > 0) {
    auto step = static_cast<NodeId>(rng.UniformIndex(node_count - 1));
    NodeId next = step >= current ? step + 1 : step;
    if (!visited[next]) {
      visited[next] = true;
      chosen.insert(Canonical(current, next));
      --remaining;
    }
    current = next;
  }

  std::vector<Edge> pool;
  for (NodeId u = 0; u < node_count; ++u) {
    for (NodeId v = u + 1; v < node_count; ++v) {
      if (!chosen.contains({u, v})) pool.push_back({u, v});
    }
  }
  const std::size_t extra = edge_count - chosen.size();
  for (std::size_t i = 0; i < extra; ++i) {
    std::size_t pick = i + rng.UniformIndex(pool.size() - i);
    std::swap(pool[i], pool[pick]);
    chosen.insert(pool[i]);
  }
  return PhysicalNetwork(node_count, {chosen.begin(), chosen.end()});
}

std::vector<int> ShortestHops(const PhysicalNetwork& net, NodeId src) {
  std::vector<int> dist(net.node_count(), -1);
  std::deque<NodeId> queue = {src};
  dist.at(src) = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : net.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<NodeId> PhysicalPath(const PhysicalNetwork& net, NodeId src,
                                 NodeId dst) {
  const std::size_t n = net.node_count();
  if (src >= n || dst >= n) throw std::out_of_range("node id out of range");
  std::vector<NodeId> parent(n, n);
  std::vector<bool> seen(n, false);
  std::deque<NodeId> queue = {src};
  seen[src] = true;
  while (!queue.empty() && !seen[dst]) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : net.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  std::vector<NodeId> path = {dst};
  while (path.back() != src) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

void WriteGraph(std::ostream& out, const PhysicalNetwork& net) {
  out << "n " << net.node_count() << '\n';
  for (const auto& [u, v] : net.edges()) out << u << ' ' << v << '\n';
}

PhysicalNetwork ReadGraph(std::istream& in) {
  std::string line;
  long long count = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string extra;
    if (!have_header) {
      std::string tag;
      if (!(fields >> tag >> count) || tag != "n" || count <= 0 ||
          fields >> extra) {
        throw std::invalid_argument(
            "graph file must start with 'n <node_count>'");
      }
      have_header = true;
      continue;
    }
    long long u = 0, v = 0;
    if (!(fields >> u >> v) || fields >> extra) {
      throw std::invalid_argument("malformed edge line: " + line);
    }
    if (u < 0 || v < 0 || u >= count || v >= count) {
      throw std::invalid_argument("edge endpoint out of range: " + line);
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (!have_header) {
    throw std::invalid_argument("graph file must start with 'n <node_count>'");
  }
  return PhysicalNetwork(static_cast<std::size_t>(count), std::move(edges));
}

std::uint64_t Fingerprint(const PhysicalNetwork& net) {
  std::ostringstream text;
  WriteGraph(text, net);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text.str()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::optional<LogicalLink> OverlayNetwork::Establish(
    const PhysicalNetwork& net, NodeId owner, NodeId endpoint,
    NodeId serves_dst, Round now, Round ttl) {
  if (owner == endpoint) {
    throw std::invalid_argument("logical link owner equals endpoint");
  }
  if (ttl <= 0) throw std::invalid_argument("link ttl must be positive");
  if (links_.contains({owner, serves_dst})) return std::nullopt;
  LogicalLink link;
  link.owner = owner;
  link.endpoint = endpoint;
  link.serves_dst = serves_dst;
  link.physical_path = PhysicalPath(net, owner, endpoint);
  link.hop_length = static_cast<int>(link.physical_path.size()) - 1;
  link.created_round = now;
  link.expires_round = now + ttl;
  links_.emplace(Key{owner, serves_dst}, link);
  return link;
}

std::vector<LogicalLink> OverlayNetwork::Expire(Round now) {
  std::vector<LogicalLink> removed;
  for (auto it = links_.begin(); it != links_.end();) {
    if (it->second.expires_round <= now) {
      removed.push_back(std::move(it->second));
      it = links_.erase(it);
    } else {
      ++it;
    }
  }
  return removed;
}

const LogicalLink* OverlayNetwork::Find(NodeId owner, NodeId serves_dst) const {
  auto it = links_.find({owner, serves_dst});
  return it == links_.end() ? nullptr : &it->second;
}

void OverlayNetwork::Insert(const PhysicalNetwork& net, LogicalLink link) {
  const auto& path = link.physical_path;
  bool valid = link.owner != link.endpoint && path.size() >= 2 &&
               path.front() == link.owner && path.back() == link.endpoint &&
               link.hop_length == static_cast<int>(path.size()) - 1 &&
               link.expires_round > link.created_round;
  for (std::size_t k = 0; valid && k + 1 < path.size(); ++k) {
    valid = net.HasEdge(path[k], path[k + 1]);
  }
  if (!valid) throw std::invalid_argument("malformed logical link");
  if (!links_.emplace(Key{link.owner, link.serves_dst}, link).second) {
    throw std::invalid_argument("duplicate logical link for (owner, dst)");
  }
}

std::optional<int> OverlayTransitCount(const OverlayNetwork& overlay,
                                       const PhysicalNetwork& net, NodeId i,
                                       NodeId j) {
  const std::size_t n = net.node_count();
  if (i >= n || j >= n) return std::nullopt;
  std::vector<std::vector<NodeId>> arcs(n);
  for (const auto& [key, link] : overlay.links()) {
    arcs[link.owner].push_back(link.endpoint);
  }
  std::vector<int> dist(n, -1);
  std::deque<NodeId> queue = {i};
  dist[i] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    if (u == j) return dist[u];
    auto relax = [&](NodeId v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    };
    for (NodeId v : net.neighbors(u)) relax(v);
    for (NodeId v : arcs[u]) relax(v);
  }
  return std::nullopt;
}

void WriteOverlayLinks(std::ostream& out, const OverlayNetwork& overlay) {
  for (const auto& [key, link] : overlay.links()) {
    out << link.owner << ' ' << link.endpoint << ' ' << link.serves_dst << ' '
        << link.hop_length << ' ' << link.expires_round << '\n';
  }
}

OverlayNetwork ReadOverlayLinks(std::istream& in, const PhysicalNetwork& net) {
  OverlayNetwork overlay;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long owner = 0, endpoint = 0, dst = 0, hops = 0;
    Round expires = 0;
    if (!(fields >> owner >> endpoint >> dst >> hops >> expires)) {
      throw std::invalid_argument("malformed overlay line: " + line);
    }
    const auto n = static_cast<long long>(net.node_count());
    if (owner < 0 || endpoint < 0 || dst < 0 || owner >= n || endpoint >= n ||
        dst >= n) {
      throw std::invalid_argument("overlay node id out of range: " + line);
    }
    LogicalLink link;
    link.owner = static_cast<NodeId>(owner);
    link.endpoint = static_cast<NodeId>(endpoint);
    link.serves_dst = static_cast<NodeId>(dst);
    link.physical_path = PhysicalPath(net, link.owner, link.endpoint);
    link.hop_length = static_cast<int>(hops);
    link.expires_round = expires;
    link.created_round = expires - 1;
    overlay.Insert(net, std::move(link));
  }
  return overlay;
}

}  // namespace dps
