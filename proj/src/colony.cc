#include "dps/colony.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dps {
namespace {

bool InOpenUnit(double x) { return x > 0.0 && x < 1.0; }

std::string Real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

}  // namespace

void ColonyParams::Validate() const {
  if (!InOpenUnit(rho) || !InOpenUnit(rho_g) || !InOpenUnit(rho_n)) {
    throw std::invalid_argument("evaporation rates must lie in (0, 1)");
  }
  if (!(tau0 > 0.0) || !(tau0 > tau_min) || !std::isfinite(tau_min)) {
    throw std::invalid_argument("need tau0 > 0 and tau0 > tau_min");
  }
  if (!(q > 0.0) || !(sigma0 > 0.0)) {
    throw std::invalid_argument("Q and sigma0 must be positive");
  }
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    throw std::invalid_argument("alpha and beta must be >= 0");
  }
}

double UpdateEta(double eta, int denominator) {
  if (denominator <= 0) return eta;
  return std::max(eta, 1.0 / denominator);
}

std::optional<double> UpdateSigma(double sigma, double cost,
                                  const ColonyParams& p) {
  if (!(cost > 0.0)) return std::nullopt;
  return std::max(p.sigma0, (1.0 - p.rho) * sigma + p.rho * (p.q / cost));
}

int UpdateHopsTo(int hop_count, int hops_from_src) {
  int hops = hop_count - hops_from_src;
  if (hops < 0) {
    throw std::logic_error("hop estimate from src exceeds the walk length (" +
                           std::to_string(hops_from_src) + " > " +
                           std::to_string(hop_count) + ")");
  }
  return hops;
}

double PheromoneTable::Get(NodeId neighbor, NodeId dst, double tau0) const {
  auto it = tau_.find({neighbor, dst});
  return it == tau_.end() ? tau0 : it->second;
}

double& PheromoneTable::At(NodeId neighbor, NodeId dst, double tau0) {
  return tau_.try_emplace({neighbor, dst}, tau0).first->second;
}

void PheromoneTable::Evaporate(const ColonyParams& p) {
  for (auto& [key, tau] : tau_) tau = GlobalEvaporate(tau, p);
}

double NodeState::Eta(NodeId dst) const {
  auto it = eta.find(dst);
  return it == eta.end() ? eta0 : it->second;
}

double NodeState::Demand(NodeId dst) const {
  auto it = demand_est.find(dst);
  return it == demand_est.end() ? 0.0 : it->second;
}

std::optional<int> NodeState::HopsFrom(NodeId src) const {
  auto it = hops_from.find(src);
  if (it == hops_from.end()) return std::nullopt;
  return it->second;
}

std::optional<int> NodeState::HopsTo(NodeId dst) const {
  auto it = hops_to.find(dst);
  if (it == hops_to.end()) return std::nullopt;
  return it->second;
}

void WriteStateSnapshot(std::ostream& out, std::span<const NodeState> states) {
  for (std::size_t i = 0; i < states.size(); ++i) {
    const NodeState& s = states[i];
    out << "node " << i << '\n';
    for (const auto& [key, tau] : s.pheromone.entries()) {
      out << "tau " << key.first << ' ' << key.second << ' ' << Real(tau)
          << '\n';
    }
    for (const auto& [dst, v] : s.eta) {
      out << "eta " << dst << ' ' << Real(v) << '\n';
    }
    out << "sigma " << Real(s.sigma) << '\n';
    for (const auto& [dst, v] : s.demand_est) {
      out << "d " << dst << ' ' << Real(v) << '\n';
    }
    for (const auto& [src, v] : s.hops_from) {
      out << "hops_from " << src << ' ' << v << '\n';
    }
    for (const auto& [dst, v] : s.hops_to) {
      out << "hops_to " << dst << ' ' << v << '\n';
    }
  }
}

}  // namespace dps
