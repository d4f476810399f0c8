#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "dps/colony.h"
#include "dps/random.h"

using namespace dps;

namespace {

const ColonyParams kRef{};

// A few ulps at the magnitude of the expected value.
bool UlpClose(double got, double want) {
  return std::abs(got - want) <=
         4.0 * std::numeric_limits<double>::epsilon() * std::abs(want);
}

}  // namespace

TEST_CASE("reference parameters validate; bad ones do not") {
  CHECK_NOTHROW(kRef.Validate());
  ColonyParams p;
  p.rho = 1.0;
  CHECK_THROWS_AS(p.Validate(), std::invalid_argument);
  p = {};
  p.tau_min = 0.2;
  CHECK_THROWS_AS(p.Validate(), std::invalid_argument);
  p = {};
  p.q = 0.0;
  CHECK_THROWS_AS(p.Validate(), std::invalid_argument);
  p = {};
  p.tau_min = -1.0;  // filter disabled
  CHECK_NOTHROW(p.Validate());
}

TEST_CASE("local positive update") {
  CHECK(UlpClose(LocalPositiveUpdate(0.05, kRef), 0.0525));
  CHECK(LocalPositiveUpdate(kRef.tau0, kRef) == kRef.tau0);
}

TEST_CASE("local positive update contracts toward tau0 by 1-rho") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    double tau = -kRef.tau0 + 2.0 * kRef.tau0 * rng.UniformReal();
    for (int step = 0; step < 1000; ++step) {
      const double gap = std::abs(tau - kRef.tau0);
      tau = LocalPositiveUpdate(tau, kRef);
      const double next_gap = std::abs(tau - kRef.tau0);
      CHECK(next_gap <= gap);
      if (gap > 1e-12) CHECK(std::abs(next_gap - (1 - kRef.rho) * gap) <= 1e-15);
    }
  }
}

TEST_CASE("negative update") {
  CHECK(UlpClose(NegativeUpdate(0.1, kRef), -0.1));
  CHECK(UlpClose(NegativeUpdate(0.0, kRef), -0.002));
  for (int k = 0; k <= 1000; ++k) {
    const double tau = -kRef.tau0 + 2.0 * kRef.tau0 * k / 1000.0;
    const double out = NegativeUpdate(tau, kRef);
    CHECK(out >= -kRef.tau0);
    CHECK(out <= kRef.tau0);
  }
  // Marking twice follows the formula: the sign flips back.
  CHECK(NegativeUpdate(NegativeUpdate(0.1, kRef), kRef) > 0.0);
}

TEST_CASE("global evaporation") {
  CHECK(UlpClose(GlobalEvaporate(0.1, kRef), 0.098));
  CHECK(GlobalEvaporate(0.0, kRef) == 0.0);
  CHECK(UlpClose(GlobalEvaporate(-0.1, kRef), -0.098));
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const double tau = -0.1 + 0.2 * rng.UniformReal();
    CHECK(std::abs(GlobalEvaporate(tau, kRef)) == (1 - kRef.rho_g) * std::abs(tau));
  }
}

TEST_CASE("demand update") {
  CHECK(UlpClose(UpdateDemand(0.0, 10.0, kRef), 0.5));
  CHECK(UpdateDemand(4.0, 4.0, kRef) == 4.0);
  double d = 0.0;
  const double v = 3.0;
  for (int k = 1; k <= 200; ++k) {
    d = UpdateDemand(d, v, kRef);
    const double closed = v * (1.0 - std::pow(1.0 - kRef.rho, k));
    CHECK(std::abs(d - closed) <= 1e-12);
  }
}

TEST_CASE("demand update is a convex combination") {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const double d = 10 * rng.UniformReal();
    const double v = 10 * rng.UniformReal();
    const double out = UpdateDemand(d, v, kRef);
    CHECK(out >= std::min(d, v));
    CHECK(out <= std::max(d, v));
  }
}

TEST_CASE("hops from is a running minimum") {
  CHECK(UpdateHopsFrom(std::nullopt, 5) == 5);
  CHECK(UpdateHopsFrom(3, 5) == 3);
  CHECK(UpdateHopsFrom(5, 3) == 3);
}

TEST_CASE("eta update keeps the better desirability") {
  CHECK(UpdateEta(0.0, 4) == 0.25);
  CHECK(UpdateEta(0.5, 4) == 0.5);
  CHECK(UpdateEta(0.2, 2) == 0.5);
  CHECK(UpdateEta(0.2, 0) == 0.2);
  Rng rng(4);
  double eta = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double next = UpdateEta(eta, static_cast<int>(rng.UniformIndex(12)));
    CHECK(next >= eta);
    eta = next;
  }
}

TEST_CASE("sigma update") {
  CHECK(UlpClose(*UpdateSigma(0.1, 50.0, kRef), 0.195));
  CHECK(*UpdateSigma(0.1, 1e12, kRef) == kRef.sigma0);
  CHECK(UlpClose(*UpdateSigma(2.0, 50.0, kRef), 2.0));
  CHECK_FALSE(UpdateSigma(0.1, 0.0, kRef));
  Rng rng(6);
  double sigma = kRef.sigma0;
  for (int i = 0; i < 1000; ++i) {
    sigma = *UpdateSigma(sigma, 1.0 + 1000 * rng.UniformReal(), kRef);
    CHECK(sigma >= kRef.sigma0);
  }
}

TEST_CASE("hops to") {
  CHECK(UpdateHopsTo(7, 3) == 4);
  CHECK(UpdateHopsTo(7, 0) == 7);
  CHECK_THROWS_AS(UpdateHopsTo(3, 4), std::logic_error);
}

TEST_CASE("pheromone closure under random interleavings") {
  Rng rng(1);
  for (int seq = 0; seq < 200; ++seq) {
    double tau = kRef.tau0;
    for (int step = 0; step < 500; ++step) {
      switch (rng.UniformIndex(3)) {
        case 0:
          tau = LocalPositiveUpdate(tau, kRef);
          break;
        case 1:
          tau = NegativeUpdate(tau, kRef);
          break;
        default:
          tau = GlobalEvaporate(tau, kRef);
      }
      REQUIRE(tau >= -kRef.tau0);
      REQUIRE(tau <= kRef.tau0);
    }
  }
}

TEST_CASE("update rules are bit-exact pure functions") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const double x = rng.UniformReal();
    CHECK(LocalPositiveUpdate(x, kRef) == LocalPositiveUpdate(x, kRef));
    CHECK(NegativeUpdate(x, kRef) == NegativeUpdate(x, kRef));
    CHECK(UpdateDemand(x, 1.0, kRef) == UpdateDemand(x, 1.0, kRef));
  }
}

TEST_CASE("pheromone table defaults and evaporation") {
  PheromoneTable table;
  CHECK(table.Get(1, 2, 0.1) == 0.1);
  CHECK(table.entries().empty());
  table.At(1, 2, 0.1) = -0.05;
  table.At(3, 2, 0.1);
  table.Evaporate(kRef);
  CHECK(table.Get(1, 2, 0.1) == (1 - kRef.rho_g) * -0.05);
  CHECK(table.Get(3, 2, 0.1) == (1 - kRef.rho_g) * 0.1);
}

TEST_CASE("node state defaults") {
  NodeState s(kRef.sigma0);
  CHECK(s.sigma == kRef.sigma0);
  CHECK(s.Eta(4) == 0.0);
  CHECK(s.Demand(4) == 0.0);
  CHECK_FALSE(s.HopsFrom(0));
  CHECK_FALSE(s.HopsTo(4));
  CHECK(NodeState(0.1, 0.2).Eta(4) == 0.2);
}

TEST_CASE("state snapshot format") {
  std::vector<NodeState> states(2, NodeState(0.1));
  states[1].pheromone.At(0, 0, 0.1) = 0.0525;
  states[1].eta[0] = 0.25;
  states[1].demand_est[0] = 0.5;
  states[1].hops_from[0] = 1;
  states[1].hops_to[0] = 1;
  std::ostringstream out;
  WriteStateSnapshot(out, states);
  const std::string text = out.str();
  CHECK(text.find("node 0\nsigma 0.1\n") != std::string::npos);
  CHECK(text.find("tau 0 0 0.0525\n") != std::string::npos);
  CHECK(text.find("eta 0 0.25\n") != std::string::npos);
  CHECK(text.find("d 0 0.5\n") != std::string::npos);
  CHECK(text.find("hops_from 0 1\n") != std::string::npos);
  CHECK(text.find("hops_to 0 1\n") != std::string::npos);
}
