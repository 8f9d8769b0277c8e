#include <algorithm>
#include <random>

#include "abnet/burning.hpp"
#include "abnet/critical.hpp"
#include "abnet/zoo.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace abnet;

namespace {

// Pointwise minimum of all y in [lower, bound]^n with L y >= 0, by enumeration.
CountVector brute_force_script(const IntMatrix& l, const CountVector& lower, int bound) {
  const std::size_t n = l.rows();
  CountVector best(n, Int(bound + 1));
  CountVector y = lower;
  bool found = false;
  for (;;) {
    if (is_nonnegative(l * y)) {
      found = true;
      for (std::size_t a = 0; a < n; ++a) best[a] = std::min(best[a], y[a]);
    }
    std::size_t a = 0;
    while (a < n && y[a] == bound) y[a++] = lower[a];
    if (a == n) break;
    y[a] += 1;
  }
  REQUIRE(found);
  return best;
}

}  // namespace

TEST_CASE("burning script on the two-letter example") {
  const IntMatrix l{{2, 0, 0}, {0, 2, 0}, {-3, -1, 1}};
  CHECK(burning_script(l) == CountVector{1, 1, 4});
  CHECK(burning_script(IntMatrix{{1}}) == CountVector{1});
  CHECK(brute_force_script(l, {1, 1, 1}, 6) == CountVector{1, 1, 4});
}

TEST_CASE("burning script agrees with brute force and is minimal") {
  std::vector<NetworkSpec> nets{fixtures::triangle(), fixtures::cycle_with_sink(3), fixtures::nonrectangular(),
                                build_sandpile(fixtures::complete_graph(4)),
                                build_sandpile(fixtures::bidirected_cycle(4))};
  for (const auto& net : nets) {
    const ProductionData pd = production_data(net);
    const CountVector y = burning_script(pd.laplacian);
    CHECK(y == brute_force_script(pd.laplacian, CountVector(y.size(), Int(1)), 6));
    for (std::size_t a = 0; a < y.size(); ++a) {
      if (y[a] == 1) continue;
      CountVector smaller = y;
      smaller[a] -= 1;
      CHECK_FALSE(is_nonnegative(pd.laplacian * smaller));
    }
  }
}

TEST_CASE("Eulerian sandpile: L 1 >= 0 off the sink and beta_v = d_vs") {
  const NetworkSpec net = build_sandpile(fixtures::bidirected_cycle(5));
  const ProductionData pd = production_data(net);
  const CountVector row_sums = pd.laplacian * CountVector(5, Int(1));
  for (std::size_t v = 0; v + 1 < 5; ++v) CHECK(row_sums[v] >= 0);
  const BurningCertificate cert = burning_element(pd);
  // Non-sink vertices adjacent to the sink c4 are c0 and c3.
  CHECK(cert.beta == CountVector{1, 0, 0, 1, 0});
  for (std::size_t v = 0; v + 1 < 5; ++v) CHECK(cert.y[v] == 1);

  // With a single edge into the sink the script is exactly 1.
  const NetworkSpec ring = fixtures::cycle_with_sink(3);
  CHECK(burning_script(production_data(ring).laplacian) == CountVector{1, 1, 1, 3});
  const NetworkSpec lone({fixtures::counter(1, 0, 2, {1}), fixtures::sink(1, 2)});
  CHECK(burning_script(production_data(lone).laplacian) == CountVector{1, 1});
}

TEST_CASE("both burning methods give (2,2,0) on the two-letter example") {
  const ProductionData pd = production_data(fixtures::nonrectangular());
  for (auto method : {BurningMethod::procedure, BurningMethod::sandpilization}) {
    const BurningCertificate cert = burning_element(pd, method);
    CHECK(cert.beta == CountVector{2, 2, 0});
    CHECK(cert.k == CountVector{2, 2, 4});
    CHECK(cert.y == CountVector{1, 1, 4});
    CHECK(cert.via == method);
  }
  const auto signed_result = stabilize_signed(pd.laplacian, pd.reset, {-1, -1, 3});
  CHECK(signed_result.chips == CountVector{-1, -1, 0});
  CHECK(signed_result.topplings == CountVector{0, 0, 3});
}

TEST_CASE("signed stabilization on the triangle") {
  const ProductionData pd = production_data(fixtures::triangle());
  CHECK(stabilize_signed(pd.laplacian, pd.reset, {2, 0, 0}).chips == CountVector{0, 1, 0});
  CHECK(stabilize_signed(pd.laplacian, pd.reset, {1, 1, 0}).chips == CountVector{1, 1, 0});
  CHECK(stabilize_signed(pd.laplacian, pd.reset, {-4, 1, 0}).chips == CountVector{-4, 1, 0});
}

TEST_CASE("refined certificate on a single sink is zero") {
  const ProductionData pd = production_data(NetworkSpec({fixtures::sink(0, 1)}));
  const BurningCertificate cert = burning_element(pd, BurningMethod::procedure, true);
  CHECK(cert.beta == CountVector{0});
  CHECK(cert.y == CountVector{0});
  const BurningCertificate plain = burning_element(pd);
  CHECK(plain.beta == CountVector{1});
}

TEST_CASE("burning test verdicts") {
  SUBCASE("two-letter example: both states recurrent with odometer k") {
    const NetworkSpec net = fixtures::nonrectangular();
    const ProductionData pd = production_data(net);
    const BurningCertificate cert = burning_element(pd);
    for (StateId q : {0u, 1u}) {
      const auto v = is_recurrent(net, pd, {q, 0}, cert);
      CHECK(v.recurrent);
      CHECK(v.odometer == CountVector{2, 2, 4});
    }
  }
  SUBCASE("triangle") {
    const NetworkSpec net = fixtures::triangle();
    const ProductionData pd = production_data(net);
    const BurningCertificate cert = burning_element(pd);
    CHECK_FALSE(is_recurrent(net, pd, {0, 0, 0}, cert).recurrent);
    CHECK(is_recurrent(net, pd, {1, 1, 0}, cert).recurrent);
    CHECK(is_recurrent(net, pd, {0, 1, 0}, cert).recurrent);
    CHECK(is_recurrent(net, pd, {1, 0, 0}, cert).recurrent);
    const BurningCertificate refined = burning_element(pd, BurningMethod::procedure, true);
    CHECK_FALSE(is_recurrent(net, pd, {0, 0, 0}, refined).recurrent);
    CHECK(is_recurrent(net, pd, {1, 1, 0}, refined).recurrent);
  }
  SUBCASE("tampered certificates are rejected") {
    const NetworkSpec net = fixtures::triangle();
    const ProductionData pd = production_data(net);
    BurningCertificate cert = burning_element(pd);
    cert.beta[0] += 1;
    CHECK_THROWS_AS(is_recurrent(net, pd, {1, 1, 0}, cert), Error);
  }
}
