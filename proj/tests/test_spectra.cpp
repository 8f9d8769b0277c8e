#include <random>

#include "abnet/nocycle.hpp"
#include "abnet/spectra.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace abnet;

TEST_CASE("two-letter example: K, P and L") {
  const NetworkSpec net = fixtures::nonrectangular();
  const ProductionData pd = production_data(net);
  CHECK(pd.kernel == Lattice::from_generators(3, {{1, 1, 0}, {0, 2, 0}, {0, 0, 1}}));
  CHECK(pd.reset == CountVector{2, 2, 1});
  RationalMatrix p(3, 3);
  p(2, 0) = Rational(3, 2);
  p(2, 1) = Rational(1, 2);
  CHECK(pd.production == p);
  CHECK(pd.laplacian == IntMatrix{{2, 0, 0}, {0, 2, 0}, {-3, -1, 1}});
  CHECK(pd.successors[0] == std::vector<LetterId>{2});
  CHECK(pd.successors[2].empty());
}

TEST_CASE("local action of 2 letters a from state 0 emits 3 letters c") {
  const NetworkSpec net = fixtures::nonrectangular();
  TotalState s = local_action(net, {2, 0, 0}, TotalState{zeros(3), {0, 0}});
  CHECK(s.pending == CountVector{0, 0, 3});
  CHECK(s.joint == JointState{0, 0});
  auto w = execute_word(net, {0, 0}, TotalState{{2, 0, 0}, {0, 0}});
  CHECK(w.legal);
  CHECK(w.state.pending == CountVector{0, 0, 3});
}

TEST_CASE("triangle sandpile: L and kernel") {
  const ProductionData pd = production_data(fixtures::triangle());
  CHECK(pd.laplacian == IntMatrix{{2, -1, 0}, {-1, 2, 0}, {-1, -1, 1}});
  CHECK(pd.kernel == Lattice::diagonal({2, 2, 1}));
  const ProductionData sink = production_data(NetworkSpec({fixtures::sink(0, 1)}));
  CHECK(sink.laplacian == IntMatrix{{1}});
  CHECK(sink.kernel == Lattice::whole(1));
}

TEST_CASE("single-edge sandpile has P_uv = 1") {
  const NetworkSpec net({fixtures::counter(1, 0, 2, {1}), fixtures::sink(1, 2)});
  const ProductionData pd = production_data(net);
  CHECK(pd.production(1, 0) == 1);
}

TEST_CASE("halting certificate") {
  auto ok = halting_check(IntMatrix{{2, 0, 0}, {0, 2, 0}, {-3, -1, 1}});
  CHECK(ok.halts);
  CHECK(ok.minors == std::vector<Int>{2, 4, 4});
  auto bad = halting_check(IntMatrix{{1, -1}, {-1, 1}});
  CHECK_FALSE(bad.halts);
  CHECK(bad.witness == 2);
  CHECK(bad.minors[1] == 0);
  CHECK(halting_check(IntMatrix{{1}}).halts);
  CHECK_THROWS_AS(halting_check(IntMatrix{{1, 1}, {0, 1}}), Error);
}

TEST_CASE("production matrix columns do not depend on the locally recurrent state") {
  // A vertex whose outputs are asymmetric per state but balanced over a period.
  ProcessorSpec p = fixtures::counter(3, 0, 2, {});
  p.output[0][0] = {0, 1};
  p.output[0][2] = {0, 2};
  const NetworkSpec net({p, fixtures::sink(1, 2)});
  const ProductionData pd = production_data(net);
  CHECK(pd.production(1, 0) == 1);
}

TEST_CASE("P is linear on K: simulated emission equals P k") {
  std::mt19937_64 rng(21);
  std::vector<NetworkSpec> nets{fixtures::nonrectangular(), fixtures::triangle(), fixtures::cycle_with_sink(3)};
  for (const auto& net : nets) {
    const ProductionData pd = production_data(net);
    const auto basis = pd.kernel.basis_vectors();
    for (int trial = 0; trial < 30; ++trial) {
      CountVector k = zeros(net.letter_count());
      for (const auto& b : basis) k += Int(static_cast<int>(rng() % 7) - 3) * b;
      const RationalVector expected = pd.production * to_rational(k);
      const CountVector simulated = simulated_emission(net, pd, k);
      CHECK(to_rational(simulated) == expected);
    }
  }
}

TEST_CASE("sandpilization has the same L and D") {
  const ProductionData pd = production_data(fixtures::nonrectangular());
  const NetworkSpec s = sandpilize(pd);
  CHECK(s.vertex_count() == 3);
  CHECK(s.vertex(0).state_count == 2);
  CHECK(s.vertex(1).state_count == 2);
  CHECK(s.vertex(2).state_count == 1);
  CHECK(s.vertex(0).output[0][1] == CountVector{0, 0, 3});
  const ProductionData spd = production_data(s);
  CHECK(spd.laplacian == pd.laplacian);
  CHECK(spd.reset == pd.reset);
  CHECK(spd.kernel == Lattice::diagonal(pd.reset));

  const ProductionData tri = production_data(fixtures::triangle());
  const ProductionData tri_s = production_data(sandpilize(tri));
  CHECK(tri_s.laplacian == tri.laplacian);
  CHECK(tri_s.kernel == tri.kernel);
}

TEST_CASE("halting certificate predicts termination") {
  const NetworkSpec closed = fixtures::closed_pair();
  const ProductionData pd = production_data(closed);
  CHECK_FALSE(halting_check(pd.laplacian).halts);
  CHECK_THROWS_AS(stabilize(closed, {1, 0}, {0, 0}, 1000), BudgetExhausted);

  std::mt19937_64 rng(8);
  const NetworkSpec tri = fixtures::triangle();
  CHECK(halting_check(production_data(tri).laplacian).halts);
  for (int trial = 0; trial < 50; ++trial) {
    CountVector x{static_cast<int>(rng() % 20), static_cast<int>(rng() % 20), static_cast<int>(rng() % 20)};
    CHECK_NOTHROW(stabilize(tri, x, {0, 0, 0}));
  }
}

TEST_CASE("cycle letters and acyclicity") {
  const ProductionData tri = production_data(fixtures::triangle());
  CHECK(cycle_letters(tri) == std::vector<bool>{true, true, false});
  CHECK_FALSE(production_graph_acyclic(tri));
  CHECK(production_graph_acyclic(production_data(fixtures::nonrectangular())));
}

TEST_CASE("nocycle battery: acyclic and cyclic networks") {
  SUBCASE("path into a sink") {
    const NetworkSpec net({fixtures::counter(1, 0, 2, {1}), fixtures::sink(1, 2)});
    const auto b = nocycle_battery(net, production_data(net));
    CHECK(b.locally_rec_implies_rec == true);
    CHECK(b.detl_eq_detd);
    CHECK(b.all_sandpilization_states_rec == true);
    CHECK(b.zero_state_rec);
    CHECK(b.gamma_acyclic);
    CHECK(b.p_nilpotent);
  }
  SUBCASE("triangle") {
    const NetworkSpec net = fixtures::triangle();
    const auto b = nocycle_battery(net, production_data(net));
    CHECK(b.locally_rec_implies_rec == false);
    CHECK_FALSE(b.detl_eq_detd);
    CHECK(b.all_sandpilization_states_rec == false);
    CHECK_FALSE(b.zero_state_rec);
    CHECK_FALSE(b.gamma_acyclic);
    CHECK_FALSE(b.p_nilpotent);
  }
  SUBCASE("single sink") {
    const NetworkSpec net({fixtures::sink(0, 1)});
    const auto b = nocycle_battery(net, production_data(net));
    CHECK(b.gamma_acyclic);
    CHECK(b.zero_state_rec);
    CHECK(b.locally_rec_implies_rec == true);
  }
  SUBCASE("non-halting network is rejected") {
    const NetworkSpec net = fixtures::closed_pair();
    CHECK_THROWS_AS(nocycle_battery(net, production_data(net)), Error);
  }
}
