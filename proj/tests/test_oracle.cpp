#include <set>

#include "abnet/critical.hpp"
#include "abnet/oracle.hpp"
#include "abnet/zoo.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace abnet;

TEST_CASE("state indexer round-trips") {
  const NetworkSpec net = fixtures::cycle_with_sink(3);
  const StateIndexer idx(net);
  CHECK(idx.size() == 8);
  for (std::size_t q = 0; q < idx.size(); ++q) CHECK(idx.encode(idx.decode(q)) == q);
  CHECK_THROWS_AS(StateIndexer(net, 7), Error);
}

TEST_CASE("global monoid of the two-letter example") {
  const NetworkSpec net = fixtures::nonrectangular();
  const GlobalMonoid gm = global_monoid(net);
  CHECK(gm.monoid.size() == 2);
  CHECK(gm.tau(0) == Transformation{1, 0});
  CHECK(gm.tau(1) == Transformation{1, 0});
  CHECK(gm.tau(2) == Transformation{0, 1});
  CHECK(gm.idempotent == identity_map(2));
  CHECK(gm.group.size() == 2);
  CHECK(recurrent_states(gm).size() == 2);
  CHECK(crit_group_oracle(gm).invariant_factors == std::vector<Int>{2});
  CHECK(free_and_transitive(gm));
}

TEST_CASE("global monoid of the triangle sandpile") {
  const NetworkSpec net = fixtures::triangle();
  const GlobalMonoid gm = global_monoid(net);
  CHECK(gm.group.size() == 3);
  const auto rec = recurrent_states(gm);
  const std::set<JointState> got(rec.begin(), rec.end());
  CHECK(got == std::set<JointState>{{1, 1, 0}, {0, 1, 0}, {1, 0, 0}});
  CHECK(crit_group_oracle(gm).invariant_factors == std::vector<Int>{3});
  CHECK(generators_permute_recurrent(gm));
}

TEST_CASE("single sink: trivial monoid") {
  const GlobalMonoid gm = global_monoid(NetworkSpec({fixtures::sink(0, 1)}));
  CHECK(gm.monoid.size() == 1);
  CHECK(crit_group_oracle(gm).trivial());
  CHECK(recurrent_states(gm).size() == 1);
  CHECK(adequate_support(gm, {1.0}));
}

TEST_CASE("oracle group decomposition on larger groups") {
  // K4 with a sink: sandpile group Z/4 x Z/4.
  const NetworkSpec net = build_sandpile(fixtures::complete_graph(4));
  const GlobalMonoid gm = global_monoid(net);
  CHECK(crit_group_oracle(gm).invariant_factors == std::vector<Int>{4, 4});
  CHECK(crit_group_oracle(gm) == critical_group(production_data(net)));
  CHECK(free_and_transitive(gm));
  // Path sandpile with a wide vertex: cyclic groups of composite order.
  const NetworkSpec c5 = build_sandpile(fixtures::bidirected_cycle(7));
  const GlobalMonoid gm5 = global_monoid(c5);
  CHECK(crit_group_oracle(gm5).invariant_factors == std::vector<Int>{7});
}

TEST_CASE("caps downgrade to oracle_unavailable") {
  try {
    global_monoid(build_sandpile(fixtures::complete_graph(4)), 10);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::oracle_unavailable);
  }
  try {
    global_monoid(fixtures::closed_pair());
    FAIL("non-halting network accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_halting);
  }
}

TEST_CASE("adequate support") {
  const NetworkSpec net = fixtures::triangle();
  const GlobalMonoid gm = global_monoid(net);
  CHECK(adequate_support(gm, {1.0 / 3, 1.0 / 3, 1.0 / 3}));
  CHECK_FALSE(adequate_support(gm, {0.0, 0.0, 1.0}));
  CHECK(adequate_support(gm, {1.0, 0.0, 0.0}));
}

TEST_CASE("markov chain") {
  const NetworkSpec ex = fixtures::nonrectangular();
  const MarkovRun alternating = run_markov(ex, {0.5, 0.5, 0.0}, {0, 0}, 6, 1);
  for (std::size_t s = 0; s < alternating.trajectory.size(); ++s)
    CHECK(alternating.trajectory[s][0] == s % 2);
  const MarkovRun none = run_markov(ex, {1.0, 0.0, 0.0}, {1, 0}, 0, 1);
  CHECK(none.trajectory.size() == 1);
  CHECK(none.visits.empty());

  const NetworkSpec tri = fixtures::triangle();
  std::mt19937_64 rng(4);
  JointState q{1, 1, 0};
  const std::set<JointState> rec{{1, 1, 0}, {0, 1, 0}, {1, 0, 0}};
  for (int s = 0; s < 200; ++s) {
    q = markov_step(tri, {0.25, 0.25, 0.5}, q, rng);
    CHECK(rec.count(q) == 1);
  }
  CHECK_THROWS_AS(run_markov(tri, {0.5, 0.6, 0.0}, {0, 0, 0}, 1, 1), Error);
  CHECK_THROWS_AS(run_markov(tri, {0.5, 0.5}, {0, 0, 0}, 1, 1), Error);
  const auto a = run_markov(tri, {0.3, 0.3, 0.4}, {0, 0, 0}, 500, 99);
  const auto b = run_markov(tri, {0.3, 0.3, 0.4}, {0, 0, 0}, 500, 99);
  CHECK(a.visits == b.visits);
}

TEST_CASE("expected odometer equals (I - P)^-1 x") {
  const NetworkSpec ex = fixtures::nonrectangular();
  const GlobalMonoid gm = global_monoid(ex);
  const ProductionData pd = production_data(ex);
  CHECK(expected_odometer_exact(ex, gm, {1, 0, 0}) ==
        RationalVector{Rational(1), Rational(0), Rational(3, 2)});
  CHECK(expected_odometer_exact(ex, gm, {0, 0, 1}) == RationalVector{0, 0, 1});
  CHECK(expected_odometer_exact(ex, gm, {0, 0, 0}) == RationalVector{0, 0, 0});
  CHECK(mean_odometer(pd, {1, 0, 0}) == RationalVector{Rational(1), Rational(0), Rational(3, 2)});
  // L y = (4,4,0) has y = (2,2,8).
  CHECK(rational_solve(pd.laplacian, RationalVector{4, 4, 0}) == RationalVector{2, 2, 8});
}

TEST_CASE("deviation scan") {
  const NetworkSpec ex = fixtures::nonrectangular();
  const ProductionData pd = production_data(ex);
  const auto states = all_states(ex);
  std::vector<CountVector> inputs;
  for (int n = 1; n <= 50; ++n) inputs.push_back({n, 0, 0});
  CHECK(deviation_scan(ex, pd, inputs, states) == Rational(1, 2));
  CHECK(deviation_scan(ex, pd, {{0, 0, 0}}, states) == 0);
}

TEST_CASE("dominating idempotent input") {
  const NetworkSpec tri = fixtures::triangle();
  const GlobalMonoid gm = global_monoid(tri);
  const CountVector x{3, 0, 1};
  const CountVector z = dominating_idempotent_input(tri, gm, x);
  CHECK(leq(x, z));
  CHECK(global_map(tri, gm, z) == gm.idempotent);
}

TEST_CASE("kernel of phi fixes recurrent states") {
  // For k in K with P k <= k, (I - P) k returns every recurrent state to itself.
  const NetworkSpec ex = fixtures::nonrectangular();
  const GlobalMonoid gm = global_monoid(ex);
  const CountVector x{2, 2, 0};  // (I - P)(2, 2, 4)
  for (StateId q : gm.recurrent) CHECK(global_map(ex, gm, x)[q] == q);
}
