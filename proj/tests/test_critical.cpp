#include "abnet/critical.hpp"
#include "abnet/zoo.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace abnet;

TEST_CASE("two-letter example: groups, iota and recurrent count") {
  const ProductionData pd = production_data(fixtures::nonrectangular());
  const CriticalReport r = critical_report(pd);
  CHECK(r.crit.invariant_factors == std::vector<Int>{2});
  CHECK(r.laplacian_cokernel.invariant_factors == std::vector<Int>{2, 2});
  CHECK(r.det_laplacian == 4);
  CHECK(r.iota == 2);
  CHECK(r.rec_count == 2);
  CHECK_FALSE(r.rectangular);
  CHECK_FALSE(is_rectangular(pd));
}

TEST_CASE("triangle sandpile: Z/3 and three recurrent states") {
  const ProductionData pd = production_data(fixtures::triangle());
  const CriticalReport r = critical_report(pd);
  CHECK(r.crit.invariant_factors == std::vector<Int>{3});
  CHECK(r.laplacian_cokernel == r.crit);
  CHECK(r.rec_count == 3);
  CHECK(r.rectangular);
  // Independent: invariant factors of the reduced Laplacian by determinantal divisors.
  CHECK(oracle::invariant_factors(IntMatrix{{2, -1}, {-1, 2}}) == std::vector<Int>{3});
}

TEST_CASE("single sink: everything trivial") {
  const ProductionData pd = production_data(NetworkSpec({fixtures::sink(0, 1)}));
  const CriticalReport r = critical_report(pd);
  CHECK(r.crit.trivial());
  CHECK(r.laplacian_cokernel.trivial());
  CHECK(r.rec_count == 1);
  CHECK(r.rectangular);
}

TEST_CASE("critical group agrees with determinantal divisors of (I - P) K") {
  for (const auto& net : {fixtures::nonrectangular(), fixtures::triangle(), fixtures::cycle_with_sink(4)}) {
    const ProductionData pd = production_data(net);
    const std::size_t n = pd.letter_count();
    IntMatrix m(n, n);
    const auto basis = pd.kernel.basis_vectors();
    for (std::size_t j = 0; j < n; ++j) {
      const RationalVector col = (RationalMatrix::identity(n) - pd.production) * to_rational(basis[j]);
      for (std::size_t i = 0; i < n; ++i) m(i, j) = numerator(col[i]);
    }
    CHECK(critical_group(pd).invariant_factors == oracle::invariant_factors(m));
    CHECK(critical_group(pd).order() * iota(pd) == det_exact(pd.laplacian));
    CHECK(laplacian_cokernel(pd).order() % critical_group(pd).order() == 0);
  }
}

TEST_CASE("homotopy: sandpile and rotor agree, sandpilization differs") {
  const auto g = fixtures::triangle_graph();
  const ProductionData sand = production_data(build_sandpile(g));
  const ProductionData rotor = production_data(build_rotor(g));
  CHECK(homotopic(sand, rotor));
  CHECK(homotopic(sand, sand));
  const ProductionData ex = production_data(fixtures::nonrectangular());
  const ProductionData ex_s = production_data(sandpilize(ex));
  CHECK_FALSE(homotopic(ex, ex_s));
  CHECK_THROWS_AS(homotopic(ex, production_data(NetworkSpec({fixtures::sink(0, 1)}))), Error);
}

TEST_CASE("non-halting networks have no recurrent count") {
  const ProductionData pd = production_data(fixtures::closed_pair());
  try {
    recurrent_count(pd);
    FAIL("expected non-halting error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_halting);
  }
}
