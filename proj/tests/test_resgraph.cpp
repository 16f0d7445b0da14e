#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "toricres/catalog.hpp"
#include "toricres/resgraph.hpp"

using namespace toricres;
using V = LatticeVector;

namespace {

std::vector<ChainSegment> chains_of(const FamilyId& id) {
  const auto g = enumerate_fan(ade_polynomial(id));
  return chain_segments(g, refine_fan(g));
}

const ChainSegment& chain_on(const std::vector<ChainSegment>& chains, const V& a, const V& b) {
  for (const auto& c : chains)
    if ((c.rays.front() == a && c.rays.back() == b) || (c.rays.front() == b && c.rays.back() == a)) return c;
  FAIL("no chain between " << a.to_string() << " and " << b.to_string());
  return chains.front();
}

}  // namespace

TEST_CASE("chain segments list the lattice points of each 2D skeleton cone in order") {
  const auto a3 = chains_of(make_family(Family::A, 3));
  REQUIRE(a3.size() == 1);
  CHECK(a3[0].rays == std::vector<V>{{4, 0, 1}, {3, 1, 1}, {2, 2, 1}, {1, 3, 1}, {0, 4, 1}});
  CHECK(a3[0].interior() == std::vector<V>{{3, 1, 1}, {2, 2, 1}, {1, 3, 1}});

  const auto d4 = chains_of(make_family(Family::D, 4));
  CHECK(chain_on(d4, {2, 0, 1}, {2, 2, 3}).rays == std::vector<V>{{2, 0, 1}, {2, 1, 2}, {2, 2, 3}});

  const auto e6 = chains_of(make_family(Family::E6));
  CHECK(chain_on(e6, {0, 1, 0}, {3, 4, 6}).rays == std::vector<V>{{0, 1, 0}, {1, 2, 2}, {2, 3, 4}, {3, 4, 6}});
  // This side of the junction has no interior points.
  CHECK(chain_on(e6, {0, 0, 1}, {3, 4, 6}).interior().empty());
}

TEST_CASE("chain segments: ends are generators, interiors lie in the relative interior") {
  for (const auto& id : catalog_families(12)) {
    CAPTURE(id.name());
    const auto g = enumerate_fan(ade_polynomial(id));
    const auto chains = chain_segments(g, refine_fan(g));
    std::size_t two_dim = 0;
    for (const auto& s : skeleton(g)) two_dim += s.dim() == 2;
    CHECK(chains.size() == two_dim);
    for (const auto& c : chains) {
      const auto& gens = c.parent.cone.generators();
      REQUIRE(c.rays.size() >= 2);
      CHECK(std::set<V>{c.rays.front(), c.rays.back()} == std::set<V>(gens.begin(), gens.end()));
      // the oracle lists every lattice point of the segment
      const auto expected = oracle::hull_points(gens);
      CHECK(std::set<V>(c.rays.begin(), c.rays.end()) == std::set<V>(expected.begin(), expected.end()));
      for (const auto& v : c.interior()) CHECK(oracle::in_cone(gens, v));
      for (std::size_t i = 0; i + 1 < c.rays.size(); ++i) {
        CHECK(abs(oracle::det2(c.rays[i], c.rays[i + 1])) == 1);
      }
    }
  }
}

TEST_CASE("self-intersection by the chain rule") {
  CHECK(self_intersection({3, 1, 1}, {2, 2, 1}, {1, 3, 1}) == -2);
  CHECK(self_intersection({2, 0, 1}, {2, 1, 2}, {2, 2, 3}) == -2);
  CHECK(self_intersection({2, 0, 1}, {1, 1, 1}, {0, 2, 1}) == -2);
  try {
    self_intersection({2, 2, 3}, {3, 4, 6}, {2, 3, 4});
    FAIL("expected NoIntegerSolution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoIntegerSolution);
  }
  CHECK_THROWS_AS(self_intersection({1, 0, 0}, {2, 2, 2}, {0, 1, 0}), Error);
  // a -1 curve: neighbours add up to v itself
  CHECK(self_intersection({1, 0, 0}, {1, 1, 0}, {0, 1, 0}) == -1);
}

TEST_CASE("every interior chain vertex has self-intersection -2") {
  for (const auto& id : catalog_families(12)) {
    CAPTURE(id.name());
    for (const auto& c : chains_of(id)) {
      for (const auto& gv : chain_vertices(c)) {
        CAPTURE(gv.ray.to_string());
        REQUIRE(gv.self_intersection.has_value());
        CHECK(*gv.self_intersection == -2);
      }
    }
  }
}

TEST_CASE("A_n resolution graph is the path on (n-i+1,i,1) with all -2") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto g = build_graph_An(n);
    REQUIRE(g.vertices.size() == static_cast<std::size_t>(n));
    CHECK(g.edges.size() == static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n; ++i) {
      CHECK(g.vertices[i - 1].ray == V{n - i + 1, i, 1});
      CHECK(g.vertices[i - 1].self_intersection == -2);
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) CHECK(g.edges[e] == std::pair<std::size_t, std::size_t>{e, e + 1});
    CHECK(is_minimal(g));
  }
  const auto g3 = build_graph_An(3);
  CHECK(g3.vertices[0].ray == V{3, 1, 1});
  CHECK(g3.vertices[2].ray == V{1, 3, 1});
  CHECK_THROWS_AS(build_graph_An(0), Error);
}

TEST_CASE("minimality rejects a -1 vertex") {
  auto g = build_graph_An(5);
  CHECK(is_minimal(g));
  g.vertices[2].self_intersection = -1;
  CHECK_FALSE(is_minimal(g));
  CHECK(is_minimal(ResolutionGraph{}));
}

TEST_CASE("junctions of the E-type skeletons") {
  {
    const auto g = enumerate_fan(ade_polynomial(make_family(Family::E7)));
    const auto chains = chain_segments(g, refine_fan(g));
    const auto js = junctions(g, chains);
    REQUIRE(js.size() == 1);
    CHECK(js[0].center == V{9, 6, 4});
    CHECK(js[0].neighbours == std::vector<V>{{5, 3, 2}, {6, 4, 3}, {7, 5, 3}});
    CHECK(js[0].resolved());
    CHECK(*js[0].self_intersection == -2);
  }
  {
    const auto g = enumerate_fan(ade_polynomial(make_family(Family::E6)));
    const auto chains = chain_segments(g, refine_fan(g));
    const auto js = junctions(g, chains);
    REQUIRE(js.size() == 1);
    CHECK(js[0].center == V{3, 4, 6});
    CHECK(js[0].neighbours == std::vector<V>{{0, 0, 1}, {2, 2, 3}, {2, 3, 4}});
    CHECK_FALSE(js[0].resolved());
  }
}

TEST_CASE("D_n fork relation and chain counts") {
  CHECK(V{2, 1, 2} + V{1, 1, 2} + V{1, 2, 2} == Integer(2) * V{2, 2, 3});
  for (int n = 4; n <= 12; ++n) {
    CAPTURE(n);
    const auto chains = chains_of(make_family(Family::D, n));
    const auto& c = chain_on(chains, {2, 0, 1}, {2, n - 2, n - 1});
    CHECK(c.positive_count() == static_cast<std::size_t>(n - 2));
    for (int j = 0; j <= n - 2; ++j) CHECK(c.rays[j] == V{2, j, j + 1});
  }
}

TEST_CASE("dynkin_solve recovers the A_3 path") {
  const std::vector<V> cand{{3, 1, 1}, {2, 2, 1}, {1, 3, 1}};
  const std::vector<V> bnd{{4, 0, 1}, {0, 4, 1}};
  const auto sol = dynkin_solve(cand, bnd, 3);
  REQUIRE(sol.status == SolveStatus::Found);
  const auto& g = sol.graph;
  REQUIRE(g.vertices.size() == 3);
  // sorted candidates: (1,3,1),(2,2,1),(3,1,1); the middle one is the center
  CHECK(g.vertices[1].ray == V{2, 2, 1});
  CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  for (const auto& v : g.vertices) CHECK(v.self_intersection == -2);
}

TEST_CASE("dynkin_solve on the E_6 interior points reports absence") {
  const std::vector<V> cand{{3, 4, 6}, {2, 2, 3}, {2, 3, 4}, {1, 2, 2}, {1, 1, 2}, {1, 1, 1}};
  const std::vector<V> bnd{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto sol = dynkin_solve(cand, bnd, 6);
  CHECK(sol.status == SolveStatus::Absent);
  // 6^4 labeled trees on one subset
  CHECK(sol.trees_examined == 1296);
  CHECK(dynkin_solve(cand, bnd, 6, 10).status == SolveStatus::BudgetExceeded);
  CHECK(dynkin_solve(cand, bnd, 7).status == SolveStatus::Absent);
}
