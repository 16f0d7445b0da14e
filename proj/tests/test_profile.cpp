#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "toricres/catalog.hpp"
#include "toricres/profile.hpp"

using namespace toricres;
using V = LatticeVector;

TEST_CASE("boundary hyperplanes") {
  const int n = 3;
  Profile a3(Cone({V{1, 0, 0}, V{0, 1, 0}, V{n + 1, 0, 1}, V{0, n + 1, 1}}));
  REQUIRE(a3.boundary().size() == 1);
  CHECK(a3.boundary()[0] == Hyperplane(V{1, 1, -3}, 1));

  Profile d5(Cone({V{2, 0, 1}, V{0, 0, 1}, V{2, 3, 4}}));
  REQUIRE(d5.boundary().size() == 1);
  CHECK(d5.boundary()[0].normal() == V{0, 1, -1});
  CHECK(d5.boundary()[0].offset() == -1);
  CHECK(d5.boundary()[0].to_string() == "y-z+1=0");

  Profile e8(Cone({V{0, 1, 0}, V{0, 0, 1}, V{6, 10, 15}}));
  REQUIRE(e8.boundary().size() == 1);
  CHECK(e8.boundary()[0].to_string() == "4x-y-z+1=0");
}

TEST_CASE("generators lie on the boundary, origin excluded") {
  Profile p(Cone({V{0, 0, 1}, V{3, 0, 1}, V{0, 3, 1}}));
  for (const auto& g : p.base().generators()) {
    bool on = false;
    for (const auto& f : p.boundary_facets()) on |= dot(f.outward, g) == f.level;
    CHECK(on);
  }
  auto pts = lattice_points(p);
  CHECK(std::find(pts.begin(), pts.end(), V::zero(3)) == pts.end());
  CHECK(pts.size() == 10);
  for (const auto& q : pts) CHECK(q[2] == 1);
}

TEST_CASE("lattice points examples") {
  CHECK(lattice_points(profile_of(Cone({V{1, 0, 0}, V{0, 0, 1}, V{3, 4, 6}}))) ==
        std::vector<V>{V{0, 0, 1}, V{1, 0, 0}, V{1, 1, 2}, V{2, 2, 3}, V{3, 4, 6}});
  CHECK(lattice_points(profile_of(Cone::orthant(3))) == std::vector<V>{V{0, 0, 1}, V{0, 1, 0}, V{1, 0, 0}});
}

TEST_CASE("multi-facet boundary of a non-coplanar cone") {
  // the plane through the first three generators misses (0,1,1)
  Profile p(Cone({V{1, 0, 0}, V{0, 1, 0}, V{2, 0, 1}, V{0, 1, 1}}));
  REQUIRE(p.base().generators().size() == 4);
  CHECK(p.boundary_facets().size() >= 2);
  const auto pts = lattice_points(p);
  CHECK(pts == oracle::hull_points(p.base().generators()));
  CHECK_FALSE(coplanar_boundary(p, pts));
}

TEST_CASE("lower-dimensional profiles") {
  Profile seg(Cone({V{4, 0, 1}, V{0, 4, 1}}));
  REQUIRE(seg.boundary_facets().size() == 1);
  const auto pts = lattice_points(seg);
  CHECK(pts == std::vector<V>{V{0, 4, 1}, V{1, 3, 1}, V{2, 2, 1}, V{3, 1, 1}, V{4, 0, 1}});
  Profile ray(Cone({V{2, 2, 3}}));
  CHECK(lattice_points(ray) == std::vector<V>{V{2, 2, 3}});
}

TEST_CASE("irreducible_elements") {
  const auto e6 = lattice_points(profile_of(Cone({V{1, 0, 0}, V{0, 0, 1}, V{3, 4, 6}})));
  CHECK(irreducible_elements(e6) == e6);
  std::vector<V> s{V{1, 0, 0}, V{0, 1, 0}, V{1, 1, 0}};
  CHECK(irreducible_elements(s) == std::vector<V>{V{0, 1, 0}, V{1, 0, 0}});
  std::vector<V> doubled{V{1, 0, 0}, V{2, 0, 0}};
  CHECK(irreducible_elements(doubled) == std::vector<V>{V{1, 0, 0}});
  const auto a2 = lattice_points(profile_of(Cone({V{0, 0, 1}, V{3, 0, 1}, V{0, 3, 1}})));
  CHECK(irreducible_elements(a2) == a2);
}

TEST_CASE("lattice points are invariant under generator order") {
  std::vector<V> g{V{1, 0, 0}, V{0, 1, 0}, V{2, 0, 1}, V{2, 2, 3}};
  const auto ref = lattice_points(profile_of(Cone(g)));
  std::sort(g.begin(), g.end());
  do {
    CHECK(lattice_points(profile_of(Cone(g))) == ref);
  } while (std::next_permutation(g.begin(), g.end()));
}

TEST_CASE("catalog profiles: oracle, coplanarity, irreducibility") {
  for (const auto& id : catalog_families(12)) {
    CAPTURE(id.name());
    for (const auto& e : expected_cones(id)) {
      if (e.cone.dim() != 3) continue;
      CAPTURE(e.id);
      const auto p = profile_of(e.cone);
      const auto pts = lattice_points(p);
      CHECK(pts == oracle::hull_points(e.cone.generators()));
      for (const auto& g : e.cone.generators()) CHECK(std::binary_search(pts.begin(), pts.end(), g));
      auto cop = coplanar_boundary(p, pts);
      REQUIRE(cop);
      CHECK(cop->level == 1);
      REQUIRE(e.boundary);
      CHECK(cop->plane() == *e.boundary);
      for (const auto& q : pts) CHECK_FALSE(oracle::decomposable(pts, q));
      CHECK(irreducible_elements(pts) == pts);
    }
  }
}
