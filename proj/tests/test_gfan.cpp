#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toricres/catalog.hpp"
#include "toricres/gfan.hpp"

using namespace toricres;
using V = LatticeVector;
using E = ExponentVector;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s, 3); }

std::vector<std::vector<V>> generator_sets(const std::vector<GroebnerCone>& cs) {
  std::vector<std::vector<V>> out;
  for (const auto& c : cs) out.push_back(c.cone.generators());
  return out;
}

}  // namespace

TEST_CASE("groebner_cone_of_weight") {
  auto a = groebner_cone_of_weight(P("x*y - z^3"), V{1, 1, 1});
  CHECK(a.cone == Cone({V{0, 0, 1}, V{3, 0, 1}, V{0, 3, 1}}));
  CHECK(a.initial == P("x*y"));

  auto e8 = groebner_cone_of_weight(P("z^2+y^3+x^5"), V{6, 10, 15});
  CHECK(e8.cone == Cone({V{6, 10, 15}}));
  CHECK(e8.initial == P("z^2+y^3+x^5"));

  auto e7 = groebner_cone_of_weight(P("x^2+y^3+y*z^3"), V{1, 2, 0});
  CHECK(e7.cone == Cone({V{1, 2, 0}, V{9, 6, 4}}));
  CHECK(e7.initial == P("x^2+y*z^3"));
}

TEST_CASE("enumerate_fan on A_2") {
  const auto g = enumerate_fan(ade_polynomial(make_family(Family::A, 2)));
  const auto mx = maximal_cones(g);
  REQUIRE(mx.size() == 2);
  std::vector<Polynomial> initials{mx[0].initial, mx[1].initial};
  CHECK(std::count(initials.begin(), initials.end(), P("x*y")) == 1);
  CHECK(std::count(initials.begin(), initials.end(), P("-z^3")) == 1);
  const auto sk = skeleton(g);
  REQUIRE(sk.size() == 1);
  CHECK(sk[0].cone == Cone({V{3, 0, 1}, V{0, 3, 1}}));
  CHECK(sk[0].initial == g.polynomial());
}

TEST_CASE("enumerate_fan matches the published cone lists") {
  for (const auto& id : catalog_families(12)) {
    CAPTURE(id.name());
    const auto g = enumerate_fan(ade_polynomial(id));
    const auto expected = expected_cones(id);
    REQUIRE(g.cones().size() == expected.size());
    for (const auto& e : expected) {
      CAPTURE(e.id);
      auto idx = g.find(e.cone);
      REQUIRE(idx);
      CHECK(g.cones()[*idx].initial == e.initial);
    }
    CHECK(maximal_cones(g).size() == (id.family == Family::A ? 2u : 3u));
  }
}

TEST_CASE("maximal cone counts and skeletons") {
  CHECK(maximal_cones(enumerate_fan(ade_polynomial(make_family(Family::A, 3)))).size() == 2);
  CHECK(maximal_cones(enumerate_fan(ade_polynomial(make_family(Family::E7)))).size() == 3);
  CHECK(maximal_cones(enumerate_fan(ade_polynomial(make_family(Family::D, 4)))).size() == 3);

  const auto e6 = enumerate_fan(ade_polynomial(make_family(Family::E6)));
  std::vector<Cone> two_d;
  for (const auto& c : skeleton(e6))
    if (c.dim() == 2) two_d.push_back(c.cone);
  CHECK(two_d.size() == 3);
  for (const auto& g : {V{1, 0, 0}, V{0, 0, 1}, V{0, 1, 0}})
    CHECK(std::find(two_d.begin(), two_d.end(), Cone({g, V{3, 4, 6}})) != two_d.end());

  const auto d5 = enumerate_fan(ade_polynomial(make_family(Family::D, 5)));
  std::vector<Polynomial> mono;
  for (const auto& c : maximal_cones(d5)) mono.push_back(c.initial);
  for (const char* s : {"-x*y^2", "-x^4", "z^2"})
    CHECK(std::find(mono.begin(), mono.end(), P(s)) != mono.end());
}

TEST_CASE("single monomial: one orthant cone, empty skeleton") {
  const auto g = enumerate_fan(P("z^2"));
  REQUIRE(g.cones().size() == 1);
  CHECK(g.cones()[0].cone == Cone::orthant(3));
  CHECK(skeleton(g).empty());
  // every orthant face is labeled by the monomial itself
  for (const auto& c : g.all_cones()) CHECK(c.initial == P("z^2"));
  CHECK(g.all_cones().size() == 7);
}

TEST_CASE("degenerate input x*y*z") {
  const auto g = enumerate_fan(P("x*y*z"));
  REQUIRE(g.cones().size() == 1);
  CHECK(validate_fan(g.to_fan()));
}

TEST_CASE("fan axioms hold with all faces attached") {
  CHECK(validate_fan(enumerate_fan(P("x*y - z^3")).to_fan()));
  for (const auto& id : catalog_families(7)) {
    CAPTURE(id.name());
    CHECK(validate_fan(enumerate_fan(ade_polynomial(id)).to_fan()));
  }
  // a polynomial with a non-simplicial arrangement
  CHECK(validate_fan(enumerate_fan(P("x^3 + y^3 + z^3 + x*y*z")).to_fan()));
}

TEST_CASE("unsupported and degenerate inputs") {
  CHECK_THROWS_AS(enumerate_fan(parse_polynomial("x*y", 2)), Error);
  CHECK_THROWS_AS(enumerate_fan(Polynomial(3)), Error);
}

TEST_CASE("maximal cones cover the orthant") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> d(0, 60);
  for (const auto& id : catalog_families(12)) {
    CAPTURE(id.name());
    const auto g = enumerate_fan(ade_polynomial(id));
    const auto mx = maximal_cones(g);
    const auto all = g.all_cones();
    for (int t = 0; t < 1000; ++t) {
      V w{d(rng), d(rng), d(rng)};
      if (w.is_zero()) continue;
      int inside = 0;
      for (const auto& c : mx) inside += c.cone.contains_in_relative_interior(w);
      bool lower = false;
      for (const auto& c : all)
        if (c.dim() < 3 && c.cone.contains_in_relative_interior(w)) lower = true;
      CHECK(((inside == 1 && !lower) || (inside == 0 && lower)));
    }
  }
}

TEST_CASE("labels hold throughout each relative interior") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> co(1, 7);
  for (const auto& id : catalog_families(9)) {
    const auto f = ade_polynomial(id);
    for (const auto& c : enumerate_fan(f).all_cones()) {
      for (int t = 0; t < 20; ++t) {
        V w = V::zero(3);
        for (const auto& gnr : c.cone.generators()) w += Integer(co(rng)) * gnr;
        CHECK(initial_form(w, f) == c.initial);
      }
      // independent membership certificate for the generators
      for (const auto& gnr : c.cone.generators()) CHECK(oracle::in_cone(c.cone.generators(), gnr));
    }
  }
}

TEST_CASE("newton_polyhedron vertices") {
  CHECK(newton_polyhedron(P("x*y - z^3")).vertices == std::vector<E>{E{0, 0, 3}, E{1, 1, 0}});
  CHECK(newton_polyhedron(P("z^2+y^3+x^4")).vertices.size() == 3);
  CHECK(newton_polyhedron(P("x")).vertices == std::vector<E>{E{1, 0, 0}});
  // x^2*y is dominated by x*y
  CHECK(newton_polyhedron(P("x*y + x^2*y + z")).vertices == std::vector<E>{E{0, 0, 1}, E{1, 1, 0}});
  // (1,1,1) is the midpoint of two vertices
  CHECK(newton_polyhedron(P("x^2*z^2 + y^2 + x*y*z")).vertices.size() == 2);
}

TEST_CASE("newton polyhedron contains the support") {
  for (const auto& id : catalog_families(10)) {
    const auto f = ade_polynomial(id);
    const auto np = newton_polyhedron(f);
    for (const auto& e : support(f))
      for (const auto& fc : np.facets) CHECK(dot(fc.normal, e) >= fc.level);
    for (const auto& v : np.vertices) CHECK(f.coefficient(v) != 0);
  }
}

TEST_CASE("dual Newton route reproduces the Gröbner fan") {
  for (const auto& id : catalog_families(12)) {
    CAPTURE(id.name());
    const auto f = ade_polynomial(id);
    CHECK(dual_newton_cones(f) == enumerate_fan(f).cones());
  }
  for (const char* s : {"x*y*z", "z^2", "x^3 + y^3 + z^3 + x*y*z", "x*y + x^2*y + z", "x^2*z^2 + y^2 + x*y*z"}) {
    CAPTURE(s);
    CHECK(dual_newton_cones(P(s)) == enumerate_fan(P(s)).cones());
  }
}

TEST_CASE("skeleton agrees with the non-monomial criterion") {
  for (const auto& id : catalog_families(12)) {
    const auto g = enumerate_fan(ade_polynomial(id));
    for (const auto& c : skeleton(g)) CHECK_FALSE(c.initial.is_monomial());
    for (const auto& c : maximal_cones(g)) CHECK(c.initial.is_monomial());
  }
  // a hand-made inconsistent fan is reported
  const auto f = P("x*y - z^3");
  GroebnerFan bogus(f, {{Cone::orthant(3), f}});
  CHECK_THROWS_AS(skeleton(bogus), Error);
}
