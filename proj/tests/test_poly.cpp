#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toricres/catalog.hpp"
#include "toricres/polynomial.hpp"

using namespace toricres;
using V = LatticeVector;
using E = ExponentVector;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("parse simple polynomials") {
  auto f = parse_polynomial("x*y - z^4", 3);
  CHECK(f.size() == 2);
  CHECK(f.coefficient(E{1, 1, 0}) == 1);
  CHECK(f.coefficient(E{0, 0, 4}) == -1);

  auto d4 = parse_polynomial("z^2 - x*y^2 - x^3", 3);
  CHECK(d4.size() == 3);
  CHECK(d4 == ade_polynomial(make_family(Family::D, 4)));

  CHECK(kind_of([] { parse_polynomial("x + x - 2*x", 3); }) == ErrorKind::ZeroPolynomial);
  CHECK(parse_polynomial("x + x - 2*x", 3, true).is_zero());
}

TEST_CASE("parser details") {
  CHECK(parse_polynomial("  3 * x ^ 2 *y ", 3).coefficient(E{2, 1, 0}) == 3);
  CHECK(parse_polynomial("-z^2+y^3", 3).coefficient(E{0, 0, 2}) == -1);
  CHECK(parse_polynomial("x*x*y", 3).coefficient(E{2, 1, 0}) == 1);
  CHECK(parse_polynomial("2*3", 3).coefficient(E{0, 0, 0}) == 6);
  CHECK(parse_polynomial("x1*x4^2 - 7", 4).coefficient(E{1, 0, 0, 2}) == 1);
  CHECK(parse_polynomial("x1*x3", 3) == parse_polynomial("x*z", 3));
  CHECK(parse_polynomial("z\xE2\x88\x92x", 3).coefficient(E{1, 0, 0}) == -1);
  CHECK(parse_polynomial("123456789012345678901234567890*x", 3).coefficient(E{1, 0, 0}) ==
        Integer("123456789012345678901234567890"));
}

TEST_CASE("parser errors carry positions") {
  try {
    parse_polynomial("x*y + ^2", 3);
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
  try {
    parse_polynomial("x y", 3);
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 2);
  }
  CHECK(kind_of([] { parse_polynomial("", 3); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("x^", 3); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("x + ", 3); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("x^-1", 3); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("w + x", 3); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([] { parse_polynomial("z", 2); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([] { parse_polynomial("x5", 4); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([] { parse_polynomial("1/2*x", 3); }) == ErrorKind::Unsupported);
}

TEST_CASE("support") {
  const auto a2 = ade_polynomial(make_family(Family::A, 2));
  CHECK(support(a2) == std::vector<E>{E{0, 0, 3}, E{1, 1, 0}});
  CHECK(support(parse_polynomial("z^2+y^3+x^5", 3)) == std::vector<E>{E{0, 0, 2}, E{0, 3, 0}, E{5, 0, 0}});
  CHECK(support(Polynomial(3)).empty());
}

TEST_CASE("v_order") {
  const auto e6 = parse_polynomial("z^2+y^3+x^4", 3);
  CHECK(v_order(V{3, 4, 6}, e6) == 12);
  CHECK(v_order(V{0, 0, 1}, ade_polynomial(make_family(Family::A, 2))) == 0);
  CHECK(v_order(V{0, 0, 0}, e6) == 0);
  CHECK(kind_of([] { v_order(V{1, 1, 1}, Polynomial(3)); }) == ErrorKind::EmptyPolynomial);
  CHECK(kind_of([&] { v_order(V{-1, 1, 1}, e6); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("initial_form") {
  const auto a2 = ade_polynomial(make_family(Family::A, 2));
  CHECK(initial_form(V{0, 0, 1}, a2) == parse_polynomial("x*y", 3));
  const auto a1 = parse_polynomial("x*y - z^2", 3);
  CHECK(initial_form(V{1, 1, 1}, a1) == a1);
  const auto e7 = parse_polynomial("x^2+y^3+y*z^3", 3);
  CHECK(initial_form(V{9, 6, 4}, e7) == e7);
  CHECK(kind_of([] { initial_form(V{1, 1, 1}, Polynomial(3)); }) == ErrorKind::EmptyPolynomial);
}

TEST_CASE("restrict_to_face") {
  const auto e6 = parse_polynomial("z^2+y^3+x^4", 3);
  std::vector<E> face{E{0, 0, 2}, E{0, 3, 0}};
  CHECK(restrict_to_face(e6, face) == parse_polynomial("z^2+y^3", 3));
  std::vector<E> disjoint{E{1, 1, 1}};
  CHECK(restrict_to_face(e6, disjoint).is_zero());
  auto s = support(e6);
  CHECK(restrict_to_face(e6, s) == e6);
}

TEST_CASE("printing is canonical and reparses") {
  CHECK(parse_polynomial("x*y - z^4", 3).to_string() == "x*y - z^4");
  CHECK(parse_polynomial("z^2+y^3+x^5", 3).to_string() == "x^5 + y^3 + z^2");
  CHECK(parse_polynomial("-3 - x", 3).to_string() == "-x - 3");
  CHECK(Polynomial(3).to_string() == "0");
  CHECK(parse_polynomial("x2^3 - 2*x1*x4", 4).to_string() == "-2*x1*x4 + x2^3");

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> ex(0, 4), co(-5, 5);
  for (int t = 0; t < 300; ++t) {
    Polynomial f(3);
    for (int k = 0; k < 4; ++k) f.add_term(E{ex(rng), ex(rng), ex(rng)}, co(rng));
    if (f.is_zero()) continue;
    CHECK(parse_polynomial(f.to_string(), 3) == f);
  }
}

TEST_CASE("initial form properties on random weights") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> w(0, 20), lam(1, 9);
  for (const auto& id : catalog_families(8)) {
    const auto f = ade_polynomial(id);
    for (int t = 0; t < 50; ++t) {
      V wt{w(rng), w(rng), w(rng)};
      const auto in = initial_form(wt, f);
      const Integer m = v_order(wt, f);
      CHECK(v_order(wt, in) == m);
      for (const auto& e : support(f)) CHECK((dot(wt, e) == m) == (in.coefficient(e) != 0));
      CHECK(initial_form(Integer(lam(rng)) * wt, f) == in);
    }
  }
}
