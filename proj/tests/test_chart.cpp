#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bvt/chart.hpp"
#include "bvt/fieldspace.hpp"
#include "bvt/poly.hpp"

using namespace bvt;

TEST_CASE("cell tables") {
  auto c = cube();
  CHECK(c.dim() == 3);
  auto faces = boundary_of(c);
  CHECK(faces.size() == 6);
  int pos = 0;
  for (const auto& f : faces) {
    CHECK(f.dim() == 2);
    CHECK(c.contains(f));
    auto edges = boundary_of(f);
    CHECK(edges.size() == 4);
    for (const auto& e : edges) {
      CHECK(f.contains(e));
      CHECK(boundary_of(e).size() == 2);
    }
    if (f.orientation > 0) ++pos;
  }
  CHECK(pos == 3);  // outward convention: half the faces flip
}

TEST_CASE("gauss-legendre moments are exact for polynomials") {
  for (int order = 1; order <= 8; ++order)
    for (int e = 0; e <= 2 * order - 1; ++e)
      CHECK(gl_moment(order, e) == doctest::Approx(1.0 / (e + 1)).epsilon(1e-13));
}

TEST_CASE("polynomial arithmetic") {
  Rng r(2);
  auto st = cube();
  auto p = random_body_poly(r, st, 2, 1.0);
  auto q = random_body_poly(r, st, 2, 1.0);
  // product evaluates pointwise
  for (int i = 0; i < 10; ++i) {
    std::array<double, 3> x{r.uniform(), r.uniform(), r.uniform()};
    auto lhs = pmul(p, q).eval(x);
    auto rhs = gmul(p.eval(x), q.eval(x));
    CHECK((lhs - rhs).max_abs() <= 1e-13);
  }
  // derivative of x^2 y is 2 x y along x
  auto m = PolyFunction::monomial(2, 1, 0, GrassmannElement(1.0));
  auto dm = m.partial(0);
  CHECK((dm.eval({0.5, 2.0, 0.0}) - GrassmannElement(2.0)).max_abs() <= 1e-15);
  // substitution
  auto s = m.substitute(0, 2.0);
  CHECK((s.eval({0.0, 3.0, 0.0}) - GrassmannElement(12.0)).max_abs() <= 1e-15);
}

TEST_CASE("pinv multiplies back to one") {
  Rng r(8);
  auto st = cube();
  PolyFunction a(1.7);
  a += random_soul_poly(r, st, 2, 0.8, 4, 6);
  a += random_soul_poly(r, st, 2, 0.8, 4, 6);
  auto inv = pinv(a);
  auto prod = pmul(a, inv);
  for (int i = 0; i < 8; ++i) {
    std::array<double, 3> x{r.uniform(), r.uniform(), r.uniform()};
    CHECK((prod.eval(x) - GrassmannElement(1.0)).max_abs() <= 1e-12);
  }
  PolyFunction bad = PolyFunction::monomial(1, 0, 0, GrassmannElement(1.0));
  bad += PolyFunction(0.5);
  CHECK_THROWS_AS(pinv(bad), DegenerateBody);
}
