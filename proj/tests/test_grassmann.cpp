#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <vector>

#include "bvt/fieldspace.hpp"
#include "bvt/grassmann.hpp"

using namespace bvt;

namespace {

// Brute-force product oracle: concatenate generator index lists, bubble-sort
// counting transpositions, vanish on repeats.
GrassmannElement naive_mul(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement out;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      std::vector<int> idx;
      for (int i = 0; i < 64; ++i)
        if (ta.mask & (gmask(1) << i)) idx.push_back(i);
      for (int i = 0; i < 64; ++i)
        if (tb.mask & (gmask(1) << i)) idx.push_back(i);
      int swaps = 0;
      bool dup = false;
      for (size_t i = 0; i + 1 < idx.size() && !dup; ++i)
        for (size_t j = 0; j + 1 < idx.size() - i; ++j) {
          if (idx[j] == idx[j + 1]) dup = true;
          if (idx[j] > idx[j + 1]) {
            std::swap(idx[j], idx[j + 1]);
            ++swaps;
          }
        }
      if (dup || (ta.mask & tb.mask)) continue;
      double s = (swaps % 2 == 0) ? 1.0 : -1.0;
      out += GrassmannElement::monomial(ta.mask | tb.mask, s * ta.c * tb.c);
    }
  return out;
}

GrassmannElement random_elem(Rng& r, int n_gen, int n_terms, bool force_body) {
  GrassmannElement e;
  if (force_body) e += GrassmannElement(r.uniform(0.5, 2.0) * (r.uniform() < 0.5 ? -1 : 1));
  for (int t = 0; t < n_terms; ++t) {
    gmask m = 0;
    int k = 1 + r.uniform_int(3);
    for (int i = 0; i < k; ++i) m |= gmask(1) << r.uniform_int(n_gen);
    e += GrassmannElement::monomial(m, r.uniform(-1, 1));
  }
  return e;
}

GrassmannElement theta(int i) { return GrassmannElement::generator(i); }

}  // namespace

TEST_CASE("anticommutation and nilpotency") {
  auto t1 = theta(1), t2 = theta(2);
  CHECK((gmul(t1, t2) + gmul(t2, t1)).is_zero());
  for (int i = 0; i < 8; ++i) CHECK(gmul(theta(i), theta(i)).is_zero());
  // (1 + t1 t2)(1 - t1 t2) = 1
  GrassmannElement a = GrassmannElement(1.0) + gmul(t1, t2);
  GrassmannElement b = GrassmannElement(1.0) - gmul(t1, t2);
  CHECK((gmul(a, b) - GrassmannElement(1.0)).max_abs() == 0.0);
}

TEST_CASE("product matches transposition-count oracle") {
  Rng r(17);
  for (int rep = 0; rep < 50; ++rep) {
    auto a = random_elem(r, 8, 5, false);
    auto b = random_elem(r, 8, 5, false);
    CHECK((gmul(a, b) - naive_mul(a, b)).max_abs() <= 1e-14);
  }
}

TEST_CASE("associativity and graded commutativity") {
  Rng r(3);
  for (int rep = 0; rep < 30; ++rep) {
    auto a = random_elem(r, 10, 4, rep % 2 == 0);
    auto b = random_elem(r, 10, 4, false);
    auto c = random_elem(r, 10, 4, true);
    auto lhs = gmul(gmul(a, b), c);
    auto rhs = gmul(a, gmul(b, c));
    double scale = std::max(lhs.max_abs(), 1.0);
    CHECK((lhs - rhs).max_abs() / scale <= 1e-13);
  }
  // homogeneous-parity pairs
  for (int rep = 0; rep < 30; ++rep) {
    GrassmannElement a, b;
    int pa = rep % 2, pb = (rep / 2) % 2;
    for (int t = 0; t < 3; ++t) {
      gmask m = 0;
      int k = pa ? 1 + 2 * r.uniform_int(2) : 2 * r.uniform_int(2);
      while (std::popcount(m) < k) m |= gmask(1) << r.uniform_int(10);
      if (std::popcount(m) % 2 == pa) a += GrassmannElement::monomial(m, r.uniform(-1, 1));
      m = 0;
      k = pb ? 1 + 2 * r.uniform_int(2) : 2 * r.uniform_int(2);
      while (std::popcount(m) < k) m |= gmask(1) << r.uniform_int(10);
      if (std::popcount(m) % 2 == pb) b += GrassmannElement::monomial(m, r.uniform(-1, 1));
    }
    double sign = (a.parity() && b.parity()) ? -1.0 : 1.0;
    CHECK((gmul(a, b) - gmul(b, a) * sign).max_abs() <= 1e-14);
  }
}

TEST_CASE("inverse") {
  CHECK((ginv(GrassmannElement(2.0)) - GrassmannElement(0.5)).max_abs() == 0.0);
  auto t12 = gmul(theta(1), theta(2));
  auto inv = ginv(GrassmannElement(1.0) + t12);
  CHECK((inv - (GrassmannElement(1.0) - t12)).max_abs() == 0.0);

  Rng r(11);
  for (int rep = 0; rep < 30; ++rep) {
    auto a = random_elem(r, 8, 6, true);
    auto i = ginv(a);
    CHECK((gmul(a, i) - GrassmannElement(1.0)).max_abs() <= 1e-12);
    CHECK((gmul(i, a) - GrassmannElement(1.0)).max_abs() <= 1e-12);
  }
  CHECK_THROWS_AS(ginv(theta(3)), DegenerateBody);
}

TEST_CASE("body and soul reassemble") {
  auto a = GrassmannElement(3.0) + theta(1) * 2.0;
  auto [b, s] = body_soul(a);
  CHECK(b == 3.0);
  CHECK((s - theta(1) * 2.0).max_abs() == 0.0);
  auto [b0, s0] = body_soul(GrassmannElement());
  CHECK(b0 == 0.0);
  CHECK(s0.is_zero());

  Rng r(5);
  for (int rep = 0; rep < 20; ++rep) {
    auto x = random_elem(r, 9, 5, rep % 3 != 0);
    auto [bb, ss] = body_soul(x);
    CHECK((GrassmannElement(bb) + ss - x).max_abs() == 0.0);
  }
}

TEST_CASE("tag extraction strips lowest bits without sign") {
  auto v = gmul(theta(0), gmul(theta(5), theta(7)));
  auto e = v.extract(1);
  CHECK((e - gmul(theta(5), theta(7))).max_abs() == 0.0);
  auto w = gmul(GrassmannElement::monomial(0b1100, 1.0), gmul(theta(6), theta(9)));
  CHECK((w.extract(0b1100) - gmul(theta(6), theta(9))).max_abs() == 0.0);
}
