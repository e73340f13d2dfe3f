#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bvt/fieldspace.hpp"
#include "bvt/minkowski.hpp"

using namespace bvt;

namespace {

// independent copy of the representation, kept separate from the library path
void test_rep(int alpha, double M[3][3]) {
  const double eta[3] = {-1, 1, 1};
  int i = kBivPair[alpha][0], j = kBivPair[alpha][1];
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      M[k][l] = (k == i && j == l ? eta[j] : 0.0) - (k == j && i == l ? eta[i] : 0.0);
}

VVector basis_v(int i) {
  VVector v;
  v.c[i] = GrassmannElement(1.0);
  return v;
}

BiVector basis_b(int a) {
  BiVector b;
  b.c[a] = GrassmannElement(1.0);
  return b;
}

VVector random_v(Rng& r, int parity) {
  VVector v;
  for (int i = 0; i < 3; ++i) {
    if (parity == 0)
      v.c[i] = GrassmannElement(r.uniform(-1, 1)) +
               GrassmannElement::monomial((gmask(1) << (4 + r.uniform_int(4))) |
                                              (gmask(1) << (8 + r.uniform_int(4))),
                                          r.uniform(-1, 1));
    else
      v.c[i] = GrassmannElement::monomial(gmask(1) << (4 + r.uniform_int(8)), r.uniform(-1, 1));
  }
  return v;
}

BiVector random_b(Rng& r, int parity) {
  BiVector b;
  auto v = random_v(r, parity);
  b.c = v.c;
  return b;
}

}  // namespace

TEST_CASE("bracket matches the matrix commutator") {
  // basis case: [b01, b02] = b12 with this eta
  auto br = bracket(basis_b(0), basis_b(1));
  CHECK((br.c[0]).max_abs() == 0.0);
  CHECK((br.c[1]).max_abs() == 0.0);
  CHECK((br.c[2] - GrassmannElement(1.0)).max_abs() == 0.0);

  // rep of bracket equals commutator of reps, entrywise, for all basis pairs
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double Ma[3][3], Mb[3][3], comm[3][3];
      test_rep(a, Ma);
      test_rep(b, Mb);
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          comm[k][l] = 0;
          for (int m = 0; m < 3; ++m) comm[k][l] += Ma[k][m] * Mb[m][l] - Mb[k][m] * Ma[m][l];
        }
      auto g = bracket(basis_b(a), basis_b(b));
      double rec[3][3] = {};
      for (int c = 0; c < 3; ++c) {
        if (g.c[c].is_zero()) continue;
        double Mc[3][3];
        test_rep(c, Mc);
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) rec[k][l] += g.c[c].body() * Mc[k][l];
      }
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) CHECK(rec[k][l] == doctest::Approx(comm[k][l]).epsilon(1e-14));
    }
}

TEST_CASE("action is the defining representation") {
  Rng r(23);
  // compatibility: act([a,b],v) = act(a,act(b,v)) - act(b,act(a,v)) for even a,b
  for (int rep = 0; rep < 20; ++rep) {
    auto a = random_b(r, 0), b = random_b(r, 0);
    auto v = random_v(r, rep % 2);
    auto lhs = act(bracket(a, b), v);
    auto r1 = act(a, act(b, v));
    auto r2 = act(b, act(a, v));
    for (int i = 0; i < 3; ++i) CHECK((lhs.c[i] - r1.c[i] + r2.c[i]).max_abs() <= 1e-13);
  }
  // [a,a] = 0 for even a
  auto a = random_b(r, 0);
  auto z = bracket(a, a);
  for (int i = 0; i < 3; ++i) CHECK(z.c[i].max_abs() <= 1e-15);
}

TEST_CASE("graded Jacobi") {
  Rng r(7);
  for (int rep = 0; rep < 20; ++rep) {
    int pa = rep % 2, pb = (rep / 2) % 2, pc = (rep / 4) % 2;
    auto a = random_b(r, pa), b = random_b(r, pb), c = random_b(r, pc);
    // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
    auto lhs = bracket(a, bracket(b, c));
    auto rhs = bracket(bracket(a, b), c);
    auto t2 = bracket(b, bracket(a, c));
    double s = (pa && pb) ? -1.0 : 1.0;
    for (int i = 0; i < 3; ++i) CHECK((lhs.c[i] - rhs.c[i] - t2.c[i] * s).max_abs() <= 1e-13);
  }
}

TEST_CASE("wedges and trace") {
  // v0 ^ v1 is the (01) basis bivector
  auto w = wedge_vv(basis_v(0), basis_v(1));
  CHECK((w.c[0] - GrassmannElement(1.0)).max_abs() == 0.0);
  CHECK(w.c[1].is_zero());
  CHECK(w.c[2].is_zero());

  // a ^ a = 0 for even components
  Rng r(9);
  auto a = random_v(r, 0);
  auto aa = wedge_vv(a, a);
  for (int i = 0; i < 3; ++i) CHECK(aa.c[i].max_abs() <= 1e-15);

  // Koszul oracle: a ^ b = -(-1)^{|a||b|} b ^ a
  for (int rep = 0; rep < 16; ++rep) {
    int pa = rep % 2, pb = (rep / 2) % 2;
    auto x = random_v(r, pa), y = random_v(r, pb);
    double s = -((pa && pb) ? -1.0 : 1.0);
    auto lhs = wedge_vv(x, y), rhs = wedge_vv(y, x);
    for (int i = 0; i < 3; ++i) CHECK((lhs.c[i] - rhs.c[i] * s).max_abs() <= 1e-14);
  }

  // tr(v0 ^ v1 ^ v2) = 1, tr(0) = 0, linearity under odd rescaling
  auto t = wedge_vb(basis_v(0), wedge_vv(basis_v(1), basis_v(2)));
  CHECK((trace(t) - GrassmannElement(1.0)).max_abs() == 0.0);
  CHECK(trace(TriVector{}).is_zero());
  auto th = GrassmannElement::generator(5);
  VVector v0s;
  for (int i = 0; i < 3; ++i) v0s.c[i] = gmul(th, basis_v(0).c[i]);
  auto ts = wedge_vb(v0s, wedge_vv(basis_v(1), basis_v(2)));
  CHECK((trace(ts) - th).max_abs() == 0.0);
}

TEST_CASE("trace pairing is ad-invariant") {
  Rng r(31);
  for (int rep = 0; rep < 24; ++rep) {
    int pa = rep % 2, px = (rep / 2) % 2, py = (rep / 4) % 2;
    auto a = random_b(r, pa);
    auto x = random_v(r, px);
    auto y = random_b(r, py);
    // tr(act(a,x) ^ y) + (-1)^{|a||x|} tr(x ^ [a,y]) = 0
    auto t1 = trace(wedge_vb(act(a, x), y));
    auto t2 = trace(wedge_vb(x, bracket(a, y)));
    double s = (pa && px) ? -1.0 : 1.0;
    CHECK((t1 + t2 * s).max_abs() <= 1e-13);
  }
}
