#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>
#include <vector>

#include "bvt/fieldspace.hpp"
#include "bvt/superform.hpp"

using namespace bvt;

namespace {

constexpr int kBase = 4, kN = 8;

SuperForm rform(Rng& r, const Stratum& st, int p, int ghost, Target t) {
  return random_form(r, st, p, ghost, t, kBase, kN, 2, 1.0);
}

VecField rvec_odd(Rng& r, const Stratum& st) {
  VecField w;
  for (int ax = 0; ax < 3; ++ax)
    if (st.is_tangent[ax]) w[ax] = random_odd_poly(r, st, 2, 1.0, kBase, kN);
  return w;
}

GrassmannElement stokes_defect(const SuperForm& a) {
  GrassmannElement lhs = integrate(d(a));
  GrassmannElement rhs;
  for (const auto& b : boundary_of(a.st)) rhs += integrate(restrict_to(a, b));
  return lhs - rhs;
}

// classical coordinate Lie derivative of a real-coefficient form along a
// real vector field, used as the independent oracle
SuperForm lie_classical(const std::array<PolyFunction, 3>& v, const SuperForm& a) {
  SuperForm r = SuperForm::zero(a.st, a.degree, a.ghost, a.target);
  for (const auto& comp : a.comps) {
    std::vector<int> idx;
    for (int ax = 0; ax < 3; ++ax)
      if (comp.mask & (1u << ax)) idx.push_back(ax);
    for (int tc = 0; tc < int(comp.c.size()); ++tc) {
      const PolyFunction& f = comp.c[tc];
      if (f.is_zero()) continue;
      for (int mu = 0; mu < 3; ++mu)
        if (a.st.is_tangent[mu] && !v[mu].is_zero())
          r.at(comp.mask, tc) += pmul(v[mu], f.partial(mu));
      for (size_t k = 0; k < idx.size(); ++k)
        for (int mu = 0; mu < 3; ++mu) {
          if (!a.st.is_tangent[mu] || v[idx[k]].is_zero()) continue;
          unsigned rest = comp.mask & ~(1u << idx[k]);
          if (rest & (1u << mu)) continue;
          double s = merge_sign(1u << mu, rest) * merge_sign(1u << idx[k], rest);
          r.at(rest | (1u << mu), tc) += pmul(v[idx[k]].partial(mu), f).scaled(s);
        }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("exterior derivative basics") {
  auto st = cube();
  // d(x dy) = dx dy
  SuperForm a = SuperForm::zero(st, 1, 0, Target::Scalar);
  a.at(1u << 1, 0) = PolyFunction::monomial(1, 0, 0, GrassmannElement(1.0));
  auto da = d(a);
  REQUIRE(da.find(0b011, 0) != nullptr);
  CHECK((da.find(0b011, 0)->eval({0, 0, 0}) - GrassmannElement(1.0)).max_abs() == 0.0);

  Rng r(4);
  for (int rep = 0; rep < 10; ++rep) {
    auto f = rform(r, st, rep % 3, rep % 2, Target::V);
    CHECK(d(d(f)).max_abs() <= 1e-13);
  }
}

TEST_CASE("integration against the monomial oracle") {
  auto st = cube();
  CHECK((integrate(SuperForm::volume(st)) - GrassmannElement(1.0)).max_abs() <= 1e-15);
  Rng r(6);
  for (int rep = 0; rep < 10; ++rep) {
    SuperForm w = SuperForm::zero(st, 3, 0, Target::Scalar);
    PolyFunction p = random_body_poly(r, st, 5, 1.0);
    p += random_soul_poly(r, st, 4, 1.0, kBase, kN);
    w.at(0b111, 0) = p;
    GrassmannElement oracle;
    for (const auto& [k, c] : p.terms()) {
      double m = 1.0;
      for (int ax = 0; ax < 3; ++ax) m *= 1.0 / (PolyFunction::exp_of(k, ax) + 1);
      oracle += c * m;
    }
    CHECK((integrate(w) - oracle).max_abs() <= 1e-12);
  }
}

TEST_CASE("stokes at all three stratification levels") {
  Rng r(12);
  auto st = cube();
  for (int rep = 0; rep < 6; ++rep) {
    auto a2 = rform(r, st, 2, rep % 2, Target::Scalar);
    CHECK(stokes_defect(a2).max_abs() <= 1e-12);
  }
  for (const auto& f : boundary_of(st))
    for (int rep = 0; rep < 2; ++rep) {
      auto a1 = rform(r, f, 1, rep, Target::Scalar);
      CHECK(stokes_defect(a1).max_abs() <= 1e-12);
    }
  auto face = boundary_of(st)[3];
  for (const auto& e : boundary_of(face)) {
    auto a0 = rform(r, e, 0, 1, Target::Scalar);
    CHECK(stokes_defect(a0).max_abs() <= 1e-13);
  }
}

TEST_CASE("restriction") {
  auto st = cube();
  auto faces = boundary_of(st);
  // x*y pulled back to z=0 is x*y; z pulled back to z=1 is 1
  SuperForm f = SuperForm::zero(st, 0, 0, Target::Scalar);
  f.at(0, 0) = PolyFunction::monomial(1, 1, 0, GrassmannElement(1.0));
  const Stratum* z0 = nullptr;
  const Stratum* z1 = nullptr;
  for (const auto& fc : faces) {
    if (!fc.is_tangent[2] && fc.fixed[2] == 0.0) z0 = &fc;
    if (!fc.is_tangent[2] && fc.fixed[2] == 1.0) z1 = &fc;
  }
  REQUIRE(z0 != nullptr);
  auto fr = restrict_to(f, *z0);
  CHECK((fr.find(0, 0)->eval({0.5, 0.25, 0}) - GrassmannElement(0.125)).max_abs() <= 1e-15);
  SuperForm g = SuperForm::zero(st, 0, 0, Target::Scalar);
  g.at(0, 0) = PolyFunction::monomial(0, 0, 1, GrassmannElement(1.0));
  CHECK((restrict_to(g, *z1).find(0, 0)->eval({0, 0, 0}) - GrassmannElement(1.0)).max_abs() ==
        0.0);

  // random function restricted to an edge agrees with pointwise evaluation
  Rng r(3);
  auto p = random_body_poly(r, st, 2, 1.0);
  SuperForm h = SuperForm::zero(st, 0, 0, Target::Scalar);
  h.at(0, 0) = p;
  auto edge = boundary_of(faces[0])[1];
  auto hr = restrict_to(h, edge);
  for (int i = 0; i < 10; ++i) {
    double t = i / 9.0;
    std::array<double, 3> x;
    for (int ax = 0; ax < 3; ++ax) x[ax] = edge.is_tangent[ax] ? t : edge.fixed[ax];
    CHECK((hr.find(0, 0)->eval(x) - p.eval(x)).max_abs() <= 1e-14);
  }

  SuperForm on_face = SuperForm::zero(*z0, 0, 0, Target::Scalar);
  CHECK_THROWS_AS(restrict_to(on_face, *z1), DomainError);
}

TEST_CASE("wedge graded commutativity and the triple-loop oracle") {
  Rng r(19);
  auto st = cube();
  for (int rep = 0; rep < 12; ++rep) {
    int pa = rep % 3, pb = rep % 2;
    int ga = (rep / 2) % 2, gb = (rep / 3) % 2;
    auto a = rform(r, st, pa, ga, Target::V);
    auto b = rform(r, st, pb, gb, Target::V);
    auto ab = wedge(a, b);
    auto ba = wedge(b, a);
    double s = ((pa + ga) % 2) && ((pb + gb) % 2) ? -1.0 : 1.0;
    // v_i ^ v_j = -v_j ^ v_i at the symbol level
    CHECK((ab + ba.scaled(s)).max_abs() <= 1e-13);
  }

  // e ^ F against a naive component loop, even fields
  auto e = rform(r, st, 1, 0, Target::V);
  auto F = rform(r, st, 2, 0, Target::Bi);
  auto w = wedge(e, F);  // Tri-valued 3-form
  const PolyFunction* got = w.find(0b111, 0);
  REQUIRE(got != nullptr);
  PolyFunction oracle;
  for (int mu = 0; mu < 3; ++mu) {
    unsigned m1 = 1u << mu;
    for (const auto& comp : F.comps) {
      if (comp.mask & m1) continue;
      double sgn = merge_sign(m1, comp.mask);
      for (int i = 0; i < 3; ++i)
        for (int al = 0; al < 3; ++al) {
          double eps = epsilon3(i, kBivPair[al][0], kBivPair[al][1]);
          if (eps == 0.0) continue;
          const PolyFunction* ei = e.find(m1, i);
          if (!ei) continue;
          oracle += pmul(*ei, comp.c[al]).scaled(sgn * eps);
        }
    }
  }
  CHECK((*got - oracle).max_abs() <= 1e-13);
}

TEST_CASE("contraction") {
  auto st = cube();
  Rng r(40);
  auto xi = rvec_odd(r, st);
  // iota_xi(dx) = xi^x
  SuperForm dx = SuperForm::zero(st, 1, 0, Target::Scalar);
  dx.at(1u << 0, 0) = PolyFunction(1.0);
  auto c = contract(xi, dx);
  CHECK((*c.find(0, 0) - xi[0]).max_abs() == 0.0);

  // triple contraction of a 2-form dies by degree
  auto a2 = rform(r, st, 2, 0, Target::Bi);
  auto c1 = contract(xi, a2);
  auto c2 = contract(xi, c1);
  CHECK_THROWS_AS(contract(xi, c2), DegreeError);
  // but the double contraction is generically nonzero for odd xi
  bool nonzero = !c2.is_zero();
  CHECK(nonzero);

  // Leibniz for odd xi: iota(a^b) = iota(a)^b + a^iota(b)
  for (int rep = 0; rep < 8; ++rep) {
    auto a = rform(r, st, 1, rep % 2, Target::V);
    auto b = rform(r, st, 1, (rep / 2) % 2, Target::Bi);
    auto lhs = contract(xi, wedge(a, b));
    auto rhs = wedge(contract(xi, a), b) + wedge(a, contract(xi, b));
    CHECK((lhs - rhs).max_abs() <= 1e-13);
  }
}

TEST_CASE("covariant derivative: bianchi and curvature square") {
  auto st = cube();
  Rng r(77);
  auto om = rform(r, st, 1, 0, Target::Bi);
  auto F = d(om) + gbracket(om, om).scaled(0.5);
  CHECK(covariant_d(om, F).max_abs() <= 1e-12);
  for (int rep = 0; rep < 4; ++rep) {
    auto al = rform(r, st, rep % 2, rep % 2, rep < 2 ? Target::V : Target::Bi);
    auto lhs = covariant_d(om, covariant_d(om, al));
    auto rhs = gbracket(F, al);
    CHECK((lhs - rhs).max_abs() <= 1e-12);
    CHECK((covariant_d(SuperForm::zero(st, 1, 0, Target::Bi), al) - d(al)).max_abs() == 0.0);
  }
}

TEST_CASE("lie derivative matches the coordinate oracle") {
  auto st = cube();
  Rng r(55);
  auto xi = rvec_odd(r, st);
  SuperForm om0 = SuperForm::zero(st, 1, 0, Target::Bi);
  for (int p = 1; p <= 2; ++p) {
    SuperForm a = SuperForm::zero(st, p, 0, Target::Scalar);
    for (unsigned m = 0; m < 8; ++m)
      if (std::popcount(m) == unsigned(p)) a.at(m, 0) = random_body_poly(r, st, 2, 1.0);
    auto got = lie_covariant(xi, om0, a);
    // oracle: split xi over its generators and use the classical formula
    std::map<gmask, std::array<PolyFunction, 3>> parts;
    for (int mu = 0; mu < 3; ++mu)
      for (const auto& [k, cf] : xi[mu].terms())
        for (const auto& t : cf.terms())
          parts[t.mask][mu] += PolyFunction::monomial(PolyFunction::exp_of(k, 0),
                                                      PolyFunction::exp_of(k, 1),
                                                      PolyFunction::exp_of(k, 2),
                                                      GrassmannElement(t.c));
    SuperForm oracle = SuperForm::zero(st, p, 0, Target::Scalar);
    for (const auto& [mask, v] : parts)
      oracle += lie_classical(v, a).lmul(GrassmannElement::monomial(mask, 1.0));
    CHECK((got - oracle).max_abs() <= 1e-12);
  }
  // on 0-forms, L = iota d
  SuperForm f0 = SuperForm::zero(st, 0, 0, Target::Scalar);
  f0.at(0, 0) = random_body_poly(r, st, 2, 1.0);
  auto om = rform(r, st, 1, 0, Target::Bi);
  CHECK((lie_covariant(xi, om, f0) - contract(xi, covariant_d(om, f0))).max_abs() <= 1e-14);
  VecField zero{};
  CHECK(lie_covariant(zero, om, rform(r, st, 1, 0, Target::V)).max_abs() == 0.0);
}

TEST_CASE("square-bracket contraction: omega independence and component oracle") {
  auto st = cube();
  Rng r(66);
  auto xi = rvec_odd(r, st);
  for (int rep = 0; rep < 10; ++rep) {
    auto om1 = rform(r, st, 1, 0, Target::Bi);
    auto om2 = rform(r, st, 1, 0, Target::Bi);
    auto a = rform(r, st, 1 + rep % 2, rep % 2, Target::V);
    auto d12 = contract_bracket(xi, om1, a) - contract_bracket(xi, om2, a);
    CHECK(d12.max_abs() <= 1e-12);

    // direct contraction with [xi,xi]^mu = 2 xi^nu d_nu xi^mu
    VecField sq{};
    for (int mu = 0; mu < 3; ++mu)
      for (int nu = 0; nu < 3; ++nu) sq[mu] += pmul(xi[nu], xi[mu].partial(nu)).scaled(2.0);
    auto direct = contract(sq, a);
    CHECK((contract_bracket(xi, om1, a) - direct).max_abs() <= 1e-12);
  }
  VecField zero{};
  auto a = rform(r, st, 2, 0, Target::Bi);
  auto om = rform(r, st, 1, 0, Target::Bi);
  CHECK(contract_bracket(zero, om, a).max_abs() == 0.0);
}
