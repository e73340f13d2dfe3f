#include "bvt/gr_theory.hpp"

namespace bvt::gr {

namespace {

PolyFunction poly_of(const Config& c, std::string_view n) {
  const PolyFunction* p = c[n].find(0, 0);
  return p ? *p : PolyFunction();
}

SuperForm sp(const Config& c, std::string_view n, int ghost = 0) {
  return sform(c.st, poly_of(c, n), ghost);
}

void random_frame_body(Rng& r, double M[3][3]) {
  double det = 0.0;
  do {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M[i][j] = r.uniform(-1, 1);
    det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
          M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
          M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  } while (std::abs(det) < 0.35);
}

}  // namespace

Config random_codim3(const Stratum& vx, unsigned long long seed, const GenLayout& L,
                     double amp) {
  Rng r(seed * 0xabc901ull + 53);
  Config c;
  c.st = vx;
  c.add("c", random_form(r, vx, 0, 1, Target::Bi, L.field_base(), L.n_odd, 0, amp));
  c.add("xi_a", random_form(r, vx, 0, 1, Target::Scalar, L.field_base(), L.n_odd, 0, amp));
  c.add("xi_m", random_form(r, vx, 0, 1, Target::Scalar, L.field_base(), L.n_odd, 0, amp));
  c.add("xi_n", random_form(r, vx, 0, 1, Target::Scalar, L.field_base(), L.n_odd, 0, amp));
  double M[3][3];
  random_frame_body(r, M);
  const char* names[3] = {"eps_a", "eps_m", "eps_n"};
  for (int k = 0; k < 3; ++k) {
    SuperForm f = SuperForm::zero(vx, 0, 0, Target::V);
    for (int i = 0; i < 3; ++i) {
      PolyFunction p(M[i][k]);
      p += PolyFunction(random_soul_poly(r, vx, 0, 0.25 * amp, L.field_base(), L.n_odd));
      f.at(0, i) = p;
    }
    c.add(names[k], f, true);
  }
  return c;
}

Config random_codim3_variation(const Stratum& vx, unsigned long long seed, const GenLayout& L,
                               int pool, double amp) {
  Rng r(seed * 0x7e55e1ull + 59 + pool);
  Config c;
  c.st = vx;
  auto rf = [&](int g, Target t) {
    return random_form(r, vx, 0, g, t, L.var_base(pool), L.n_var, 0, amp);
  };
  c.add("c", rf(1, Target::Bi));
  c.add("xi_a", rf(1, Target::Scalar));
  c.add("xi_m", rf(1, Target::Scalar));
  c.add("xi_n", rf(1, Target::Scalar));
  c.add("eps_a", SuperForm::zero(vx, 0, 0, Target::V), true);
  c.add("eps_m", SuperForm::zero(vx, 0, 0, Target::V), true);
  c.add("eps_n", SuperForm::zero(vx, 0, 0, Target::V), true);
  return c;
}

GrassmannElement c3_action(const Config& c, double lambda, const Mutations& mu) {
  SuperForm cc = gbracket(c["c"], c["c"]).scaled(0.5);
  GrassmannElement s;
  s += tr_int(wedge(cc, wedge(c["eps_a"], sp(c, "xi_a", 1)))) * mu("gr3.S.a");
  s += tr_int(wedge(cc, wedge(c["eps_m"], sp(c, "xi_m", 1)))) * mu("gr3.S.m");
  s += tr_int(wedge(cc, wedge(c["eps_n"], sp(c, "xi_n", 1)))) * mu("gr3.S.n");
  if (lambda != 0.0)
    s -= tr_int(wedge(wedge(wedge(c["eps_n"], sp(c, "xi_n", 1)),
                            wedge(c["eps_m"], sp(c, "xi_m", 1))),
                      wedge(c["eps_a"], sp(c, "xi_a", 1)))) *
         lambda * mu("gr3.S.cosmo");
  return s;
}

GrassmannElement c3_alpha(const Config& c, const Config& w, const Mutations& mu) {
  GrassmannElement s;
  s -= tr_int(wedge(wedge(c["eps_n"], sp(c, "xi_n", 1)), w["c"])) * mu("gr3.al.n");
  s -= tr_int(wedge(wedge(c["eps_m"], sp(c, "xi_m", 1)), w["c"])) * mu("gr3.al.m");
  s -= tr_int(wedge(wedge(c["eps_a"], sp(c, "xi_a", 1)), w["c"])) * mu("gr3.al.a");
  return s;
}

GrassmannElement c3_varpi(const Config& c, const Config& a, const Config& b) {
  const Stratum& st = c.st;
  auto term = [&](const Config& u, const Config& v) {
    GrassmannElement s;
    s -= tr_int(wedge(wedge(c["eps_n"], sform(st, poly_of(u, "xi_n"), 1)), v["c"]));
    s -= tr_int(wedge(wedge(c["eps_m"], sform(st, poly_of(u, "xi_m"), 1)), v["c"]));
    s -= tr_int(wedge(wedge(c["eps_a"], sform(st, poly_of(u, "xi_a"), 1)), v["c"]));
    return s;
  };
  return term(a, b) + term(b, a);
}

Config c3_q(const Config& c, const Mutations& mu) {
  Frame fr = make_frame(c["eps_a"], c["eps_m"], c["eps_n"]);
  SuperForm act = gbracket(c["c"], wedge(c["eps_a"], sp(c, "xi_a", 1))) +
                  gbracket(c["c"], wedge(c["eps_m"], sp(c, "xi_m", 1))) +
                  gbracket(c["c"], wedge(c["eps_n"], sp(c, "xi_n", 1)));
  auto comp = frame_components(act, fr);
  Config q = zero_like(c);
  q.get("c") = gbracket(c["c"], c["c"]).scaled(0.5 * mu("gr3.Q.c"));
  q.get("xi_a") = comp[0].scaled(mu("gr3.Q.xi"));
  q.get("xi_m") = comp[1].scaled(mu("gr3.Q.xi"));
  q.get("xi_n") = comp[2].scaled(mu("gr3.Q.xi"));
  return q;
}

}  // namespace bvt::gr
