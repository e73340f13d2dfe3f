#include "bvt/gr_theory.hpp"

namespace bvt::gr {

namespace {

const char* axis_name(int ax) { return ax == 0 ? "x" : ax == 1 ? "y" : "z"; }

std::string slot_ax(const char* base, int ax) { return std::string(base) + "_" + axis_name(ax); }

// constant frame with bounded body determinant
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

SuperForm face_density(const Stratum& face) {
  Stratum parent = cube();
  if (face.codim != 1) throw DomainError("face density needs a codim-1 cell");
  return restrict_to(contract_axis(SuperForm::volume(parent), face.normal_axis), face);
}

}  // namespace

Frame make_frame(const SuperForm& b0, const SuperForm& b1, const SuperForm& b2) {
  Frame f;
  f.b = {b0, b1, b2};
  SuperForm det = wedge(wedge(b0, b1), b2);
  const PolyFunction* p = det.find(0, 0);
  if (!p) throw DegenerateBody("frame with vanishing volume");
  f.inv_det = pinv(*p);
  return f;
}

std::array<SuperForm, 3> frame_components(const SuperForm& x, const Frame& f) {
  std::array<SuperForm, 3> out;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    SuperForm num = tr3(wedge(wedge(x, f.b[j]), f.b[k]));
    SuperForm r = SuperForm::zero(x.st, x.degree, x.ghost, Target::Scalar);
    for (const auto& comp : num.comps)
      for (const auto& [key, c] : comp.c[0].terms()) {
        PolyFunction t;
        t.add_term(key, c);
        r.at(comp.mask, 0) += pmul(t, f.inv_det);
      }
    out[i] = std::move(r);
  }
  return out;
}

SuperForm tri_extract(const SuperForm& t, const Frame& f, int i) {
  int j = (i + 1) % 3, k = (i + 2) % 3;
  SuperForm s = (t.target == Target::Tri) ? tr3(t) : t;
  s.target = Target::Scalar;
  // multiply by the inverse volume, then by the dual bivector b_j ^ b_k
  SuperForm scaled = SuperForm::zero(s.st, s.degree, s.ghost, Target::Scalar);
  for (const auto& comp : s.comps)
    for (const auto& [key, c] : comp.c[0].terms()) {
      PolyFunction one;
      one.add_term(key, c);
      scaled.at(comp.mask, 0) += pmul(one, f.inv_det);
    }
  return wedge(scaled, wedge(f.b[j], f.b[k]));
}

VecField xi_tan(const Config& c) {
  VecField w{};
  for (int ax = 0; ax < 3; ++ax) {
    std::string n = slot_ax("xi", ax);
    if (c.has(n) && c.st.is_tangent[ax])
      if (const PolyFunction* p = c[n].find(0, 0)) w[ax] = *p;
  }
  return w;
}

// ---------------- bulk ----------------

Config random_bulk(unsigned long long seed, const GenLayout& L, int deg, double amp) {
  Rng r(seed * 0x7f4a7c15ull + 3);
  Stratum st = cube();
  Config c;
  c.st = st;
  double M[3][3];
  random_frame_body(r, M);
  SuperForm e = SuperForm::zero(st, 1, 0, Target::V);
  for (int ax = 0; ax < 3; ++ax)
    for (int i = 0; i < 3; ++i) {
      PolyFunction p(M[i][ax]);
      p += random_soul_poly(r, st, deg, 0.4 * amp, L.field_base(), L.n_odd);
      e.at(1u << ax, i) = p;
    }
  c.add("e", e);
  c.add("om", random_form(r, st, 1, 0, Target::Bi, L.field_base(), L.n_odd, deg, amp));
  c.add("c", random_form(r, st, 0, 1, Target::Bi, L.field_base(), L.n_odd, deg, amp));
  for (int ax = 0; ax < 3; ++ax)
    c.add(slot_ax("xi", ax),
          random_form(r, st, 0, 1, Target::Scalar, L.field_base(), L.n_odd, deg, amp));
  c.add("e_dag", random_form(r, st, 2, -1, Target::Bi, L.field_base(), L.n_odd, deg, amp));
  c.add("om_dag", random_form(r, st, 2, -1, Target::V, L.field_base(), L.n_odd, deg, amp));
  c.add("c_dag", random_form(r, st, 3, -2, Target::V, L.field_base(), L.n_odd, deg, amp));
  for (int ax = 0; ax < 3; ++ax)
    c.add(slot_ax("chi", ax),
          random_form(r, st, 0, -2, Target::Scalar, L.field_base(), L.n_odd, deg, amp));
  return c;
}

Config random_bulk_variation(unsigned long long seed, const GenLayout& L, int pool, int deg,
                             double amp) {
  Rng r(seed * 0xad1352ull + 11 + pool);
  Stratum st = cube();
  Config c;
  c.st = st;
  auto rf = [&](int p, int g, Target t) {
    return random_form(r, st, p, g, t, L.var_base(pool), L.n_var, deg, amp);
  };
  c.add("e", rf(1, 0, Target::V));
  c.add("om", rf(1, 0, Target::Bi));
  c.add("c", rf(0, 1, Target::Bi));
  for (int ax = 0; ax < 3; ++ax) c.add(slot_ax("xi", ax), rf(0, 1, Target::Scalar));
  c.add("e_dag", rf(2, -1, Target::Bi));
  c.add("om_dag", rf(2, -1, Target::V));
  c.add("c_dag", rf(3, -2, Target::V));
  for (int ax = 0; ax < 3; ++ax) c.add(slot_ax("chi", ax), rf(0, -2, Target::Scalar));
  return c;
}

GrassmannElement bulk_action(const Config& c, double lambda, const Mutations& mu) {
  const Stratum& st = c.st;
  const SuperForm &e = c["e"], &om = c["om"], &cg = c["c"];
  const SuperForm &ed = c["e_dag"], &omd = c["om_dag"], &cd = c["c_dag"];
  VecField xi = xi_tan(c);
  SuperForm F = curvature(om);
  GrassmannElement s;
  s += tr_int(wedge(e, F)) * mu("gr0.S.eF");
  s += tr_int(wedge(ed, lie_covariant(xi, om, e) - gbracket(cg, e))) * mu("gr0.S.edag");
  s += tr_int(wedge(omd, contract(xi, F) - covariant_d(om, cg))) * mu("gr0.S.omdag");
  s += tr_int(wedge(cd, (contract(xi, contract(xi, F)) - gbracket(cg, cg)).scaled(0.5))) *
       mu("gr0.S.cdag");
  // (1/2) iota_{[xi,xi]} xi_dag with xi_dag = chi V
  VecField sq = square_bracket(xi);
  PolyFunction acc;
  for (int ax = 0; ax < 3; ++ax) {
    const PolyFunction* chi = c[slot_ax("chi", ax)].find(0, 0);
    if (chi && !sq[ax].is_zero()) acc += pmul(sq[ax], *chi);
  }
  s += integrate(wedge(sform(st, acc.scaled(0.5)), SuperForm::volume(st))) * mu("gr0.S.xidag");
  if (lambda != 0.0)
    s += tr_int(wedge(wedge(e, e), e)) * (lambda / 6.0) * mu("gr0.S.cosmo");
  return s;
}

GrassmannElement bulk_alpha(const Config& c, const Config& w, const Mutations& mu) {
  const Stratum& st = c.st;
  GrassmannElement s;
  s += tr_int(wedge(c["e"], w["e_dag"]));
  s += tr_int(wedge(c["om"], w["om_dag"]));
  s += tr_int(wedge(c["c"], w["c_dag"]));
  PolyFunction acc;
  for (int ax = 0; ax < 3; ++ax) {
    const PolyFunction* xi = c[slot_ax("xi", ax)].find(0, 0);
    const PolyFunction* dchi = w[slot_ax("chi", ax)].find(0, 0);
    if (xi && dchi) acc += pmul(*xi, *dchi);
  }
  s += integrate(wedge(sform(st, acc), SuperForm::volume(st)));
  return s * mu("gr0.alpha");
}

GrassmannElement bulk_varpi(const Config& c, const Config& a, const Config& b) {
  const Stratum& st = c.st;
  auto term = [&](const Config& u, const Config& v) {
    GrassmannElement s;
    s += tr_int(wedge(u["e"], v["e_dag"]));
    s += tr_int(wedge(u["om"], v["om_dag"]));
    s += tr_int(wedge(u["c"], v["c_dag"]));
    PolyFunction acc;
    for (int ax = 0; ax < 3; ++ax) {
      const PolyFunction* xi = u[slot_ax("xi", ax)].find(0, 0);
      const PolyFunction* dchi = v[slot_ax("chi", ax)].find(0, 0);
      if (xi && dchi) acc += pmul(*xi, *dchi);
    }
    s += integrate(wedge(sform(st, acc), SuperForm::volume(st)));
    return s;
  };
  return term(a, b) + term(b, a);
}

Config bulk_q(const Config& c, double lambda, const Mutations& mu) {
  const Stratum& st = c.st;
  const SuperForm &e = c["e"], &om = c["om"], &cg = c["c"];
  const SuperForm &ed = c["e_dag"], &omd = c["om_dag"], &cd = c["c_dag"];
  VecField xi = xi_tan(c);
  SuperForm F = curvature(om);
  Config q = zero_like(c);
  q.get("e") = (lie_covariant(xi, om, e) - gbracket(cg, e)).scaled(mu("gr0.Q.e"));
  q.get("om") = (contract(xi, F) - covariant_d(om, cg)).scaled(mu("gr0.Q.om"));
  q.get("c") =
      (contract(xi, contract(xi, F)) - gbracket(cg, cg)).scaled(0.5 * mu("gr0.Q.c"));
  VecField sq = square_bracket(xi);
  for (int ax = 0; ax < 3; ++ax)
    q.get(slot_ax("xi", ax)) = sform(st, sq[ax].scaled(0.5 * mu("gr0.Q.xi")), 2);
  {
    SuperForm qe = F + lie_covariant(xi, om, ed) - gbracket(cg, ed);
    if (lambda != 0.0) qe += wedge(e, e).scaled(0.5 * lambda * mu("gr0.Q.cosmo"));
    q.get("e_dag") = qe.scaled(mu("gr0.Q.edag"));
  }
  q.get("c_dag") = (gbracket(ed, e).scaled(-mu("gr0.Q.cdag1")) -
                    covariant_d(om, omd).scaled(mu("gr0.Q.cdag2")) +
                    gbracket(cd, cg).scaled(-mu("gr0.Q.cdag3")))
                       .scaled(mu("gr0.Q.cdag"));
  q.get("om_dag") = (covariant_d(om, e) - contract(xi, gbracket(ed, e)) -
                     covariant_d(om, contract(xi, omd)) - gbracket(cg, omd) +
                     covariant_d(om, contract(xi, contract(xi, cd))).scaled(0.5))
                        .scaled(mu("gr0.Q.omdag"));
  // Q xi_dag, written through the 1-form coefficient chi
  for (int ax = 0; ax < 3; ++ax) {
    SuperForm t = SuperForm::zero(st, 3, 0, Target::Tri);
    t -= wedge(contract_axis(ed, ax), covariant_d(om, e)).scaled(mu("gr0.Q.chi1"));
    t -= wedge(covariant_d(om, ed), contract_axis(e, ax)).scaled(mu("gr0.Q.chi2"));
    t -= wedge(contract_axis(omd, ax), F).scaled(mu("gr0.Q.chi3"));
    t += wedge(contract(xi, contract_axis(cd, ax)), F).scaled(mu("gr0.Q.chi4"));
    PolyFunction coeff;
    SuperForm trt = tr3(t);
    if (const PolyFunction* top = trt.find(0b111, 0)) coeff = *top;
    for (int nu = 0; nu < 3; ++nu) {
      const PolyFunction* chn = c[slot_ax("chi", nu)].find(0, 0);
      if (!chn) continue;
      if (!xi[nu].is_zero()) {
        const PolyFunction* chax = c[slot_ax("chi", ax)].find(0, 0);
        if (chax) coeff += pmul(xi[nu].partial(nu), *chax).scaled(mu("gr0.Q.chi6"));
      }
      coeff += pmul(xi[nu].partial(ax), *chn).scaled(mu("gr0.Q.chi5"));
      if (!xi[nu].is_zero()) {
        const PolyFunction* chax2 = c[slot_ax("chi", ax)].find(0, 0);
        if (chax2) coeff += pmul(xi[nu], chax2->partial(nu)).scaled(mu("gr0.Q.chi7"));
      }
    }
    q.get(slot_ax("chi", ax)) = sform(st, coeff.scaled(mu("gr0.Q.chi")), -1);
  }
  return q;
}

// ---------------- pre-boundary space ----------------

Config restrict_prebd(const Config& bulk, const Stratum& face) {
  int n = face.normal_axis;
  Config p;
  p.st = face;
  p.add("e", restrict_to(bulk["e"], face));
  p.add("e_n", restrict_to(contract_axis(bulk["e"], n), face));
  p.add("om", restrict_to(bulk["om"], face));
  p.add("c", restrict_to(bulk["c"], face));
  for (int ax = 0; ax < 3; ++ax)
    if (face.is_tangent[ax])
      p.add(slot_ax("xi", ax), restrict_to(bulk[slot_ax("xi", ax)], face));
  p.add("xi_n", restrict_to(bulk[slot_ax("xi", n)], face));
  p.add("e_dag", restrict_to(bulk["e_dag"], face));
  p.add("e_dag_n", restrict_to(contract_axis(bulk["e_dag"], n), face));
  p.add("om_dag", restrict_to(bulk["om_dag"], face));
  p.add("om_dag_n", restrict_to(contract_axis(bulk["om_dag"], n), face));
  p.add("c_dag_n", restrict_to(contract_axis(bulk["c_dag"], n), face));
  for (int ax = 0; ax < 3; ++ax)
    if (face.is_tangent[ax])
      p.add(slot_ax("chi", ax), restrict_to(bulk[slot_ax("chi", ax)], face));
  p.add("chi_n", restrict_to(bulk[slot_ax("chi", n)], face));
  return p;
}

Config random_prebd_variation(const Stratum& face, unsigned long long seed, const GenLayout& L,
                              int pool, int deg, double amp) {
  Rng r(seed * 0x2545f491ull + 17 + pool);
  Config p;
  p.st = face;
  auto rf = [&](int pd, int g, Target t) {
    return random_form(r, face, pd, g, t, L.var_base(pool), L.n_var, deg, amp);
  };
  p.add("e", rf(1, 0, Target::V));
  p.add("e_n", rf(0, 0, Target::V));
  p.add("om", rf(1, 0, Target::Bi));
  p.add("c", rf(0, 1, Target::Bi));
  for (int ax = 0; ax < 3; ++ax)
    if (face.is_tangent[ax]) p.add(slot_ax("xi", ax), rf(0, 1, Target::Scalar));
  p.add("xi_n", rf(0, 1, Target::Scalar));
  p.add("e_dag", rf(2, -1, Target::Bi));
  p.add("e_dag_n", rf(1, -1, Target::Bi));
  p.add("om_dag", rf(2, -1, Target::V));
  p.add("om_dag_n", rf(1, -1, Target::V));
  p.add("c_dag_n", rf(2, -2, Target::V));
  for (int ax = 0; ax < 3; ++ax)
    if (face.is_tangent[ax]) p.add(slot_ax("chi", ax), rf(0, -2, Target::Scalar));
  p.add("chi_n", rf(0, -2, Target::Scalar));
  return p;
}

namespace {

// xi-tangential contraction helpers on the pre-boundary space
PolyFunction poly_of(const Config& c, std::string_view n) {
  const PolyFunction* p = c[n].find(0, 0);
  return p ? *p : PolyFunction();
}

SuperForm sp(const Config& c, std::string_view n, int ghost = 0) {
  return sform(c.st, poly_of(c, n), ghost);
}

}  // namespace

GrassmannElement prebd_alpha(const Config& c, const Config& w, const Mutations& mu) {
  const Stratum& st = c.st;
  const SuperForm &e = c["e"], &en = c["e_n"], &ed = c["e_dag"], &edn = c["e_dag_n"];
  const SuperForm &omd = c["om_dag"], &omdn = c["om_dag_n"], &cdn = c["c_dag_n"];
  SuperForm xin = sp(c, "xi_n", 1);
  VecField xit = xi_tan(c);
  SuperForm V = face_density(st);
  GrassmannElement s;
  s -= tr_int(wedge(e, w["om"])) * mu("gr01.ac.e_om");
  s += tr_int(wedge(wedge(edn, xin), w["e"])) * mu("gr01.ac.edn_e");
  s += tr_int(wedge(ed, wedge(w["e_n"], xin))) * mu("gr01.ac.ed_en");
  s += tr_int(wedge(ed, wedge(en, sform(st, poly_of(w, "xi_n"), 1)))) * mu("gr01.ac.ed_xin");
  s += tr_int(wedge(ed, contract(xi_tan(w), e))) * mu("gr01.ac.ed_ixe");
  s += tr_int(wedge(contract(xit, omd), w["om"])) * mu("gr01.ac.ixomd_om");
  s += tr_int(wedge(wedge(omdn, xin), w["om"])) * mu("gr01.ac.omdn_om");
  s += tr_int(wedge(omd, w["c"])) * mu("gr01.ac.omd_c");
  s -= tr_int(wedge(wedge(contract(xit, cdn), xin), w["om"])) * mu("gr01.ac.cdn_om");
  {
    PolyFunction ichi;
    for (int ax = 0; ax < 3; ++ax)
      if (st.is_tangent[ax])
        ichi += pmul(poly_of(w, slot_ax("xi", ax)), poly_of(c, slot_ax("chi", ax)));
    s += integrate(wedge(wedge(xin, sform(st, ichi, -1)), V)) * mu("gr01.ac.chi");
    PolyFunction t2 = pmul(poly_of(c, "xi_n"), pmul(poly_of(w, "xi_n"), poly_of(c, "chi_n")));
    s += integrate(wedge(sform(st, t2, 0), V)) * mu("gr01.ac.chin");
  }
  return s;
}

GrassmannElement prebd_varpi(const Config& c, const Config& a, const Config& b) {
  // the check-stage two-form is delta of the check-stage one-form, evaluated
  // exactly on constant directions
  auto af = [](const Config& cc, const Config& w) { return prebd_alpha(cc, w, Mutations{}); };
  GrassmannElement dxay =
      gateaux([&](const Config& cc) { return eval_one_form(af, cc, b); }, c, a, 3);
  GrassmannElement dyax =
      gateaux([&](const Config& cc) { return eval_one_form(af, cc, a); }, c, b, 3);
  return dxay - dyax;
}

GrassmannElement prebd_s(const Config& c, const Mutations& mu) {
  const Stratum& st = c.st;
  const SuperForm &e = c["e"], &en = c["e_n"], &om = c["om"], &cg = c["c"];
  const SuperForm &ed = c["e_dag"], &edn = c["e_dag_n"];
  const SuperForm &omd = c["om_dag"], &omdn = c["om_dag_n"], &cdn = c["c_dag_n"];
  SuperForm xin = sp(c, "xi_n", 1);
  VecField xit = xi_tan(c);
  SuperForm F = curvature(om);
  SuperForm V = face_density(st);
  GrassmannElement s;
  s -= tr_int(wedge(contract(xit, e), F)) * mu("gr01.sc.1");
  s -= tr_int(wedge(wedge(en, xin), F)) * mu("gr01.sc.2");
  s -= tr_int(wedge(cg, covariant_d(om, e))) * mu("gr01.sc.3");
  s += tr_int(wedge(gbracket(cg, cg).scaled(0.5), omd)) * mu("gr01.sc.4");
  s += tr_int(wedge(wedge(cg, gbracket(edn, e)), xin)) * (0.5 * mu("gr01.sc.5"));
  s -= tr_int(wedge(wedge(gbracket(cg, edn), e), xin)) * (0.5 * mu("gr01.sc.23"));
  s += tr_int(wedge(gbracket(cg, wedge(edn, xin)), e)) * (0.5 * mu("gr01.sc.24"));
  s += tr_int(wedge(wedge(gbracket(cg, e), edn), xin)) * (0.5 * mu("gr01.sc.25"));
  s += tr_int(wedge(wedge(cg, gbracket(ed, en)), xin)) * mu("gr01.sc.6");
  s += tr_int(wedge(cg, covariant_d(om, contract(xit, omd) + wedge(omdn, xin)))) *
       mu("gr01.sc.7");
  s -= tr_int(wedge(cg, covariant_d(om, wedge(contract(xit, cdn), xin)))) * mu("gr01.sc.8");
  s += tr_int(wedge(contract(xit, F), wedge(contract(xit, cdn), xin))) * mu("gr01.sc.9");
  s -= tr_int(wedge(contract(xit, contract(xit, F)).scaled(0.5), omd)) * mu("gr01.sc.10");
  s -= tr_int(wedge(contract(xit, F), wedge(omdn, xin))) * mu("gr01.sc.11");
  s -= tr_int(wedge(contract(xit, F), contract(xit, omd))) * mu("gr01.sc.12");
  VecField sq = square_bracket(xit);
  s -= tr_int(wedge(contract(sq, e).scaled(0.5), ed)) * mu("gr01.sc.13");
  s += tr_int(wedge(wedge(en, xin), covariant_d(om, contract(xit, ed)))) * mu("gr01.sc.14");
  s += tr_int(wedge(contract(xit, e), covariant_d(om, wedge(edn, xin)))) * mu("gr01.sc.15");
  s += tr_int(wedge(wedge(en, xin), covariant_d(om, wedge(edn, xin)))) * mu("gr01.sc.17");
  {
    PolyFunction ixdn;
    for (int nu = 0; nu < 3; ++nu)
      if (st.is_tangent[nu] && !xit[nu].is_zero())
        ixdn += pmul(xit[nu], poly_of(c, "xi_n").partial(nu));
    SuperForm dxin = d(xin);
    s -= tr_int(wedge(wedge(e, edn), sform(st, ixdn, 2))) * mu("gr01.sc.20");
    s += tr_int(wedge(covariant_d(om, contract(xit, edn)), wedge(xin, e))) * mu("gr01.sc.21");
    s -= tr_int(wedge(wedge(contract(xit, e), dxin), edn)) * mu("gr01.sc.22");
  }
  {
    // -(1/2) iota_{[xi,xi]} chi V xi_n - iota_xi(d xi_n) chi_n V xi_n
    PolyFunction br;
    for (int ax = 0; ax < 3; ++ax)
      if (st.is_tangent[ax]) br += pmul(sq[ax], poly_of(c, slot_ax("chi", ax)));
    s -= integrate(wedge(wedge(sform(st, br.scaled(0.5), 0), V), xin)) * mu("gr01.sc.18");
    PolyFunction ixdxin;
    for (int nu = 0; nu < 3; ++nu)
      if (st.is_tangent[nu] && !xit[nu].is_zero())
        ixdxin += pmul(xit[nu], poly_of(c, "xi_n").partial(nu));
    PolyFunction t = pmul(ixdxin, poly_of(c, "chi_n"));
    s -= integrate(wedge(wedge(sform(st, t, 0), V), xin)) * mu("gr01.sc.19");
  }
  return s;
}

GrassmannElement prebd_alpha_corr(const Config& c) {
  return tr_int(wedge(wedge(c["e"], c["e_dag_n"]), sp(c, "xi_n", 1)));
}

Config prebd_kernel(const Config& free, const Config& c, const Mutations& mu) {
  const Stratum& st = c.st;
  auto tang = st.tangent_axes();
  const SuperForm &e = c["e"], &en = c["e_n"], &ed = c["e_dag"], &edn = c["e_dag_n"];
  const SuperForm &omd = c["om_dag"], &omdn = c["om_dag_n"], &cdn = c["c_dag_n"];
  SuperForm xin = sp(c, "xi_n", 1);
  VecField xit = xi_tan(c);
  SuperForm V = face_density(st);
  Frame fr = make_frame(contract_axis(e, tang[0]), contract_axis(e, tang[1]), en);
  auto comp = frame_components(free["e_n"], fr);  // X_{e_n}^{(0)}, ^{(1)}, ^{(n)}

  Config x = zero_like(c);
  // xi components
  for (int a = 0; a < 2; ++a)
    x.get(slot_ax("xi", tang[a])) = wedge(comp[a], xin).scaled(-mu("gr01.ker.xi"));
  x.get("xi_n") = wedge(comp[2], xin).scaled(-mu("gr01.ker.xi"));
  // om variation
  SuperForm xom = SuperForm::zero(st, 1, 0, Target::Bi);
  for (int b = 0; b < 2; ++b)
    xom -= wedge(wedge(comp[b], xin), contract_axis(ed, tang[b]));
  xom -= wedge(wedge(comp[2], xin), edn);
  xom += wedge(free["e_dag_n"], xin);
  x.get("om") = xom.scaled(mu("gr01.ker.om"));
  // e variation
  SuperForm xe = SuperForm::zero(st, 1, 0, Target::V);
  for (int b = 0; b < 2; ++b)
    xe += wedge(wedge(comp[b], xin), contract_axis(omd, tang[b]));
  xe += wedge(wedge(comp[2], xin), omdn);
  xe += wedge(free["om_dag_n"], xin);
  xe -= wedge(contract(xit, free["c_dag_n"]), xin);
  xe += wedge(comp[2], wedge(contract(xit, cdn), xin));
  x.get("e") = xe.scaled(mu("gr01.ker.e"));
  // c variation
  x.get("c") = contract(xit, x["om"]).scaled(mu("gr01.ker.c"));
  // e_dag variation via the two projected branches
  SuperForm xeval = xe, xomval = xom;
  SuperForm xed = SuperForm::zero(st, 2, -1, Target::Bi);
  for (int a = 0; a < 2; ++a) {
    SuperForm t = SuperForm::zero(st, 2, 0, Target::Tri);
    t += wedge(xeval, contract_axis(ed, tang[a]));
    t += wedge(xomval, contract_axis(omd, tang[a]));
    t -= wedge(wedge(xomval, contract_axis(cdn, tang[a])), xin);
    SuperForm ext = tri_extract(t, fr, a);
    // density pieces carry the same projection
    PolyFunction dens;
    dens -= pmul(pmul(comp[2].find(0, 0) ? *comp[2].find(0, 0) : PolyFunction(),
                      poly_of(c, "xi_n")),
                 poly_of(c, slot_ax("chi", tang[a])));
    dens += pmul(poly_of(free, slot_ax("chi", tang[a])), poly_of(c, "xi_n"));
    ext += tri_extract(wedge(sform(st, dens, -1), V), fr, a);
    xed += ext;
  }
  {
    SuperForm t = SuperForm::zero(st, 2, 0, Target::Tri);
    t += wedge(xeval, edn);
    t += wedge(xomval, omdn);
    t -= wedge(xomval, contract(xit, cdn));
    PolyFunction dens;
    dens -= pmul(pmul((comp[2].find(0, 0) ? *comp[2].find(0, 0) : PolyFunction()).scaled(2.0),
                      poly_of(c, "xi_n")),
                 poly_of(c, "chi_n"));
    dens += pmul(poly_of(free, "chi_n"), poly_of(c, "xi_n"));
    for (int a = 0; a < 2; ++a)
      dens -= pmul(pmul(comp[a].find(0, 0) ? *comp[a].find(0, 0) : PolyFunction(),
                        poly_of(c, "xi_n")),
                   poly_of(c, slot_ax("chi", tang[a])));
    SuperForm tt = t + wedge(sform(st, dens, -1), V);
    xed += tri_extract(tt, fr, 2);
  }
  x.get("e_dag") = xed.scaled(mu("gr01.ker.edag"));
  // free slots pass through
  x.get("e_n") = free["e_n"];
  x.get("e_dag_n") = free["e_dag_n"];
  x.get("c_dag_n") = free["c_dag_n"];
  x.get("om_dag_n") = free["om_dag_n"];
  for (int a = 0; a < 2; ++a)
    x.get(slot_ax("chi", tang[a])) = free[slot_ax("chi", tang[a])];
  x.get("chi_n") = free["chi_n"];
  return x;
}

Config project_boundary(const Config& c, double eps, const Mutations& mu) {
  const Stratum& st = c.st;
  auto tang = st.tangent_axes();
  const SuperForm &e = c["e"], &en = c["e_n"], &om = c["om"], &cg = c["c"];
  const SuperForm &ed = c["e_dag"], &edn = c["e_dag_n"];
  const SuperForm &omd = c["om_dag"], &omdn = c["om_dag_n"], &cdn = c["c_dag_n"];
  SuperForm xin = sp(c, "xi_n", 1);
  VecField xit = xi_tan(c);
  SuperForm V = face_density(st);
  Frame fr = make_frame(contract_axis(e, tang[0]), contract_axis(e, tang[1]), en);

  Config out;
  out.st = st;
  out.add("e", e - wedge(omdn, xin).scaled(mu("gr1.proj.e1")) +
                   wedge(contract(xit, cdn), xin).scaled(mu("gr1.proj.e2")));
  out.add("om", om - wedge(edn, xin).scaled(mu("gr1.proj.om")));
  out.add("c", cg - wedge(contract(xit, edn), xin).scaled(mu("gr1.proj.c")));
  for (int a = 0; a < 2; ++a) out.add(slot_ax("xi", tang[a]), c[slot_ax("xi", tang[a])]);
  out.add("xi_n", xin.scaled(1.0 / (1.0 + eps)));
  {
    SuperForm ned = ed;
    for (int a = 0; a < 2; ++a) {
      PolyFunction dens = pmul(poly_of(c, slot_ax("chi", tang[a])), poly_of(c, "xi_n"));
      ned -= tri_extract(wedge(sform(st, dens, -1), V), fr, a).scaled(mu("gr1.proj.chia"));
      SuperForm omdna = contract_axis(omdn, tang[a]);  // V 0-form
      ned += tri_extract(wedge(wedge(omdna, xin), ed), fr, a).scaled(mu("gr1.proj.omna"));
      ned -= tri_extract(wedge(wedge(edn, xin), contract_axis(omd, tang[a])), fr, a)
                 .scaled(mu("gr1.proj.edn_omda"));
      ned -= tri_extract(
                 wedge(wedge(contract(xit, contract_axis(cdn, tang[a])), xin), ed), fr, a)
                 .scaled(mu("gr1.proj.cdna"));
    }
    PolyFunction densn = pmul(poly_of(c, "chi_n"), poly_of(c, "xi_n"));
    ned -= tri_extract(wedge(sform(st, densn, -1), V), fr, 2).scaled(mu("gr1.proj.chin"));
    ned += tri_extract(wedge(wedge(omdn, xin), edn), fr, 2).scaled(mu("gr1.proj.omdn"));
    ned -= tri_extract(wedge(edn, wedge(contract(xit, cdn), xin)), fr, 2)
               .scaled(mu("gr1.proj.edn_cdn"));
    out.add("e_dag", ned);
  }
  out.add("om_dag", omd);
  out.add("eps_n", en.scaled(1.0 + eps), true);
  return out;
}

}  // namespace bvt::gr
