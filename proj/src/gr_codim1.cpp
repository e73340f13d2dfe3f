#include "bvt/gr_theory.hpp"

namespace bvt::gr {

namespace {

const char* axis_name(int ax) { return ax == 0 ? "x" : ax == 1 ? "y" : "z"; }
std::string slot_ax(const char* base, int ax) { return std::string(base) + "_" + axis_name(ax); }

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

SuperForm const_vec(const Stratum& st, Rng& r, const double col[3], const GenLayout& L,
                    double soul_amp) {
  SuperForm f = SuperForm::zero(st, 0, 0, Target::V);
  for (int i = 0; i < 3; ++i) {
    PolyFunction p(col[i]);
    // constant soul keeps the completion constant over the stratum
    p += PolyFunction(random_soul_poly(r, st, 0, soul_amp, L.field_base(), L.n_odd));
    f.at(0, i) = p;
  }
  return f;
}

}  // namespace

Config random_codim1(const Stratum& face, unsigned long long seed, const GenLayout& L, int deg,
                     double amp) {
  Rng r(seed * 0x9134175ull + 29);
  auto tang = face.tangent_axes();
  Config c;
  c.st = face;
  double M[3][3];
  random_frame_body(r, M);
  SuperForm e = SuperForm::zero(face, 1, 0, Target::V);
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 3; ++i) {
      PolyFunction p(M[i][a]);
      p += random_soul_poly(r, face, deg, 0.4 * amp, L.field_base(), L.n_odd);
      e.at(1u << tang[a], i) = p;
    }
  c.add("e", e);
  c.add("om", random_form(r, face, 1, 0, Target::Bi, L.field_base(), L.n_odd, deg, amp));
  c.add("c", random_form(r, face, 0, 1, Target::Bi, L.field_base(), L.n_odd, deg, amp));
  for (int a = 0; a < 2; ++a)
    c.add(slot_ax("xi", tang[a]),
          random_form(r, face, 0, 1, Target::Scalar, L.field_base(), L.n_odd, deg, amp));
  c.add("xi_n", random_form(r, face, 0, 1, Target::Scalar, L.field_base(), L.n_odd, deg, amp));
  c.add("e_dag", random_form(r, face, 2, -1, Target::Bi, L.field_base(), L.n_odd, deg, amp));
  c.add("om_dag", random_form(r, face, 2, -1, Target::V, L.field_base(), L.n_odd, deg, amp));
  double col[3] = {M[0][2], M[1][2], M[2][2]};
  c.add("eps_n", const_vec(face, r, col, L, 0.25 * amp), true);
  return c;
}

Config random_codim1_variation(const Stratum& face, unsigned long long seed, const GenLayout& L,
                               int pool, int deg, double amp) {
  Rng r(seed * 0x40ab5f1ull + 31 + pool);
  auto tang = face.tangent_axes();
  Config c;
  c.st = face;
  auto rf = [&](int p, int g, Target t) {
    return random_form(r, face, p, g, t, L.var_base(pool), L.n_var, deg, amp);
  };
  c.add("e", rf(1, 0, Target::V));
  c.add("om", rf(1, 0, Target::Bi));
  c.add("c", rf(0, 1, Target::Bi));
  for (int a = 0; a < 2; ++a) c.add(slot_ax("xi", tang[a]), rf(0, 1, Target::Scalar));
  c.add("xi_n", rf(0, 1, Target::Scalar));
  c.add("e_dag", rf(2, -1, Target::Bi));
  c.add("om_dag", rf(2, -1, Target::V));
  c.add("eps_n", SuperForm::zero(face, 0, 0, Target::V), true);
  return c;
}

GrassmannElement c1_action(const Config& c, double lambda, const Mutations& mu) {
  const SuperForm &e = c["e"], &om = c["om"], &cg = c["c"];
  const SuperForm &ed = c["e_dag"], &omd = c["om_dag"], &epsn = c["eps_n"];
  SuperForm xin = sp(c, "xi_n", 1);
  VecField xit = xi_tan(c);
  SuperForm F = curvature(om);
  SuperForm epsxin = wedge(epsn, xin);
  GrassmannElement s;
  s -= tr_int(wedge(contract(xit, e), F)) * mu("gr1.S.1");
  s -= tr_int(wedge(epsxin, F)) * mu("gr1.S.2");
  s -= tr_int(wedge(cg, covariant_d(om, e))) * mu("gr1.S.3");
  s += tr_int(wedge(gbracket(cg, cg).scaled(0.5), omd)) * mu("gr1.S.4");
  s += tr_int(wedge(contract(xit, contract(xit, F)).scaled(0.5), omd)) * mu("gr1.S.5");
  s += tr_int(wedge(contract(square_bracket(xit), e).scaled(0.5), ed)) * mu("gr1.S.6");
  s += tr_int(wedge(cg, covariant_d(om, contract(xit, omd)))) * mu("gr1.S.7");
  s += tr_int(wedge(lie_covariant(xit, om, epsxin), ed)) * mu("gr1.S.8");
  s -= tr_int(wedge(gbracket(cg, epsxin), ed)) * mu("gr1.S.9");
  if (lambda != 0.0)
    s -= tr_int(wedge(wedge(epsxin, e), e)) * (0.5 * lambda) * mu("gr1.S.cosmo");
  return s;
}

GrassmannElement c1_alpha(const Config& c, const Config& w, const Mutations& mu) {
  const SuperForm &e = c["e"], &ed = c["e_dag"], &omd = c["om_dag"], &epsn = c["eps_n"];
  VecField xit = xi_tan(c);
  GrassmannElement s;
  s -= tr_int(wedge(e, w["om"])) * mu("gr1.al.1");
  s += tr_int(wedge(omd, w["c"])) * mu("gr1.al.2");
  s -= tr_int(wedge(wedge(ed, epsn), sform(c.st, poly_of(w, "xi_n"), 1))) * mu("gr1.al.3");
  s += tr_int(wedge(contract(xi_tan(w), e), ed)) * mu("gr1.al.4");
  s += tr_int(wedge(contract(xit, omd), w["om"])) * mu("gr1.al.5");
  return s;
}

GrassmannElement c1_varpi(const Config& c, const Config& a, const Config& b) {
  const SuperForm &e = c["e"], &ed = c["e_dag"], &omd = c["om_dag"], &epsn = c["eps_n"];
  VecField xit = xi_tan(c);
  const Mutations mu{};
  auto term = [&](const Config& u, const Config& v) {
    GrassmannElement s;
    s -= tr_int(wedge(u["e"], v["om"])) * mu("gr1.w.1");
    s += tr_int(wedge(u["om_dag"], v["c"])) * mu("gr1.w.2");
    s -= tr_int(wedge(wedge(u["e_dag"], epsn), sform(c.st, poly_of(v, "xi_n"), 1))) *
         mu("gr1.w.3");
    s -= tr_int(wedge(contract(xi_tan(u), v["e"]), ed)) * mu("gr1.w.4");
    s += tr_int(wedge(contract(xi_tan(u), e), v["e_dag"])) * mu("gr1.w.5");
    s += tr_int(wedge(contract(xi_tan(u), omd), v["om"])) * mu("gr1.w.6");
    s += tr_int(wedge(contract(xit, u["om_dag"]), v["om"])) * mu("gr1.w.7");
    return s;
  };
  return term(a, b) + term(b, a);
}

Config c1_q(const Config& c, const Mutations& mu) {
  const Stratum& st = c.st;
  auto tang = st.tangent_axes();
  const SuperForm &e = c["e"], &om = c["om"], &cg = c["c"];
  const SuperForm &ed = c["e_dag"], &omd = c["om_dag"], &epsn = c["eps_n"];
  SuperForm xin = sp(c, "xi_n", 1);
  VecField xit = xi_tan(c);
  SuperForm F = curvature(om);
  SuperForm epsxin = wedge(epsn, xin);
  Frame fr = make_frame(contract_axis(e, tang[0]), contract_axis(e, tang[1]), epsn);
  SuperForm xmy = lie_covariant(xit, om, epsxin) -
                  gbracket(cg, epsxin).scaled(mu("gr1.Q.relxy"));
  auto comp = frame_components(xmy, fr);  // (X_n - Y_n)^{(a)}, ^{(n)}

  Config q = zero_like(c);
  {
    SuperForm t = -lie_covariant(xit, om, e) + covariant_d(om, epsxin) + gbracket(cg, e);
    for (int a = 0; a < 2; ++a)
      t -= wedge(comp[a], contract_axis(omd, tang[a])).scaled(mu("gr1.Q.e.xy"));
    q.get("e") = t.scaled(mu("gr1.Q.e"));
  }
  {
    SuperForm t = -contract(xit, F) + covariant_d(om, cg);
    for (int a = 0; a < 2; ++a)
      t -= wedge(comp[a], contract_axis(ed, tang[a])).scaled(mu("gr1.Q.om.xy"));
    q.get("om") = t.scaled(mu("gr1.Q.om"));
  }
  {
    SuperForm t = gbracket(cg, cg).scaled(0.5) -
                  contract(xit, contract(xit, F)).scaled(0.5);
    for (int a = 0; a < 2; ++a)
      t -= contract(xit, wedge(comp[a], contract_axis(ed, tang[a]))).scaled(mu("gr1.Q.c.xy"));
    q.get("c") = t.scaled(mu("gr1.Q.c"));
  }
  q.get("om_dag") = (-covariant_d(om, e).scaled(mu("gr1.Q.omdag.1")) +
                     gbracket(cg, omd).scaled(mu("gr1.Q.omdag.2")) +
                     covariant_d(om, contract(xit, omd)).scaled(mu("gr1.Q.omdag.3")) -
                     gbracket(epsxin, ed).scaled(mu("gr1.Q.omdag.4")))
                        .scaled(mu("gr1.Q.omdag"));
  q.get("e_dag") = (F.scaled(mu("gr1.Q.edag.1")) +
                    gbracket(cg, ed).scaled(mu("gr1.Q.edag.2")) +
                    covariant_d(om, contract(xit, ed)).scaled(mu("gr1.Q.edag.3")))
                       .scaled(mu("gr1.Q.edag"));
  {
    VecField sq = square_bracket(xit);
    for (int a = 0; a < 2; ++a) {
      SuperForm t = sform(st, sq[tang[a]].scaled(-0.5 * mu("gr1.Q.xi.sq")), 2) -
                    comp[a].scaled(mu("gr1.Q.xi.xy"));
      q.get(slot_ax("xi", tang[a])) = t.scaled(mu("gr1.Q.xi"));
    }
    q.get("xi_n") = comp[2].scaled(-mu("gr1.Q.xin"));
  }
  return q;
}

// ---------------- pre-corner space ----------------

Config restrict_precorner(const Config& c1, const Stratum& edge) {
  int m = edge.normal_axis;
  Config p;
  p.st = edge;
  p.add("e", restrict_to(c1["e"], edge));
  p.add("e_m", restrict_to(contract_axis(c1["e"], m), edge));
  p.add("om", restrict_to(c1["om"], edge));
  p.add("c", restrict_to(c1["c"], edge));
  for (int ax = 0; ax < 3; ++ax)
    if (edge.is_tangent[ax]) p.add(slot_ax("xi", ax), restrict_to(c1[slot_ax("xi", ax)], edge));
  p.add("xi_m", restrict_to(c1[slot_ax("xi", m)], edge));
  p.add("xi_n", restrict_to(c1["xi_n"], edge));
  p.add("om_dag_m", restrict_to(contract_axis(c1["om_dag"], m), edge));
  p.add("e_dag_m", restrict_to(contract_axis(c1["e_dag"], m), edge));
  p.add("eps_n", restrict_to(c1["eps_n"], edge), true);
  return p;
}

Config random_precorner_variation(const Stratum& edge, unsigned long long seed,
                                  const GenLayout& L, int pool, int deg, double amp) {
  Rng r(seed * 0x8f31ac5ull + 37 + pool);
  Config p;
  p.st = edge;
  auto rf = [&](int pd, int g, Target t) {
    return random_form(r, edge, pd, g, t, L.var_base(pool), L.n_var, deg, amp);
  };
  p.add("e", rf(1, 0, Target::V));
  p.add("e_m", rf(0, 0, Target::V));
  p.add("om", rf(1, 0, Target::Bi));
  p.add("c", rf(0, 1, Target::Bi));
  for (int ax = 0; ax < 3; ++ax)
    if (edge.is_tangent[ax]) p.add(slot_ax("xi", ax), rf(0, 1, Target::Scalar));
  p.add("xi_m", rf(0, 1, Target::Scalar));
  p.add("xi_n", rf(0, 1, Target::Scalar));
  p.add("om_dag_m", rf(1, -1, Target::V));
  p.add("e_dag_m", rf(1, -1, Target::Bi));
  p.add("eps_n", SuperForm::zero(edge, 0, 0, Target::V), true);
  return p;
}

GrassmannElement precorner_alpha(const Config& c, const Config& w, const Mutations& mu) {
  const Stratum& st = c.st;
  const SuperForm &e = c["e"], &em = c["e_m"], &edm = c["e_dag_m"], &omdm = c["om_dag_m"];
  const SuperForm& epsn = c["eps_n"];
  SuperForm xim = sp(c, "xi_m", 1), xin = sp(c, "xi_n", 1);
  VecField xit = xi_tan(c);
  GrassmannElement s;
  s += tr_int(wedge(contract(xit, e), w["om"])) * mu("gr12.ac.1");
  s += tr_int(wedge(wedge(em, xim), w["om"])) * mu("gr12.ac.2");
  s += tr_int(wedge(wedge(epsn, xin), w["om"])) * mu("gr12.ac.3");
  s += tr_int(wedge(c["c"], w["e"])) * mu("gr12.ac.4");
  s -= tr_int(wedge(w["om"], wedge(contract(xit, omdm), xim))) * mu("gr12.ac.5");
  {
    SuperForm iwx = contract(xi_tan(w), e) + wedge(sform(st, poly_of(w, "xi_m"), 1), em);
    s += tr_int(wedge(wedge(iwx, edm), xim)) * mu("gr12.ac.6");
  }
  s -= tr_int(wedge(wedge(wedge(em, sform(st, poly_of(w, "xi_m"), 1)), edm), xim)) *
       mu("gr12.ac.7");
  s -= tr_int(wedge(c["c"], wedge(w["om_dag_m"], xim) +
                               wedge(omdm, sform(st, poly_of(w, "xi_m"), 1)))) *
       mu("gr12.ac.8");
  s += tr_int(wedge(wedge(wedge(epsn, sform(st, poly_of(w, "xi_n"), 1)), edm), xim)) *
       mu("gr12.ac.9");
  return s;
}

GrassmannElement precorner_varpi(const Config& c, const Config& a, const Config& b) {
  auto af = [](const Config& cc, const Config& w) {
    return precorner_alpha(cc, w, Mutations{});
  };
  GrassmannElement dxay =
      gateaux([&](const Config& cc) { return eval_one_form(af, cc, b); }, c, a, 3);
  GrassmannElement dyax =
      gateaux([&](const Config& cc) { return eval_one_form(af, cc, a); }, c, b, 3);
  return dxay - dyax;
}

GrassmannElement precorner_s(const Config& c, const Mutations& mu) {
  const Stratum& st = c.st;
  const SuperForm &e = c["e"], &em = c["e_m"], &om = c["om"], &cg = c["c"];
  const SuperForm &edm = c["e_dag_m"], &omdm = c["om_dag_m"], &epsn = c["eps_n"];
  SuperForm xim = sp(c, "xi_m", 1), xin = sp(c, "xi_n", 1);
  VecField xit = xi_tan(c);
  SuperForm dc = covariant_d(om, cg);
  GrassmannElement s;
  s += tr_int(wedge(wedge(em, xim), dc)) * mu("gr12.sc.1");
  s += tr_int(wedge(wedge(epsn, xin), dc)) * mu("gr12.sc.2");
  s += tr_int(wedge(contract(xit, e), dc)) * mu("gr12.sc.3");
  s -= tr_int(wedge(gbracket(cg, cg).scaled(0.5), e)) * mu("gr12.sc.4");
  s += tr_int(wedge(wedge(contract(xit, omdm), xim), dc)) * mu("gr12.sc.5");
  s += tr_int(wedge(wedge(gbracket(cg, cg).scaled(0.5), omdm), xim)) * mu("gr12.sc.6");
  s += tr_int(wedge(wedge(gbracket(cg, wedge(epsn, xin)), edm), xim)) * mu("gr12.sc.7");
  s -= tr_int(wedge(wedge(contract(xit, covariant_d(om, wedge(epsn, xin))), edm), xim)) *
       mu("gr12.sc.8");
  {
    PolyFunction ixdm;
    for (int nu = 0; nu < 3; ++nu)
      if (st.is_tangent[nu] && !xit[nu].is_zero())
        ixdm += pmul(xit[nu], poly_of(c, "xi_m").partial(nu));
    s -= tr_int(wedge(wedge(wedge(sform(st, ixdm, 2), em), edm), xim)) * mu("gr12.sc.9");
    auto tang = st.tangent_axes();
    PolyFunction ixda;
    for (int nu = 0; nu < 3; ++nu)
      if (st.is_tangent[nu] && !xit[nu].is_zero())
        ixda += pmul(xit[nu], poly_of(c, slot_ax("xi", tang[0])).partial(nu));
    s -= tr_int(
             wedge(wedge(wedge(sform(st, ixda, 2), contract_axis(e, tang[0])), edm), xim)) *
         mu("gr12.sc.10");
  }
  return s;
}

GrassmannElement precorner_alpha_corr(const Config& c) {
  const Stratum& st = c.st;
  SuperForm xim = sp(c, "xi_m", 1), xin = sp(c, "xi_n", 1);
  SuperForm ixe = contract(xi_tan(c), c["e"]) + wedge(xim, c["e_m"]);
  GrassmannElement s = tr_int(wedge(wedge(ixe, c["e_dag_m"]), xim));
  s += tr_int(wedge(wedge(wedge(c["eps_n"], xin), c["e_dag_m"]), xim));
  return s;
}

Config precorner_kernel(const Config& free, const Config& c, const Mutations& mu) {
  const Stratum& st = c.st;
  auto tang = st.tangent_axes();
  const SuperForm &e = c["e"], &em = c["e_m"], &edm = c["e_dag_m"], &omdm = c["om_dag_m"];
  SuperForm xim = sp(c, "xi_m", 1);
  VecField xit = xi_tan(c);
  Frame fr = make_frame(contract_axis(e, tang[0]), em, c["eps_n"]);
  auto comp = frame_components(free["e_m"], fr);  // (a), (m), (n)

  Config x = zero_like(c);
  x.get(slot_ax("xi", tang[0])) = wedge(comp[0], xim).scaled(mu("gr12.ker.xi"));
  x.get("xi_m") = wedge(comp[1], xim).scaled(mu("gr12.ker.xi"));
  x.get("xi_n") = wedge(comp[2], xim).scaled(mu("gr12.ker.xi"));
  x.get("om") = (wedge(free["e_dag_m"], xim) + wedge(edm, wedge(comp[1], xim)))
                    .scaled(mu("gr12.ker.om"));
  x.get("c") = (wedge(contract(xit, free["e_dag_m"]), xim) +
                wedge(contract(xit, edm), wedge(comp[1], xim)))
                   .scaled(mu("gr12.ker.c"));
  x.get("e") = (-wedge(free["om_dag_m"], xim) + wedge(omdm, wedge(comp[1], xim)))
                   .scaled(mu("gr12.ker.e"));
  x.get("e_m") = free["e_m"];
  x.get("e_dag_m") = free["e_dag_m"];
  x.get("om_dag_m") = free["om_dag_m"];
  return x;
}

Config project_corner(const Config& c, double epsp, const Mutations& mu) {
  const Stratum& st = c.st;
  auto tang = st.tangent_axes();
  SuperForm xim = sp(c, "xi_m", 1);
  VecField xit = xi_tan(c);
  Config out;
  out.st = st;
  out.add("e", c["e"] - wedge(c["om_dag_m"], xim).scaled(mu("gr2.proj.e")));
  out.add("om", c["om"] - wedge(c["e_dag_m"], xim).scaled(mu("gr2.proj.om")));
  out.add("c", c["c"] - wedge(contract(xit, c["e_dag_m"]), xim).scaled(mu("gr2.proj.c")));
  out.add(slot_ax("xi", tang[0]), c[slot_ax("xi", tang[0])]);
  out.add("xi_n", c["xi_n"]);
  out.add("xi_m", c["xi_m"].scaled(1.0 / (1.0 + epsp)));
  out.add("eps_m", c["e_m"].scaled(1.0 + epsp), true);
  out.add("eps_n", c["eps_n"], true);
  return out;
}

}  // namespace bvt::gr
