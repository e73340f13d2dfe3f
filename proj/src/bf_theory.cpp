#include "bvt/bf_theory.hpp"

namespace bvt::bf {

namespace {

// inhomogeneous superfield: one component per form degree
struct Sfield {
  std::vector<SuperForm> p;
};

Sfield get_field(const Config& c, const char* const names[4]) {
  Sfield f;
  for (int k = 0; k <= c.st.dim(); ++k) f.p.push_back(c[names[k]]);
  return f;
}

// curvature family: (d A + 1/2 [A,A])_q for q = 0..d
std::vector<SuperForm> curvature_family(const Config& c, const Sfield& A, double half,
                                        double lambda, const Sfield* B) {
  int dd = c.st.dim();
  std::vector<SuperForm> F;
  for (int q = 0; q <= dd; ++q) {
    SuperForm f = SuperForm::zero(c.st, q, 1 - q, Target::Bi);
    if (q >= 1) f += d(A.p[q - 1]);
    for (int r = 0; r <= q; ++r) {
      int s = q - r;
      if (r > dd || s > dd) continue;
      f += gbracket(A.p[r], A.p[s]).scaled(0.5 * half);
    }
    if (B && lambda != 0.0)
      for (int r = 0; r <= q; ++r) {
        int s = q - r;
        if (r > dd || s > dd) continue;
        f += wedge(B->p[r], B->p[s]).scaled(0.5 * lambda);
      }
    F.push_back(std::move(f));
  }
  return F;
}

}  // namespace

Config random_config(const Stratum& st, unsigned long long seed, const GenLayout& L, int deg,
                     double amp) {
  Rng r(seed * 0x9e3779b9ull + 101);
  int dd = st.dim();
  Config c;
  c.st = st;
  auto tang = st.tangent_axes();
  // nondegenerate B: constant body columns with bounded determinant plus soul
  double M[3][3];
  double det = 0.0;
  do {
    for (auto& row : M)
      for (double& v : row) v = r.uniform(-1, 1);
    det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
          M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
          M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  } while (std::abs(det) < 0.35);
  for (int k = 0; k <= dd; ++k) {
    SuperForm f = random_form(r, st, k, 1 - k, Target::V, L.field_base(), L.n_odd, deg, amp);
    if (k == 1) {
      for (int j = 0; j < dd; ++j)
        for (int i = 0; i < 3; ++i) {
          PolyFunction p(M[i][j]);
          p += random_soul_poly(r, st, deg, 0.5 * amp, L.field_base(), L.n_odd);
          f.at(1u << tang[j], i) = p;
        }
    }
    c.add(kVNames[k], std::move(f));
  }
  for (int k = 0; k <= dd; ++k)
    c.add(kWNames[k],
          random_form(r, st, k, 1 - k, Target::Bi, L.field_base(), L.n_odd, deg, amp));
  return c;
}

Config random_variation(const Stratum& st, unsigned long long seed, const GenLayout& L,
                        int pool, int deg, double amp) {
  Rng r(seed * 0x51ed2701ull + 7 + pool);
  int dd = st.dim();
  Config c;
  c.st = st;
  for (int k = 0; k <= dd; ++k)
    c.add(kVNames[k],
          random_form(r, st, k, 1 - k, Target::V, L.var_base(pool), L.n_var, deg, amp));
  for (int k = 0; k <= dd; ++k)
    c.add(kWNames[k],
          random_form(r, st, k, 1 - k, Target::Bi, L.var_base(pool), L.n_var, deg, amp));
  return c;
}

Config restrict_cfg(const Config& c, const Stratum& child) {
  Config r;
  r.st = child;
  for (int k = 0; k <= child.dim(); ++k) {
    r.add(kVNames[k], restrict_to(c[kVNames[k]], child));
    r.add(kWNames[k], restrict_to(c[kWNames[k]], child));
  }
  return r;
}

GrassmannElement action(const Config& c, double lambda, const Mutations& mu) {
  int dd = c.st.dim();
  Sfield B = get_field(c, kVNames);
  Sfield A = get_field(c, kWNames);
  auto F = curvature_family(c, A, mu("bf.S.half"), 0.0, nullptr);
  GrassmannElement s;
  for (int p = 0; p <= dd; ++p) {
    int q = dd - p;
    s += tr_int(wedge(B.p[p], F[q])) * mu("bf.S.main");
  }
  if (lambda != 0.0) {
    for (int p = 0; p <= dd; ++p)
      for (int q = 0; p + q <= dd; ++q) {
        int rdeg = dd - p - q;
        s += tr_int(wedge(wedge(B.p[p], B.p[q]), B.p[rdeg])) * (lambda / 6.0) *
             mu("bf.S.cosmo");
      }
  }
  return s;
}

GrassmannElement alpha(const Config& c, const Config& w, const Mutations& mu) {
  int dd = c.st.dim();
  Sfield B = get_field(c, kVNames);
  Sfield W = get_field(w, kWNames);
  GrassmannElement s;
  for (int p = 0; p <= dd; ++p) s += tr_int(wedge(B.p[p], W.p[dd - p]));
  return s * mu("bf.alpha");
}

GrassmannElement varpi(const Config& c, const Config& a, const Config& b) {
  int dd = c.st.dim();
  Sfield aV = get_field(a, kVNames), aW = get_field(a, kWNames);
  Sfield bV = get_field(b, kVNames), bW = get_field(b, kWNames);
  GrassmannElement s;
  for (int p = 0; p <= dd; ++p) {
    s += tr_int(wedge(aV.p[p], bW.p[dd - p]));
    s += tr_int(wedge(bV.p[p], aW.p[dd - p]));
  }
  return s;
}

Config q_of(const Config& c, double lambda, const Mutations& mu) {
  int dd = c.st.dim();
  Sfield B = get_field(c, kVNames);
  Sfield A = get_field(c, kWNames);
  Config q = zero_like(c);
  auto F = curvature_family(c, A, mu("bf.Q.half"), lambda * mu("bf.Q.cosmo"), &B);
  for (int p = 0; p <= dd; ++p) {
    // d_A B per degree
    SuperForm v = SuperForm::zero(c.st, p, 2 - p, Target::V);
    if (p >= 1) v += d(B.p[p - 1]);
    for (int r = 0; r <= p; ++r) {
      int s = p - r;
      if (r > dd || s > dd) continue;
      v += gbracket(A.p[r], B.p[s]);
    }
    q.get(kVNames[p]) = v.scaled(mu("bf.Q.B"));
    q.get(kWNames[p]) = F[p].scaled(mu("bf.Q.A"));
  }
  return q;
}

}  // namespace bvt::bf
