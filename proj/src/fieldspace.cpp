#include "bvt/fieldspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace bvt {

bool Config::has(std::string_view n) const {
  for (const auto& s : slots)
    if (s.name == n) return true;
  return false;
}

const SuperForm& Config::operator[](std::string_view n) const {
  for (const auto& s : slots)
    if (s.name == n) return s.v;
  throw ConfigError("missing field slot: " + std::string(n));
}

SuperForm& Config::get(std::string_view n) {
  for (auto& s : slots)
    if (s.name == n) return s.v;
  throw ConfigError("missing field slot: " + std::string(n));
}

void Config::add(std::string name, SuperForm v, bool fixed) {
  slots.push_back({std::move(name), std::move(v), fixed});
}

Config zero_like(const Config& c) {
  Config r;
  r.st = c.st;
  for (const auto& s : c.slots)
    r.add(s.name, SuperForm::zero(s.v.st, s.v.degree, s.v.ghost, s.v.target), s.fixed);
  return r;
}

Config axpy(const Config& phi, double t, const Config& y) {
  Config r = phi;
  for (auto& s : r.slots) {
    if (!y.has(s.name)) continue;
    const SuperForm& dy = y[s.name];
    if (!dy.is_zero()) s.v += dy.scaled(t);
  }
  return r;
}

Config lmul_config(const Config& y, const GrassmannElement& c) {
  Config r = y;
  for (auto& s : r.slots)
    if (!s.fixed) s.v = s.v.lmul(c);
  return r;
}

Config tagged(const Config& y, gmask tag_bit) {
  return lmul_config(y, GrassmannElement::monomial(tag_bit, 1.0));
}

PolyFunction random_body_poly(Rng& r, const Stratum& st, int deg, double amp) {
  PolyFunction p(r.uniform(-amp, amp));
  for (int t = 0; t < 2; ++t) {
    int e[3] = {0, 0, 0};
    bool any = false;
    for (int ax = 0; ax < 3; ++ax)
      if (st.is_tangent[ax]) {
        e[ax] = r.uniform_int(deg + 1);
        any = any || e[ax] > 0;
      }
    if (!any && st.dim() > 0) e[st.tangent_axes()[0]] = 1;
    p += PolyFunction::monomial(e[0], e[1], e[2], GrassmannElement(r.uniform(-amp, amp)));
  }
  return p;
}

namespace {
GrassmannElement rand_gen1(Rng& r, int base, int n, double amp) {
  return GrassmannElement::monomial(gmask(1) << (base + r.uniform_int(n)),
                                    r.uniform(-amp, amp));
}
}  // namespace

PolyFunction random_odd_poly(Rng& r, const Stratum& st, int deg, double amp, int base, int n) {
  int i = r.uniform_int(n), j = (i + 1 + r.uniform_int(n - 1)) % n;
  PolyFunction p = random_body_poly(r, st, deg, amp)
                       .lmul(GrassmannElement::monomial(gmask(1) << (base + i), 1.0));
  p += random_body_poly(r, st, deg, amp)
           .lmul(GrassmannElement::monomial(gmask(1) << (base + j), 1.0));
  return p;
}

PolyFunction random_soul_poly(Rng& r, const Stratum& st, int deg, double amp, int base, int n) {
  int i = r.uniform_int(n), j = (i + 1 + r.uniform_int(n - 1)) % n;
  gmask m = (gmask(1) << (base + i)) | (gmask(1) << (base + j));
  return random_body_poly(r, st, deg, amp).lmul(GrassmannElement::monomial(m, 1.0));
}

SuperForm random_form(Rng& r, const Stratum& st, int degree, int ghost, Target t, int base,
                      int n, int deg, double amp) {
  SuperForm f = SuperForm::zero(st, degree, ghost, t);
  auto tang = st.tangent_axes();
  int d = st.dim();
  // iterate ascending masks of the right popcount
  for (unsigned sel = 0; sel < (1u << d); ++sel) {
    if (std::popcount(sel) != unsigned(degree)) continue;
    unsigned mask = 0;
    for (int k = 0; k < d; ++k)
      if (sel & (1u << k)) mask |= 1u << tang[k];
    for (int tc = 0; tc < target_dim(t); ++tc) {
      if (ghost & 1) {
        f.at(mask, tc) = random_odd_poly(r, st, deg, amp, base, n);
      } else {
        PolyFunction p = random_body_poly(r, st, deg, amp);
        p += random_soul_poly(r, st, deg, 0.6 * amp, base, n);
        f.at(mask, tc) = p;
      }
    }
  }
  return f;
}

GrassmannElement gateaux(const std::function<GrassmannElement(const Config&)>& F,
                         const Config& phi, const Config& y, int max_degree, double h) {
  int npts = max_degree + 2;
  std::vector<double> ts;
  ts.push_back(0.0);
  for (int j = 1; int(ts.size()) < npts; ++j) {
    ts.push_back(h * j);
    if (int(ts.size()) < npts) ts.push_back(-h * j);
  }
  int n = npts;
  std::vector<std::vector<double>> V(n, std::vector<double>(n));
  std::vector<GrassmannElement> rhs(n);
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int c = 0; c < n; ++c) {
      V[i][c] = p;
      p *= ts[i];
    }
    rhs[i] = F(axpy(phi, ts[i], y));
  }
  // Gaussian elimination with partial pivoting; the right-hand side carries
  // Grassmann elements, the matrix is real.
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::fabs(V[i][col]) > std::fabs(V[piv][col])) piv = i;
    std::swap(V[col], V[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (int i = col + 1; i < n; ++i) {
      double f = V[i][col] / V[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) V[i][c] -= f * V[col][c];
      rhs[i] -= rhs[col] * f;
    }
  }
  std::vector<GrassmannElement> coef(n);
  for (int i = n - 1; i >= 0; --i) {
    GrassmannElement acc = rhs[i];
    for (int c = i + 1; c < n; ++c) acc -= coef[c] * V[i][c];
    coef[i] = acc * (1.0 / V[i][i]);
  }
  double scale = 0.0;
  for (const auto& c : coef) scale = std::max(scale, c.max_abs());
  for (int c = max_degree + 1; c < n; ++c)
    if (coef[c].max_abs() > 1e-6 * std::max(scale, 1e-9))
      throw DegreeAuditError("functional exceeds its catalogued degree bound");
  return coef[1];
}

Config tangent_of_map(const std::function<Config(const Config&)>& map, const Config& phi,
                      const Config& y) {
  GrassmannElement t = GrassmannElement::monomial(GenLayout::kDual, 1.0);
  Config shifted = phi;
  for (auto& s : shifted.slots) {
    if (!y.has(s.name)) continue;
    const SuperForm& dy = y[s.name];
    if (!dy.is_zero()) s.v += dy.lmul(t);
  }
  Config out = map(shifted);
  Config r = out;
  for (auto& s : r.slots) {
    SuperForm ext = SuperForm::zero(s.v.st, s.v.degree, s.v.ghost, s.v.target);
    for (const auto& comp : s.v.comps)
      for (int tc = 0; tc < int(comp.c.size()); ++tc)
        for (const auto& [k, c] : comp.c[tc].terms()) {
          GrassmannElement e = c.extract(GenLayout::kDual);
          if (!e.is_zero()) ext.at(comp.mask, tc).add_term(k, e);
        }
    s.v = ext;
  }
  return r;
}

double rel_residual(const GrassmannElement& r, double scale) {
  return r.max_abs() / std::max(scale, 1e-9);
}

}  // namespace bvt
