#include "bvt/superform.hpp"

#include <algorithm>
#include <bit>

namespace bvt {

namespace {

bool same_cell(const Stratum& a, const Stratum& b) {
  if (a.codim != b.codim) return false;
  for (int i = 0; i < 3; ++i) {
    if (a.is_tangent[i] != b.is_tangent[i]) return false;
    if (!a.is_tangent[i] && a.fixed[i] != b.fixed[i]) return false;
  }
  return true;
}

std::pair<GrassmannElement, GrassmannElement> split_parity(const GrassmannElement& g) {
  GrassmannElement e, o;
  for (const auto& t : g.terms()) {
    if (std::popcount(t.mask) & 1)
      o += GrassmannElement::monomial(t.mask, t.c);
    else
      e += GrassmannElement::monomial(t.mask, t.c);
  }
  return {e, o};
}

PolyFunction parity_flip(const PolyFunction& f) {
  PolyFunction r;
  for (const auto& [k, c] : f.terms()) {
    auto [e, o] = split_parity(c);
    r.add_term(k, e - o);
  }
  return r;
}

// coefficient product for contraction: sum over term pairs of
// (-1)^{parity(f) * (parity(w)+1)} f * w
GrassmannElement contract_mul(const GrassmannElement& f, const GrassmannElement& w) {
  auto [we, wo] = split_parity(w);
  auto [fe, fo] = split_parity(f);
  GrassmannElement r = gmul(fe - fo, we);
  r += gmul(f, wo);
  return r;
}

}  // namespace

SuperForm SuperForm::zero(const Stratum& s, int degree, int ghost, Target t) {
  SuperForm f;
  f.st = s;
  f.degree = degree;
  f.ghost = ghost;
  f.target = t;
  return f;
}

SuperForm SuperForm::one(const Stratum& s) {
  SuperForm f = zero(s, 0, 0, Target::Scalar);
  f.at(0, 0) = PolyFunction(1.0);
  return f;
}

SuperForm SuperForm::volume(const Stratum& s) {
  SuperForm f = zero(s, s.dim(), 0, Target::Scalar);
  f.at(s.tangent_mask(), 0) = PolyFunction(1.0);
  return f;
}

const PolyFunction* SuperForm::find(unsigned mask, int tc) const {
  for (const auto& comp : comps)
    if (comp.mask == mask) return &comp.c[tc];
  return nullptr;
}

PolyFunction& SuperForm::at(unsigned mask, int tc) {
  auto it = std::lower_bound(comps.begin(), comps.end(), mask,
                             [](const Comp& c, unsigned m) { return c.mask < m; });
  if (it == comps.end() || it->mask != mask) {
    Comp c;
    c.mask = mask;
    c.c.resize(target_dim(target));
    it = comps.insert(it, std::move(c));
  }
  return it->c[tc];
}

bool SuperForm::is_zero() const {
  for (const auto& comp : comps)
    for (const auto& p : comp.c)
      if (!p.is_zero()) return false;
  return true;
}

double SuperForm::max_abs() const {
  double m = 0.0;
  for (const auto& comp : comps)
    for (const auto& p : comp.c) m = std::max(m, p.max_abs());
  return m;
}

SuperForm SuperForm::operator-() const {
  SuperForm r = *this;
  for (auto& comp : r.comps)
    for (auto& p : comp.c) p = -p;
  return r;
}

SuperForm& SuperForm::operator+=(const SuperForm& o) {
  for (const auto& comp : o.comps)
    for (int tc = 0; tc < int(comp.c.size()); ++tc)
      if (!comp.c[tc].is_zero()) at(comp.mask, tc) += comp.c[tc];
  return *this;
}

SuperForm& SuperForm::operator-=(const SuperForm& o) {
  for (const auto& comp : o.comps)
    for (int tc = 0; tc < int(comp.c.size()); ++tc)
      if (!comp.c[tc].is_zero()) at(comp.mask, tc) -= comp.c[tc];
  return *this;
}

SuperForm SuperForm::scaled(double s) const {
  SuperForm r = *this;
  for (auto& comp : r.comps)
    for (auto& p : comp.c) p = p.scaled(s);
  return r;
}

SuperForm SuperForm::lmul(const GrassmannElement& c) const {
  SuperForm r = zero(st, degree, ghost, target);
  for (const auto& comp : comps)
    for (int tc = 0; tc < int(comp.c.size()); ++tc)
      if (!comp.c[tc].is_zero()) r.at(comp.mask, tc) = comp.c[tc].lmul(c);
  return r;
}

namespace {

// generic graded product with a sparse structure table
template <class Coeff>
SuperForm product_with(const SuperForm& a, const SuperForm& b, Target out_t, int dim_a,
                       int dim_b, int dim_o, Coeff&& coeff) {
  if (!same_cell(a.st, b.st)) throw DomainError("product of forms on different strata");
  SuperForm r = SuperForm::zero(a.st, a.degree + b.degree, a.ghost + b.ghost, out_t);
  if (r.degree > a.st.dim()) return r;
  for (const auto& ca : a.comps) {
    int na = std::popcount(ca.mask);
    for (const auto& cb : b.comps) {
      if (ca.mask & cb.mask) continue;
      double s = merge_sign(ca.mask, cb.mask);
      for (int ia = 0; ia < dim_a; ++ia) {
        if (ca.c[ia].is_zero()) continue;
        for (int ib = 0; ib < dim_b; ++ib) {
          if (cb.c[ib].is_zero()) continue;
          for (int io = 0; io < dim_o; ++io) {
            double cf = coeff(ia, ib, io);
            if (cf == 0.0) continue;
            PolyFunction p = pmul_dx(ca.c[ia], cb.c[ib], na);
            if (!p.is_zero()) r.at(ca.mask | cb.mask, io) += p.scaled(s * cf);
          }
        }
      }
    }
  }
  return r;
}

bool scalar_like(Target t) { return t == Target::Scalar || t == Target::Density; }

}  // namespace

SuperForm wedge(const SuperForm& a, const SuperForm& b) {
  Target ta = a.target, tb = b.target;
  if (scalar_like(ta)) {
    Target out = scalar_like(tb) ? ((ta == Target::Density || tb == Target::Density)
                                        ? Target::Density
                                        : Target::Scalar)
                                 : tb;
    int db = target_dim(tb);
    return product_with(a, b, out, 1, db, db,
                        [](int, int ib, int io) { return ib == io ? 1.0 : 0.0; });
  }
  if (scalar_like(tb)) {
    Target out = (tb == Target::Density) ? Target::Density : ta;
    int da = target_dim(ta);
    return product_with(a, b, out, da, 1, da,
                        [](int ia, int, int io) { return ia == io ? 1.0 : 0.0; });
  }
  if (ta == Target::V && tb == Target::V) {
    return product_with(a, b, Target::Bi, 3, 3, 3, [](int i, int j, int al) {
      double s;
      int idx = biv_index(i, j, &s);
      return idx == al ? s : 0.0;
    });
  }
  if (ta == Target::V && tb == Target::Bi) {
    return product_with(a, b, Target::Tri, 3, 3, 1, [](int i, int al, int) {
      return epsilon3(i, kBivPair[al][0], kBivPair[al][1]);
    });
  }
  if (ta == Target::Bi && tb == Target::V) {
    return product_with(a, b, Target::Tri, 3, 3, 1, [](int al, int i, int) {
      return epsilon3(kBivPair[al][0], kBivPair[al][1], i);
    });
  }
  throw GradedError("undefined wedge target pairing");
}

SuperForm gbracket(const SuperForm& a, const SuperForm& b) {
  Target ta = a.target, tb = b.target;
  if (ta == Target::Bi && tb == Target::Bi) {
    const auto& C = bracket_constants();
    return product_with(a, b, Target::Bi, 3, 3, 3,
                        [&C](int al, int be, int g) { return C[al][be][g]; });
  }
  if (ta == Target::Bi && tb == Target::V) {
    return product_with(a, b, Target::V, 3, 3, 3,
                        [](int al, int l, int k) { return rep_matrix(al)[k][l]; });
  }
  if (ta == Target::V && tb == Target::Bi) {
    return product_with(a, b, Target::V, 3, 3, 3,
                        [](int l, int al, int k) { return -rep_matrix(al)[k][l]; });
  }
  if ((ta == Target::Bi && tb == Target::Tri) || (ta == Target::Tri && tb == Target::Bi))
    return SuperForm::zero(a.st, a.degree + b.degree, a.ghost + b.ghost, Target::Tri);
  throw GradedError("undefined bracket pairing");
}

SuperForm d(const SuperForm& a) {
  SuperForm r = SuperForm::zero(a.st, a.degree + 1, a.ghost, a.target);
  auto tang = a.st.tangent_axes();
  for (const auto& comp : a.comps) {
    for (int k = 0; k < a.st.dim(); ++k) {
      unsigned bit = 1u << tang[k];
      if (comp.mask & bit) continue;
      double s = merge_sign(bit, comp.mask);
      for (int tc = 0; tc < int(comp.c.size()); ++tc) {
        if (comp.c[tc].is_zero()) continue;
        PolyFunction p = parity_flip(comp.c[tc].partial(tang[k]));
        if (!p.is_zero()) r.at(comp.mask | bit, tc) += p.scaled(s);
      }
    }
  }
  return r;
}

SuperForm covariant_d(const SuperForm& om, const SuperForm& a) {
  SuperForm r = d(a);
  if (a.target == Target::V || a.target == Target::Bi) r += gbracket(om, a);
  return r;
}

SuperForm contract(const VecField& w, const SuperForm& a) {
  if (a.degree == 0) throw DegreeError("contraction of a 0-form");
  SuperForm r = SuperForm::zero(a.st, a.degree - 1, a.ghost + 1, a.target);
  for (const auto& comp : a.comps) {
    unsigned rest = comp.mask;
    int k0 = 0;
    while (rest) {
      int ax = std::countr_zero(rest);
      rest &= rest - 1;
      if (!w[ax].is_zero()) {
        double s = (k0 % 2 == 0) ? 1.0 : -1.0;
        for (int tc = 0; tc < int(comp.c.size()); ++tc) {
          if (comp.c[tc].is_zero()) continue;
          PolyFunction p = PolyFunction::product(comp.c[tc], w[ax], contract_mul);
          if (!p.is_zero()) r.at(comp.mask & ~(1u << ax), tc) += p.scaled(s);
        }
      }
      ++k0;
    }
  }
  return r;
}

SuperForm contract_axis(const SuperForm& a, int axis) {
  VecField w;
  w[axis] = PolyFunction(1.0);
  SuperForm r = contract(w, a);
  r.ghost = a.ghost;
  return r;
}

SuperForm lie_covariant(const VecField& xi, const SuperForm& om, const SuperForm& a) {
  SuperForm r = contract(xi, covariant_d(om, a));
  if (a.degree > 0) r -= covariant_d(om, contract(xi, a));
  return r;
}

SuperForm contract_bracket(const VecField& xi, const SuperForm& om, const SuperForm& a) {
  if (a.degree == 0) throw DegreeError("contraction of a 0-form");
  SuperForm r = lie_covariant(xi, om, contract(xi, a));
  r -= contract(xi, lie_covariant(xi, om, a));
  return r;
}

SuperForm restrict_to(const SuperForm& a, const Stratum& child) {
  if (!a.st.contains(child)) throw DomainError("restriction to a non-contained stratum");
  SuperForm r = SuperForm::zero(child, a.degree, a.ghost, a.target);
  unsigned child_mask = child.tangent_mask();
  for (const auto& comp : a.comps) {
    if ((comp.mask & ~child_mask) != 0) continue;  // pullback kills normal differentials
    for (int tc = 0; tc < int(comp.c.size()); ++tc) {
      if (comp.c[tc].is_zero()) continue;
      PolyFunction p = comp.c[tc];
      for (int ax = 0; ax < 3; ++ax)
        if (a.st.is_tangent[ax] && !child.is_tangent[ax]) p = p.substitute(ax, child.fixed[ax]);
      if (!p.is_zero()) r.at(comp.mask, tc) += p;
    }
  }
  return r;
}

SuperForm tr3(const SuperForm& a) {
  if (a.target != Target::Tri) throw GradedError("tr3 on a non-Tri form");
  SuperForm r = a;
  r.target = Target::Scalar;
  return r;
}

GrassmannElement integrate(const SuperForm& a) {
  if (target_dim(a.target) != 1) throw GradedError("integrate needs a 1-component target");
  if (a.degree != a.st.dim()) throw DegreeError("integrate needs a top-degree form");
  const PolyFunction* f = a.find(a.st.tangent_mask(), 0);
  if (!f) return GrassmannElement();
  PolyFunction p = *f;
  for (int ax = 0; ax < 3; ++ax)
    if (!a.st.is_tangent[ax]) p = p.substitute(ax, a.st.fixed[ax]);
  std::array<int, 3> order{1, 1, 1};
  for (int ax = 0; ax < 3; ++ax)
    if (a.st.is_tangent[ax]) order[ax] = (p.max_degree(ax) + 2) / 2;
  GrassmannElement total;
  for (const auto& [k, c] : p.terms()) {
    double m = 1.0;
    for (int ax = 0; ax < 3; ++ax)
      if (a.st.is_tangent[ax]) m *= gl_moment(order[ax], PolyFunction::exp_of(k, ax));
    total += c * m;
  }
  // The integral reads off the coefficient written with the volume factor on
  // the left, so odd coefficients pick up the sign of crossing dim-many
  // differentials. This is what makes Stokes sign-free at every level.
  if (a.st.dim() & 1) total = parity_signed(total);
  return total * a.st.orientation;
}

}  // namespace bvt
