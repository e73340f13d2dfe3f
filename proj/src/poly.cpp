#include "bvt/poly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace bvt {

PolyFunction PolyFunction::monomial(int ex, int ey, int ez, const GrassmannElement& c) {
  PolyFunction r;
  if (!c.is_zero()) r.terms_.push_back({pack(ex, ey, ez), c});
  return r;
}

double PolyFunction::max_abs() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, c.max_abs());
  return m;
}

int PolyFunction::max_degree(int axis) const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, exp_of(k, axis));
  return m;
}

PolyFunction PolyFunction::operator-() const {
  PolyFunction r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

void PolyFunction::add_term(Key k, const GrassmannElement& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const auto& t, Key key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (!c.is_zero()) {
    terms_.insert(it, {k, c});
  }
}

PolyFunction& PolyFunction::operator+=(const PolyFunction& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PolyFunction& PolyFunction::operator-=(const PolyFunction& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PolyFunction PolyFunction::scaled(double s) const {
  PolyFunction r;
  if (s == 0.0) return r;
  r.terms_ = terms_;
  for (auto& [k, c] : r.terms_) c *= s;
  return r;
}

PolyFunction PolyFunction::lmul(const GrassmannElement& cl) const {
  PolyFunction r;
  for (const auto& [k, c] : terms_) {
    GrassmannElement p = gmul(cl, c);
    if (!p.is_zero()) r.add_term(k, p);
  }
  return r;
}

PolyFunction PolyFunction::partial(int axis) const {
  PolyFunction r;
  for (const auto& [k, c] : terms_) {
    int e = exp_of(k, axis);
    if (e == 0) continue;
    r.add_term(k - (Key(1) << (6 * axis)), c * double(e));
  }
  return r;
}

PolyFunction PolyFunction::substitute(int axis, double v) const {
  PolyFunction r;
  for (const auto& [k, c] : terms_) {
    int e = exp_of(k, axis);
    double f = 1.0;
    for (int i = 0; i < e; ++i) f *= v;
    r.add_term(k & ~(Key(63) << (6 * axis)), c * f);
  }
  return r;
}

GrassmannElement PolyFunction::eval(const std::array<double, 3>& x) const {
  GrassmannElement r;
  for (const auto& [k, c] : terms_) {
    double f = 1.0;
    for (int ax = 0; ax < 3; ++ax) {
      int e = exp_of(k, ax);
      for (int i = 0; i < e; ++i) f *= x[ax];
    }
    r += c * f;
  }
  return r;
}

PolyFunction pmul(const PolyFunction& a, const PolyFunction& b) {
  return PolyFunction::product(
      a, b, [](const GrassmannElement& x, const GrassmannElement& y) { return gmul(x, y); });
}

PolyFunction pinv(const PolyFunction& a) {
  double c0 = 0.0;
  PolyFunction rest;
  for (const auto& [k, c] : a.terms()) {
    for (const auto& t : c.terms()) {
      if (t.mask == 0) {
        if (k != 0)
          throw DegenerateBody("pinv needs a constant body: found polynomial body term");
        c0 = t.c;
      } else {
        rest.add_term(k, GrassmannElement::monomial(t.mask, t.c));
      }
    }
  }
  if (c0 == 0.0) throw DegenerateBody("pinv of a function with zero body");
  PolyFunction x = rest.scaled(-1.0 / c0);
  PolyFunction acc(1.0), pw(1.0);
  for (int k = 0; k < 64; ++k) {
    pw = pmul(pw, x);
    if (pw.is_zero()) break;
    acc += pw;
  }
  return acc.scaled(1.0 / c0);
}

PolyFunction pmul_dx(const PolyFunction& a, const PolyFunction& b, int ndx) {
  if ((ndx & 1) == 0) return pmul(a, b);
  return PolyFunction::product(a, b,
                               [](const GrassmannElement& x, const GrassmannElement& y) {
                                 GrassmannElement yf;
                                 for (const auto& t : y.terms()) {
                                   double s = (std::popcount(t.mask) & 1) ? -1.0 : 1.0;
                                   yf += GrassmannElement::monomial(t.mask, s * t.c);
                                 }
                                 return gmul(x, yf);
                               });
}

}  // namespace bvt
