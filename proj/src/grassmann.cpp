#include "bvt/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace bvt {

GrassmannElement GrassmannElement::monomial(gmask mask, double c) {
  GrassmannElement r;
  if (c != 0.0) r.terms_.push_back({mask, c});
  return r;
}

GrassmannElement GrassmannElement::soul() const {
  GrassmannElement r = *this;
  if (!r.terms_.empty() && r.terms_.front().mask == 0) r.terms_.erase(r.terms_.begin());
  return r;
}

double GrassmannElement::coeff(gmask mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, gmask m) { return t.mask < m; });
  return (it != terms_.end() && it->mask == mask) ? it->c : 0.0;
}

bool GrassmannElement::homogeneous_parity() const {
  if (terms_.empty()) return true;
  int p = std::popcount(terms_.front().mask) & 1;
  for (const auto& t : terms_)
    if ((std::popcount(t.mask) & 1) != p) return false;
  return true;
}

int GrassmannElement::parity() const {
  if (terms_.empty()) return 0;
  if (!homogeneous_parity()) throw GradedError("parity of a heterogeneous element");
  return std::popcount(terms_.front().mask) & 1;
}

double GrassmannElement::max_abs() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::fabs(t.c));
  return m;
}

GrassmannElement GrassmannElement::extract(gmask tag) const {
  GrassmannElement r;
  for (const auto& t : terms_) {
    if ((t.mask & tag) != tag) continue;
    // tag bits sit below every other generator, so stripping is sign-free
    r.terms_.push_back({t.mask & ~tag, t.c});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return x.mask < y.mask; });
  return r;
}

void GrassmannElement::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.c == 0.0; }),
               terms_.end());
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.cend() && b != o.terms_.cend()) {
    if (a->mask < b->mask)
      out.push_back(*a++);
    else if (b->mask < a->mask)
      out.push_back(*b++);
    else {
      double c = a->c + b->c;
      if (c != 0.0) out.push_back({a->mask, c});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, terms_.cend());
  out.insert(out.end(), b, o.terms_.cend());
  terms_ = std::move(out);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  return *this += -o;
}

GrassmannElement& GrassmannElement::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= s;
  return *this;
}

int merge_sign(gmask a, gmask b) {
  int swaps = 0;
  gmask rest = a;
  while (rest) {
    gmask low = rest & (rest - gmask(1));
    int i = std::countr_zero(rest);
    swaps += std::popcount(b & ((gmask(1) << i) - 1));
    rest = low;
  }
  return (swaps & 1) ? -1 : 1;
}

GrassmannElement parity_signed(const GrassmannElement& g) {
  GrassmannElement r = g;
  for (auto& t : r.terms_)
    if (std::popcount(t.mask) & 1) t.c = -t.c;
  return r;
}

GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  std::vector<GrassmannElement::Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      if (ta.mask & tb.mask) continue;  // repeated generator vanishes
      double c = ta.c * tb.c * merge_sign(ta.mask, tb.mask);
      acc.push_back({ta.mask | tb.mask, c});
    }
  }
  std::sort(acc.begin(), acc.end(),
            [](const GrassmannElement::Term& x, const GrassmannElement::Term& y) {
              return x.mask < y.mask;
            });
  for (const auto& t : acc) {
    if (!r.terms_.empty() && r.terms_.back().mask == t.mask)
      r.terms_.back().c += t.c;
    else
      r.terms_.push_back(t);
  }
  r.prune();
  return r;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  return gmul(a, b);
}

bool GrassmannElement::operator==(const GrassmannElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mask != o.terms_[i].mask || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

GrassmannElement ginv(const GrassmannElement& a) {
  double b = a.body();
  if (b == 0.0) throw DegenerateBody("ginv of an element with zero body");
  GrassmannElement s = a.soul();
  // 1/(b+s) = (1/b) sum_k (-s/b)^k, finite because s is nilpotent
  GrassmannElement x = s * (-1.0 / b);
  GrassmannElement acc(1.0);
  GrassmannElement pow(1.0);
  for (int k = 0; k < 64; ++k) {
    pow = gmul(pow, x);
    if (pow.is_zero()) break;
    acc += pow;
  }
  return acc * (1.0 / b);
}

std::pair<double, GrassmannElement> body_soul(const GrassmannElement& a) {
  return {a.body(), a.soul()};
}

}  // namespace bvt
