#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bvt/errors.hpp"

namespace bvt {

using gmask = std::uint64_t;

// Element of the exterior algebra over up to 64 odd generators, with real
// coefficients. Terms are kept sorted by generator bitmask and terms with
// coefficient exactly zero are dropped, so equality of maps is equality of
// elements.
class GrassmannElement {
 public:
  struct Term {
    gmask mask;
    double c;
  };

  GrassmannElement() = default;
  explicit GrassmannElement(double body) {
    if (body != 0.0) terms_.push_back({0, body});
  }

  static GrassmannElement generator(int i) { return monomial(gmask(1) << i, 1.0); }
  static GrassmannElement monomial(gmask mask, double c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double body() const {
    return (!terms_.empty() && terms_.front().mask == 0) ? terms_.front().c : 0.0;
  }
  GrassmannElement soul() const;
  double coeff(gmask mask) const;

  // 0 = even, 1 = odd. Throws GradedError on parity-heterogeneous elements.
  int parity() const;
  bool homogeneous_parity() const;

  // max |coefficient|; the norm used for residuals throughout.
  double max_abs() const;

  // Terms whose mask contains `tag`, with the tag bits removed. The tag bits
  // are required to be the lowest set bits of every selected mask, so no sign
  // is introduced by stripping them.
  GrassmannElement extract(gmask tag) const;

  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(double s);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
    a += b;
    return a;
  }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) {
    a -= b;
    return a;
  }
  friend GrassmannElement operator*(GrassmannElement a, double s) {
    a *= s;
    return a;
  }
  friend GrassmannElement operator*(double s, GrassmannElement a) {
    a *= s;
    return a;
  }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);

  bool operator==(const GrassmannElement& o) const;

 private:
  std::vector<Term> terms_;
  void prune();
  friend GrassmannElement gmul(const GrassmannElement&, const GrassmannElement&);
  friend GrassmannElement parity_signed(const GrassmannElement&);
};

// Sign of merging two disjoint ascending generator lists: parity of the number
// of transpositions, i.e. of pairs (i in a, j in b) with i > j.
int merge_sign(gmask a, gmask b);

// Flip the sign of odd-parity terms: the sign of moving one odd symbol across
// the element.
GrassmannElement parity_signed(const GrassmannElement& g);

GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement ginv(const GrassmannElement& a);
std::pair<double, GrassmannElement> body_soul(const GrassmannElement& a);

}  // namespace bvt
