#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bvt/grassmann.hpp"

namespace bvt {

// Multivariate polynomial in the chart coordinates (x, y, z) with
// GrassmannElement coefficients. Sparse: sorted (packed-exponent, coefficient)
// pairs, 6 bits per axis. Stored degree bounds are exact by construction.
class PolyFunction {
 public:
  using Key = std::uint32_t;
  static Key pack(int ex, int ey, int ez) {
    return Key(ex) | (Key(ey) << 6) | (Key(ez) << 12);
  }
  static int exp_of(Key k, int axis) { return int((k >> (6 * axis)) & 63u); }

  PolyFunction() = default;
  explicit PolyFunction(double c) {
    if (c != 0.0) terms_.push_back({0, GrassmannElement(c)});
  }
  explicit PolyFunction(const GrassmannElement& c) {
    if (!c.is_zero()) terms_.push_back({0, c});
  }
  static PolyFunction monomial(int ex, int ey, int ez, const GrassmannElement& c);

  const std::vector<std::pair<Key, GrassmannElement>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double max_abs() const;
  int max_degree(int axis) const;

  PolyFunction operator-() const;
  PolyFunction& operator+=(const PolyFunction& o);
  PolyFunction& operator-=(const PolyFunction& o);
  friend PolyFunction operator+(PolyFunction a, const PolyFunction& b) { a += b; return a; }
  friend PolyFunction operator-(PolyFunction a, const PolyFunction& b) { a -= b; return a; }

  PolyFunction scaled(double s) const;
  // coefficient-wise left product c * f (written order preserved)
  PolyFunction lmul(const GrassmannElement& c) const;

  PolyFunction partial(int axis) const;
  PolyFunction substitute(int axis, double v) const;
  GrassmannElement eval(const std::array<double, 3>& x) const;

  void add_term(Key k, const GrassmannElement& c);

  // Product with a custom coefficient multiplier (used for graded sign rules).
  template <class Mul>
  static PolyFunction product(const PolyFunction& a, const PolyFunction& b, Mul&& mul) {
    PolyFunction r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        GrassmannElement c = mul(ca, cb);
        if (!c.is_zero()) r.add_term(ka + kb, c);
      }
    return r;
  }

 private:
  std::vector<std::pair<Key, GrassmannElement>> terms_;
};

// Plain graded product of coefficients: a * b.
PolyFunction pmul(const PolyFunction& a, const PolyFunction& b);

// Inverse of a scalar function whose non-constant part is Grassmann-nilpotent
// (constant body + soul terms). Throws DegenerateBody otherwise.
PolyFunction pinv(const PolyFunction& a);

// Product where b's odd-parity terms flip sign when ndx is odd (the sign of
// moving ndx coordinate differentials across the coefficient b).
PolyFunction pmul_dx(const PolyFunction& a, const PolyFunction& b, int ndx);

}  // namespace bvt
