#pragma once

#include <array>
#include <vector>

#include "bvt/chart.hpp"
#include "bvt/minkowski.hpp"
#include "bvt/poly.hpp"

namespace bvt {

enum class Target { Scalar, V, Bi, Tri, Density };

inline int target_dim(Target t) { return (t == Target::V || t == Target::Bi) ? 3 : 1; }

// Differential form on one stratum with polynomial x Grassmann x tensor
// coefficients. Components are indexed by an ascending coordinate-differential
// mask (subset of the stratum's tangent axes) and a target index. Koszul signs
// are computed from the actual Grassmann parity of each coefficient term, with
// total degree = form degree + coefficient parity, so parity-mixed
// coefficients (tagged slot values, dual-number shifts) are handled exactly.
struct SuperForm {
  Stratum st;
  int degree = 0;
  int ghost = 0;
  Target target = Target::Scalar;

  struct Comp {
    unsigned mask;
    std::vector<PolyFunction> c;  // target_dim entries
  };
  std::vector<Comp> comps;  // sorted by mask

  static SuperForm zero(const Stratum& s, int degree, int ghost, Target t);
  // scalar 0-form with constant coefficient 1
  static SuperForm one(const Stratum& s);
  // the coordinate volume form dx^t1 ^ ... ^ dx^td with coefficient 1
  static SuperForm volume(const Stratum& s);

  const PolyFunction* find(unsigned mask, int tc) const;
  PolyFunction& at(unsigned mask, int tc);

  bool is_zero() const;
  double max_abs() const;

  SuperForm operator-() const;
  SuperForm& operator+=(const SuperForm& o);
  SuperForm& operator-=(const SuperForm& o);
  friend SuperForm operator+(SuperForm a, const SuperForm& b) { a += b; return a; }
  friend SuperForm operator-(SuperForm a, const SuperForm& b) { a -= b; return a; }
  SuperForm scaled(double s) const;
  // left multiplication by a constant Grassmann scalar
  SuperForm lmul(const GrassmannElement& c) const;
};

// Graded wedge with target pairing deduced from the operand targets:
// Scalar/Density act as scalars, V^V -> Bi, V^Bi/Bi^V -> Tri.
SuperForm wedge(const SuperForm& a, const SuperForm& b);

// Graded bracket: (Bi,Bi) Lie bracket, (Bi,V) action, (V,Bi) reversed action,
// (Bi,Tri)/(Tri,Bi) zero.
SuperForm gbracket(const SuperForm& a, const SuperForm& b);

// Coordinate exterior derivative, d^2 = 0.
SuperForm d(const SuperForm& a);

// Covariant derivative d + [om, .] in the representation of a's target.
SuperForm covariant_d(const SuperForm& om, const SuperForm& a);

// Contraction with a vector field given by per-axis scalar 0-form components.
// Only tangent-axis components act. Works for any component parity; the
// operator parity is derived per term.
using VecField = std::array<PolyFunction, 3>;
SuperForm contract(const VecField& w, const SuperForm& a);

// Classical contraction with the coordinate vector field of one axis.
SuperForm contract_axis(const SuperForm& a, int axis);

// [iota_xi, d_om] for odd xi: iota d - d iota.
SuperForm lie_covariant(const VecField& xi, const SuperForm& om, const SuperForm& a);

// [[iota_xi, d_om], iota_xi]: contraction with the square bracket [xi,xi].
SuperForm contract_bracket(const VecField& xi, const SuperForm& om, const SuperForm& a);

// Pullback to a contained stratum: substitute fixed coordinates, drop
// components that use non-tangent differentials.
SuperForm restrict_to(const SuperForm& a, const Stratum& child);

// Tri -> Scalar on the trace normalisation tr(v0^v1^v2) = 1.
SuperForm tr3(const SuperForm& a);

// Exact integral of a top-degree single-component form over its stratum
// (orientation included). Codim 3 strata evaluate at the point.
GrassmannElement integrate(const SuperForm& a);

}  // namespace bvt
