#pragma once

#include <array>
#include <vector>

#include "bvt/errors.hpp"

namespace bvt {

// One cell of the stratified unit cube: the cube itself (codim 0), a face
// (codim 1), an edge (codim 2) or a vertex (codim 3). Tangent axes are stored
// ascending; the orientation is the sign relative to the ascending coordinate
// order. Face orientations are induced by the outward normal, so Stokes holds
// with the boundary_of() lists at every level.
struct Stratum {
  int codim = 0;
  int id = 0;
  std::array<bool, 3> is_tangent{true, true, true};
  std::array<double, 3> fixed{0.0, 0.0, 0.0};  // meaningful on non-tangent axes
  double orientation = 1.0;
  // Outward direction relative to the parent cell this stratum bounds.
  int normal_axis = -1;
  double normal_sign = 0.0;

  int dim() const { return 3 - codim; }
  std::array<int, 3> tangent_axes() const {
    std::array<int, 3> t{-1, -1, -1};
    int n = 0;
    for (int a = 0; a < 3; ++a)
      if (is_tangent[a]) t[n++] = a;
    return t;
  }
  unsigned tangent_mask() const {
    unsigned m = 0;
    for (int a = 0; a < 3; ++a)
      if (is_tangent[a]) m |= 1u << a;
    return m;
  }
  bool contains(const Stratum& s) const;
};

Stratum cube();
// Child cells with the induced orientation (outward normal convention).
std::vector<Stratum> boundary_of(const Stratum& s);

// Gauss-Legendre moments on [0,1]: sum_i w_i t_i^e for the rule of the given
// order; exact for polynomial degree <= 2*order - 1.
double gl_moment(int order, int e);

}  // namespace bvt
