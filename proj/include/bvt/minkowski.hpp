#pragma once

#include <array>

#include "bvt/grassmann.hpp"

namespace bvt {

// Pointwise target algebra: the 3d Minkowski space (V, eta) with
// eta = diag(-1, +1, +1), its exterior powers, and the so(2,1) structure
// transported to Lambda^2 V through eta. Components are Grassmann-valued.
//
// Basis conventions:
//   V        : v0, v1, v2 (eta-orthonormal), components indexed 0..2
//   Lambda^2 : b0 = v0^v1, b1 = v0^v2, b2 = v1^v2
//   Lambda^3 : v0^v1^v2, normalised so tr(v0^v1^v2) = eps_{012} = +1

inline constexpr double kEta[3] = {-1.0, 1.0, 1.0};
inline constexpr int kBivPair[3][2] = {{0, 1}, {0, 2}, {1, 2}};

// Index of the bivector basis element v_i ^ v_j (i != j) and its sign.
int biv_index(int i, int j, double* sign);

// eps_{ijk} with eps_{012} = +1; zero on repeats.
double epsilon3(int i, int j, int k);

// Representation matrix of the bivector basis element b_alpha acting on V:
// rep(v_i ^ v_j) v = eta(j, .) v_i - eta(i, .) v_j.
const std::array<std::array<double, 3>, 3>& rep_matrix(int alpha);

// Structure constants of [b_alpha, b_beta] = sum_gamma C[alpha][beta][gamma] b_gamma,
// generated once from the representation matrices.
const std::array<std::array<std::array<double, 3>, 3>, 3>& bracket_constants();

struct VVector {
  std::array<GrassmannElement, 3> c;
};
struct BiVector {
  std::array<GrassmannElement, 3> c;
};
struct TriVector {
  GrassmannElement c;
};

VVector operator+(const VVector& a, const VVector& b);
BiVector operator+(const BiVector& a, const BiVector& b);

// Graded-bilinear maps. Coefficients are multiplied in the written order, so
// Koszul signs for odd components come out of the Grassmann product itself.
BiVector wedge_vv(const VVector& a, const VVector& b);
TriVector wedge_vb(const VVector& a, const BiVector& b);
TriVector wedge_bv(const BiVector& a, const VVector& b);
BiVector bracket(const BiVector& a, const BiVector& b);
VVector act(const BiVector& a, const VVector& v);
VVector act_rev(const VVector& v, const BiVector& a);  // [v, a] = -[a, v] at symbol level
GrassmannElement trace(const TriVector& t);

}  // namespace bvt
