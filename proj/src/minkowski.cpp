#include "bvt/minkowski.hpp"

#include <cmath>

namespace bvt {

int biv_index(int i, int j, double* sign) {
  for (int a = 0; a < 3; ++a) {
    if (kBivPair[a][0] == i && kBivPair[a][1] == j) {
      *sign = 1.0;
      return a;
    }
    if (kBivPair[a][0] == j && kBivPair[a][1] == i) {
      *sign = -1.0;
      return a;
    }
  }
  *sign = 0.0;
  return -1;
}

double epsilon3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  double s = 1.0;
  int p[3] = {i, j, k};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (p[a] > p[b]) {
        std::swap(p[a], p[b]);
        s = -s;
      }
  return s;
}

const std::array<std::array<double, 3>, 3>& rep_matrix(int alpha) {
  static const auto mats = [] {
    std::array<std::array<std::array<double, 3>, 3>, 3> m{};
    for (int a = 0; a < 3; ++a) {
      int i = kBivPair[a][0], j = kBivPair[a][1];
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          m[a][k][l] = (k == i ? kEta[j] * (j == l ? 1.0 : 0.0) : 0.0) -
                       (k == j ? kEta[i] * (i == l ? 1.0 : 0.0) : 0.0);
    }
    return m;
  }();
  return mats[alpha];
}

const std::array<std::array<std::array<double, 3>, 3>, 3>& bracket_constants() {
  static const auto cc = [] {
    std::array<std::array<std::array<double, 3>, 3>, 3> c{};
    // Solve [M_a, M_b] = sum_g C[a][b][g] M_g by matching matrix entries.
    // The rep matrices are linearly independent, so a least-squares solve on
    // the flattened 9-vectors is exact; here the Gram matrix is 3x3.
    double gram[3][3] = {};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double s = 0;
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) s += rep_matrix(a)[k][l] * rep_matrix(b)[k][l];
        gram[a][b] = s;
      }
    // invert 3x3
    double inv[3][3];
    double det = gram[0][0] * (gram[1][1] * gram[2][2] - gram[1][2] * gram[2][1]) -
                 gram[0][1] * (gram[1][0] * gram[2][2] - gram[1][2] * gram[2][0]) +
                 gram[0][2] * (gram[1][0] * gram[2][1] - gram[1][1] * gram[2][0]);
    auto cof = [&](int r, int s) {
      int r1 = (r + 1) % 3, r2 = (r + 2) % 3, s1 = (s + 1) % 3, s2 = (s + 2) % 3;
      return gram[r1][s1] * gram[r2][s2] - gram[r1][s2] * gram[r2][s1];
    };
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) inv[r][s] = cof(s, r) / det;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double comm[3][3];
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            double s = 0;
            for (int m = 0; m < 3; ++m)
              s += rep_matrix(a)[k][m] * rep_matrix(b)[m][l] -
                   rep_matrix(b)[k][m] * rep_matrix(a)[m][l];
            comm[k][l] = s;
          }
        double rhs[3];
        for (int g = 0; g < 3; ++g) {
          double s = 0;
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) s += rep_matrix(g)[k][l] * comm[k][l];
          rhs[g] = s;
        }
        for (int g = 0; g < 3; ++g) {
          double s = 0;
          for (int h = 0; h < 3; ++h) s += inv[g][h] * rhs[h];
          // snap to exact integers; the constants are +-1 or 0
          c[a][b][g] = std::round(s * 2.0) / 2.0;
        }
      }
    return c;
  }();
  return cc;
}

VVector operator+(const VVector& a, const VVector& b) {
  VVector r;
  for (int i = 0; i < 3; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

BiVector operator+(const BiVector& a, const BiVector& b) {
  BiVector r;
  for (int i = 0; i < 3; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

BiVector wedge_vv(const VVector& a, const VVector& b) {
  BiVector r;
  for (int al = 0; al < 3; ++al) {
    int i = kBivPair[al][0], j = kBivPair[al][1];
    r.c[al] = gmul(a.c[i], b.c[j]) - gmul(a.c[j], b.c[i]);
  }
  return r;
}

TriVector wedge_vb(const VVector& a, const BiVector& b) {
  TriVector r;
  for (int i = 0; i < 3; ++i)
    for (int al = 0; al < 3; ++al) {
      double e = epsilon3(i, kBivPair[al][0], kBivPair[al][1]);
      if (e != 0.0) r.c += gmul(a.c[i], b.c[al]) * e;
    }
  return r;
}

TriVector wedge_bv(const BiVector& a, const VVector& b) {
  TriVector r;
  for (int al = 0; al < 3; ++al)
    for (int i = 0; i < 3; ++i) {
      double e = epsilon3(kBivPair[al][0], kBivPair[al][1], i);
      if (e != 0.0) r.c += gmul(a.c[al], b.c[i]) * e;
    }
  return r;
}

BiVector bracket(const BiVector& a, const BiVector& b) {
  const auto& C = bracket_constants();
  BiVector r;
  for (int al = 0; al < 3; ++al)
    for (int be = 0; be < 3; ++be) {
      auto prod = gmul(a.c[al], b.c[be]);
      if (prod.is_zero()) continue;
      for (int g = 0; g < 3; ++g)
        if (C[al][be][g] != 0.0) r.c[g] += prod * C[al][be][g];
    }
  return r;
}

VVector act(const BiVector& a, const VVector& v) {
  VVector r;
  for (int al = 0; al < 3; ++al) {
    const auto& M = rep_matrix(al);
    for (int l = 0; l < 3; ++l) {
      if (M[0][l] == 0.0 && M[1][l] == 0.0 && M[2][l] == 0.0) continue;
      auto prod = gmul(a.c[al], v.c[l]);
      if (prod.is_zero()) continue;
      for (int k = 0; k < 3; ++k)
        if (M[k][l] != 0.0) r.c[k] += prod * M[k][l];
    }
  }
  return r;
}

VVector act_rev(const VVector& v, const BiVector& a) {
  VVector r;
  for (int al = 0; al < 3; ++al) {
    const auto& M = rep_matrix(al);
    for (int l = 0; l < 3; ++l) {
      auto prod = gmul(v.c[l], a.c[al]);
      if (prod.is_zero()) continue;
      for (int k = 0; k < 3; ++k)
        if (M[k][l] != 0.0) r.c[k] -= prod * M[k][l];
    }
  }
  return r;
}

GrassmannElement trace(const TriVector& t) { return t.c; }

}  // namespace bvt
