#include "bvt/chart.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace bvt {

bool Stratum::contains(const Stratum& s) const {
  for (int a = 0; a < 3; ++a) {
    if (s.is_tangent[a] && !is_tangent[a]) return false;
    if (!is_tangent[a] && !s.is_tangent[a] && s.fixed[a] != fixed[a]) return false;
  }
  return true;
}

Stratum cube() { return Stratum{}; }

std::vector<Stratum> boundary_of(const Stratum& s) {
  std::vector<Stratum> out;
  if (s.codim >= 3) return out;
  auto tang = s.tangent_axes();
  int d = s.dim();
  for (int k = 0; k < d; ++k) {
    int ax = tang[k];
    for (int side = 0; side <= 1; ++side) {
      Stratum c = s;
      c.codim = s.codim + 1;
      c.is_tangent[ax] = false;
      c.fixed[ax] = double(side);
      c.normal_axis = ax;
      c.normal_sign = side == 1 ? 1.0 : -1.0;
      // induced orientation: contract the oriented parent form with the
      // outward normal in the first slot; ax sits at position k among the
      // parent's ascending tangent axes.
      double pos_sign = (k % 2 == 0) ? 1.0 : -1.0;
      c.orientation = s.orientation * c.normal_sign * pos_sign;
      c.id = s.id * 8 + 2 * k + side + 1;
      out.push_back(c);
    }
  }
  return out;
}

double gl_moment(int order, int e) {
  static std::map<int, std::vector<std::array<double, 2>>> rules;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = rules.find(order);
  if (it == rules.end()) {
    // Newton iteration on Legendre roots over [-1,1], shifted to [0,1].
    std::vector<std::array<double, 2>> rule;
    int n = order;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it2 = 0; it2 < 100; ++it2) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-15) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double w = 2.0 / ((1.0 - x * x) * dp * dp);
      rule.push_back({0.5 * (x + 1.0), 0.5 * w});
    }
    it = rules.emplace(order, std::move(rule)).first;
  }
  double s = 0.0;
  for (const auto& nw : it->second) {
    double p = 1.0;
    for (int i = 0; i < e; ++i) p *= nw[0];
    s += nw[1] * p;
  }
  return s;
}

}  // namespace bvt
