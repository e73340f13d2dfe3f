#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bvt/superform.hpp"

namespace bvt {

// Odd-generator budget. Bits 0/1 tag the two slot arguments of field-space
// forms, bits 2/3 build the even nilpotent used for exact map tangents, field
// generators follow, then one pool per variation argument.
struct GenLayout {
  int n_odd = 12;
  int n_var = 6;
  static constexpr gmask kTagX = 1;
  static constexpr gmask kTagY = 2;
  static constexpr gmask kDual = 0b1100;
  int field_base() const { return 4; }
  int var_base(int pool) const { return 4 + n_odd + pool * n_var; }
};

// splitmix64; fixed algorithm so runs are bit-identical across platforms.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int uniform_int(int n) { return int(next() % std::uint64_t(n)); }
};

struct FieldSlot {
  std::string name;
  SuperForm v;
  bool fixed = false;  // background data; variations vanish here
};

// One point of a BV/BFV space of fields (or a tangent direction: same shape).
struct Config {
  Stratum st;
  std::vector<FieldSlot> slots;

  bool has(std::string_view n) const;
  const SuperForm& operator[](std::string_view n) const;
  SuperForm& get(std::string_view n);
  void add(std::string name, SuperForm v, bool fixed = false);
};

Config zero_like(const Config& c);
Config axpy(const Config& phi, double t, const Config& y);
// left-multiply every non-fixed slot by a constant Grassmann scalar
Config lmul_config(const Config& y, const GrassmannElement& c);
Config tagged(const Config& y, gmask tag_bit);

// Random scalar polynomial pieces. Degrees are per-axis bounds on the
// stratum's tangent axes.
PolyFunction random_body_poly(Rng& r, const Stratum& st, int deg, double amp);
PolyFunction random_odd_poly(Rng& r, const Stratum& st, int deg, double amp, int base, int n);
PolyFunction random_soul_poly(Rng& r, const Stratum& st, int deg, double amp, int base, int n);

// Parity-matched random form: odd ghost -> sums of two distinct generators
// times polynomials; even ghost -> body polynomial plus a grade-2 soul.
SuperForm random_form(Rng& r, const Stratum& st, int degree, int ghost, Target t, int base,
                      int n, int deg, double amp);

// Exact linear-in-t coefficient of t -> F(phi + t y), from D+2 evaluation
// nodes and a Vandermonde solve; audits the catalogued degree bound.
GrassmannElement gateaux(const std::function<GrassmannElement(const Config&)>& F,
                         const Config& phi, const Config& y, int max_degree, double h = 0.5);

// Exact pushforward of y under a polynomial/rational map, via the even
// nilpotent dual shift (square zero, so the linear coefficient is exact).
Config tangent_of_map(const std::function<Config(const Config&)>& map, const Config& phi,
                      const Config& y);

// |r| / max(scale, floor); scale is the largest participating term norm.
double rel_residual(const GrassmannElement& r, double scale);

}  // namespace bvt
