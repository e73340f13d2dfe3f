#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bvt/bf_theory.hpp"

using namespace bvt;

namespace {

const Mutations kNone{};
const GenLayout L{};

struct Cells {
  Stratum cell;
  std::vector<Stratum> children;
};

Cells cells_at(int codim) {
  Stratum c = cube();
  if (codim == 0) return {c, boundary_of(c)};
  auto f = boundary_of(c)[1];
  if (codim == 1) return {f, boundary_of(f)};
  auto e = boundary_of(f)[2];
  if (codim == 2) return {e, boundary_of(e)};
  return {boundary_of(e)[0], {}};
}

double rcme_residual(int codim, unsigned long long seed, double lambda = 0.0) {
  auto [cell, kids] = cells_at(codim);
  auto phi = bf::random_config(cell, seed, L, 2, 0.8);
  auto q = bf::q_of(phi, lambda, kNone);
  auto varpi = [](const Config& c, const Config& a, const Config& b) {
    return bf::varpi(c, a, b);
  };
  double worst = 0;
  for (int v = 0; v < 5; ++v) {
    auto y = bf::random_variation(cell, seed * 31 + v, L, 1, 2, 1.0);
    GrassmannElement lhs = iota_q(varpi, phi, q, y);
    GrassmannElement ds = gateaux(
        [&](const Config& c) { return bf::action(c, lambda, kNone); }, phi, y,
        bf::kActionDegree);
    GrassmannElement bdry;
    for (const auto& k : kids) {
      auto af = [](const Config& c, const Config& w) { return bf::alpha(c, w, Mutations{}); };
      bdry += eval_one_form(af, bf::restrict_cfg(phi, k), bf::restrict_cfg(y, k));
    }
    GrassmannElement r = lhs - ds + bdry;
    double scale = std::max({lhs.max_abs(), ds.max_abs(), bdry.max_abs()});
    worst = std::max(worst, rel_residual(r, scale));
  }
  return worst;
}

double baction_residual(int codim, unsigned long long seed, double lambda = 0.0) {
  auto [cell, kids] = cells_at(codim);
  auto phi = bf::random_config(cell, seed, L, 2, 0.8);
  auto q = bf::q_of(phi, lambda, kNone);
  GrassmannElement lhs = bf::varpi(phi, q, q);
  GrassmannElement rhs;
  for (const auto& k : kids) rhs += bf::action(bf::restrict_cfg(phi, k), lambda, kNone) * 2.0;
  double scale = std::max(lhs.max_abs(), rhs.max_abs());
  return rel_residual(lhs - rhs, scale);
}

}  // namespace

TEST_CASE("master equation with boundary term, all codimensions") {
  for (int codim = 0; codim <= 2; ++codim)
    for (unsigned long long seed : {1ull, 2ull})
      CHECK(rcme_residual(codim, seed) <= 1e-10);
}

TEST_CASE("squared master equation matches twice the next action") {
  for (int codim = 0; codim <= 2; ++codim)
    for (unsigned long long seed : {3ull, 4ull})
      CHECK(baction_residual(codim, seed) <= 1e-10);
}

TEST_CASE("terminal identities on vertices") {
  auto [cell, kids] = cells_at(3);
  auto phi = bf::random_config(cell, 5, L, 2, 0.8);
  auto q = bf::q_of(phi, 0.0, kNone);
  auto varpi = [](const Config& c, const Config& a, const Config& b) {
    return bf::varpi(c, a, b);
  };
  for (int v = 0; v < 5; ++v) {
    auto y = bf::random_variation(cell, 100 + v, L, 1, 2, 1.0);
    GrassmannElement lhs = iota_q(varpi, phi, q, y);
    GrassmannElement ds =
        gateaux([&](const Config& c) { return bf::action(c, 0.0, kNone); }, phi, y,
                bf::kActionDegree);
    double scale = std::max(lhs.max_abs(), ds.max_abs());
    CHECK(rel_residual(lhs - ds, scale) <= 1e-11);
  }
  CHECK(bf::varpi(phi, q, q).max_abs() <= 1e-12);
}

TEST_CASE("cosmological term keeps the tower") {
  CHECK(rcme_residual(0, 7, 0.8) <= 1e-10);
  CHECK(rcme_residual(1, 8, -1.3) <= 1e-10);
  CHECK(baction_residual(0, 9, 0.8) <= 1e-10);
  // lambda = 0 recovers the base action exactly
  auto phi = bf::random_config(cube(), 11, L, 2, 0.8);
  CHECK((bf::action(phi, 0.0, kNone) - bf::action(phi, 0.0, Mutations{})).max_abs() == 0.0);
}

TEST_CASE("bulk action against the component-expansion oracle") {
  auto st = cube();
  auto phi = bf::random_config(st, 13, L, 2, 0.8);
  const SuperForm &tau = phi["tau"], &B = phi["B"], &Ad = phi["A_dag"], &xd = phi["chi_dag"];
  const SuperForm &chi = phi["chi"], &A = phi["A"], &Bd = phi["B_dag"], &td = phi["tau_dag"];
  // hand expansion of the curvature family
  SuperForm F0 = gbracket(chi, chi).scaled(0.5);
  SuperForm F1 = d(chi) + gbracket(chi, A);
  SuperForm F2 = d(A) + gbracket(A, A).scaled(0.5) + gbracket(chi, Bd);
  SuperForm F3 = d(Bd) + gbracket(chi, td) + gbracket(A, Bd);
  GrassmannElement oracle = tr_int(wedge(tau, F3)) + tr_int(wedge(B, F2)) +
                            tr_int(wedge(Ad, F1)) + tr_int(wedge(xd, F0));
  CHECK((bf::action(phi, 0.0, kNone) - oracle).max_abs() <= 1e-11);

  // zero fields give zero action
  CHECK(bf::action(zero_like(phi), 0.0, kNone).max_abs() == 0.0);
}

TEST_CASE("vertex action keeps only the degree-selected components") {
  auto [cell, kids] = cells_at(3);
  auto phi = bf::random_config(cell, 21, L, 2, 0.8);
  GrassmannElement oracle =
      tr_int(wedge(phi["tau"], gbracket(phi["chi"], phi["chi"]).scaled(0.5)));
  CHECK((bf::action(phi, 0.0, kNone) - oracle).max_abs() <= 1e-13);
}

TEST_CASE("mutation sensitivity") {
  Mutations flip;
  flip.m["bf.S.half"] = -1.0;
  auto [cell, kids] = cells_at(0);
  auto phi = bf::random_config(cell, 2, L, 2, 0.8);
  auto q = bf::q_of(phi, 0.0, kNone);
  auto y = bf::random_variation(cell, 77, L, 1, 2, 1.0);
  auto varpi = [](const Config& c, const Config& a, const Config& b) {
    return bf::varpi(c, a, b);
  };
  GrassmannElement lhs = iota_q(varpi, phi, q, y);
  GrassmannElement ds =
      gateaux([&](const Config& c) { return bf::action(c, 0.0, flip); }, phi, y, 3);
  GrassmannElement bdry;
  for (const auto& k : kids) {
    auto af = [](const Config& c, const Config& w) { return bf::alpha(c, w, Mutations{}); };
    bdry += eval_one_form(af, bf::restrict_cfg(phi, k), bf::restrict_cfg(y, k));
  }
  double scale = std::max({lhs.max_abs(), ds.max_abs(), bdry.max_abs()});
  CHECK(rel_residual(lhs - ds + bdry, scale) >= 1e-3);
}
