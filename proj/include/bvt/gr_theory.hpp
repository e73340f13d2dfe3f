#pragma once

#include "bvt/theory_support.hpp"

namespace bvt::gr {

// ----- shared helpers -----

// Pointwise V-valued basis with constant-body Gram determinant; component
// extraction stays polynomial because the inverse determinant does.
struct Frame {
  std::array<SuperForm, 3> b;  // V-valued 0-forms
  PolyFunction inv_det;        // pinv(tr(b0 b1 b2))
};
Frame make_frame(const SuperForm& b0, const SuperForm& b1, const SuperForm& b2);

// X = sum_i X^(i) b_i for a V-valued p-form X; returns the scalar p-forms.
std::array<SuperForm, 3> frame_components(const SuperForm& x, const Frame& f);

// Z_i with b_i ^ Z_i = T for a Tri- or scalar-valued p-form T ("extract a b_i
// factor"): Z_i = tr(T) inv_det * (b_j ^ b_k), (i,j,k) cyclic.
SuperForm tri_extract(const SuperForm& t, const Frame& f, int i);

// tangential components of xi as a vector field (global axis slots)
VecField xi_tan(const Config& c);

// ----- bulk (codim 0) -----

Config random_bulk(unsigned long long seed, const GenLayout& L, int deg, double amp);
Config random_bulk_variation(unsigned long long seed, const GenLayout& L, int pool, int deg,
                             double amp);
GrassmannElement bulk_action(const Config& c, double lambda, const Mutations& mu);
GrassmannElement bulk_alpha(const Config& c, const Config& w, const Mutations& mu);
GrassmannElement bulk_varpi(const Config& c, const Config& a, const Config& b);
Config bulk_q(const Config& c, double lambda, const Mutations& mu);
inline constexpr int kBulkActionDegree = 5;

// ----- pre-boundary space (bulk fields and normal contractions on a face) -----

Config restrict_prebd(const Config& bulk, const Stratum& face);
Config random_prebd_variation(const Stratum& face, unsigned long long seed, const GenLayout& L,
                              int pool, int deg, double amp);
GrassmannElement prebd_alpha(const Config& p, const Config& w, const Mutations& mu);
GrassmannElement prebd_varpi(const Config& p, const Config& a, const Config& b);
GrassmannElement prebd_s(const Config& p, const Mutations& mu);
// free slots: e_n, e_dag_n, c_dag_n, om_dag_n, chi_*; output annihilates prebd_varpi
Config prebd_kernel(const Config& free, const Config& p, const Mutations& mu);
// the exact term whose field-space differential corrects prebd_alpha to basic
GrassmannElement prebd_alpha_corr(const Config& p);
// symplectic reduction chart (the codim-1 projection), eps drawn from the seed
Config project_boundary(const Config& p, double eps, const Mutations& mu);
inline constexpr int kPrebdSDegree = 5;
inline constexpr int kCorrDegree = 3;
inline constexpr int kProjectDegree = 4;

// ----- codim 1 (faces) -----

Config random_codim1(const Stratum& face, unsigned long long seed, const GenLayout& L, int deg,
                     double amp);
Config random_codim1_variation(const Stratum& face, unsigned long long seed, const GenLayout& L,
                               int pool, int deg, double amp);
GrassmannElement c1_action(const Config& c, double lambda, const Mutations& mu);
GrassmannElement c1_alpha(const Config& c, const Config& w, const Mutations& mu);
GrassmannElement c1_varpi(const Config& c, const Config& a, const Config& b);
Config c1_q(const Config& c, const Mutations& mu);
inline constexpr int kC1ActionDegree = 5;

// ----- pre-corner space (codim-1 fields and m-contractions on an edge) -----

Config restrict_precorner(const Config& c1, const Stratum& edge);
Config random_precorner_variation(const Stratum& edge, unsigned long long seed,
                                  const GenLayout& L, int pool, int deg, double amp);
GrassmannElement precorner_alpha(const Config& p, const Config& w, const Mutations& mu);
GrassmannElement precorner_varpi(const Config& p, const Config& a, const Config& b);
GrassmannElement precorner_s(const Config& p, const Mutations& mu);
// free slots: e_m, e_dag_m, om_dag_m
Config precorner_kernel(const Config& free, const Config& p, const Mutations& mu);
GrassmannElement precorner_alpha_corr(const Config& p);
Config project_corner(const Config& p, double epsp, const Mutations& mu);

// ----- codim 2 (edges) -----

enum class S2Variant { Statement, Proof };

Config random_codim2(const Stratum& edge, unsigned long long seed, const GenLayout& L, int deg,
                     double amp);
Config random_codim2_variation(const Stratum& edge, unsigned long long seed, const GenLayout& L,
                               int pool, int deg, double amp);
GrassmannElement c2_action(const Config& c, double lambda, S2Variant v, const Mutations& mu);
GrassmannElement c2_alpha(const Config& c, const Config& w, const Mutations& mu);
GrassmannElement c2_varpi(const Config& c, const Config& a, const Config& b);
Config c2_q(const Config& c, const Mutations& mu);
inline constexpr int kC2ActionDegree = 3;

// ----- pre-vertex space -----

Config restrict_prevertex(const Config& c2, const Stratum& vertex);
Config random_prevertex_variation(const Stratum& vertex, unsigned long long seed,
                                  const GenLayout& L, int pool, double amp);
GrassmannElement prevertex_alpha(const Config& p, const Config& w, const Mutations& mu);
GrassmannElement prevertex_varpi(const Config& p, const Config& a, const Config& b);
GrassmannElement prevertex_s(const Config& p, const Mutations& mu);
// free slot: e_a
Config prevertex_kernel(const Config& free, const Config& p, const Mutations& mu);
Config project_vertex(const Config& p, double epspp, const Mutations& mu);

// ----- codim 3 (vertices) -----

Config random_codim3(const Stratum& vertex, unsigned long long seed, const GenLayout& L,
                     double amp);
Config random_codim3_variation(const Stratum& vertex, unsigned long long seed,
                               const GenLayout& L, int pool, double amp);
GrassmannElement c3_action(const Config& c, double lambda, const Mutations& mu);
GrassmannElement c3_alpha(const Config& c, const Config& w, const Mutations& mu);
GrassmannElement c3_varpi(const Config& c, const Config& a, const Config& b);
Config c3_q(const Config& c, const Mutations& mu);
inline constexpr int kC3ActionDegree = 3;

}  // namespace bvt::gr
