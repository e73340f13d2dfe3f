#pragma once

#include <map>
#include <string>
#include <string_view>

#include "bvt/fieldspace.hpp"

namespace bvt {

// Sign/term multipliers keyed by catalogue term id; absent means 1. Used by
// the mutation controls: a mutated run flips or drops one catalogued term.
struct Mutations {
  std::map<std::string, double, std::less<>> m;
  double operator()(std::string_view id) const {
    auto it = m.find(id);
    return it == m.end() ? 1.0 : it->second;
  }
  bool empty() const { return m.empty(); }
};

// Slot-argument evaluation of catalogued field-space forms. One-forms take
// (phi, W); two-forms take (phi, A, B) and already contain both slot
// assignments, so contraction with two arguments is a tag-and-strip.
using OneFormFn = std::function<GrassmannElement(const Config&, const Config&)>;
using TwoFormFn =
    std::function<GrassmannElement(const Config&, const Config&, const Config&)>;

// A slot tag flips the parity of every inserted coefficient, and the integral
// functional weighs term parity against the stratum dimension. Evaluations
// with an odd number of tags therefore compensate by (-1)^dim so that slot
// insertion commutes with integration.
inline double tag_sign(const Config& c, int ntags) {
  return (c.st.dim() & 1) && (ntags & 1) ? -1.0 : 1.0;
}

inline GrassmannElement eval_one_form(const OneFormFn& a, const Config& phi,
                                      const Config& y) {
  return a(phi, tagged(y, GenLayout::kTagY)).extract(GenLayout::kTagY) * tag_sign(phi, 1);
}

inline GrassmannElement iota_q(const TwoFormFn& w, const Config& phi, const Config& q,
                               const Config& y) {
  return w(phi, q, tagged(y, GenLayout::kTagY)).extract(GenLayout::kTagY) * tag_sign(phi, 1);
}

inline GrassmannElement iota_qq(const TwoFormFn& w, const Config& phi, const Config& q) {
  return w(phi, q, q);
}

inline GrassmannElement eval_two_form(const TwoFormFn& w, const Config& phi, const Config& x,
                                      const Config& y) {
  return w(phi, tagged(x, GenLayout::kTagX), tagged(y, GenLayout::kTagY))
      .extract(GenLayout::kTagX | GenLayout::kTagY);
}

// shorthand used by the theory transcriptions
inline SuperForm curvature(const SuperForm& om) {
  return d(om) + gbracket(om, om).scaled(0.5);
}

inline GrassmannElement tr_int(const SuperForm& f) {
  return integrate(f.target == Target::Tri ? tr3(f) : f);
}

// the square bracket [xi,xi]^mu = 2 xi^nu d_nu xi^mu as component fields
inline VecField square_bracket(const VecField& xi) {
  VecField sq{};
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu)
      if (!xi[nu].is_zero() && !xi[mu].is_zero())
        sq[mu] += pmul(xi[nu], xi[mu].partial(nu)).scaled(2.0);
  return sq;
}

// scalar 0-form wrapper
inline SuperForm sform(const Stratum& st, const PolyFunction& p, int ghost = 0) {
  SuperForm f = SuperForm::zero(st, 0, ghost, Target::Scalar);
  if (!p.is_zero()) f.at(0, 0) = p;
  return f;
}

}  // namespace bvt
