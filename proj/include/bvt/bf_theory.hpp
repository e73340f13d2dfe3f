#pragma once

#include "bvt/theory_support.hpp"

namespace bvt::bf {

// Superfield slots. The V-valued family collects (tau, B, A_dag, chi_dag) with
// ghost 1 - form degree; the so(2,1)-valued family collects
// (chi, A, B_dag, tau_dag). On a dim-d stratum only degrees <= d survive.
inline constexpr const char* kVNames[4] = {"tau", "B", "A_dag", "chi_dag"};
inline constexpr const char* kWNames[4] = {"chi", "A", "B_dag", "tau_dag"};

Config random_config(const Stratum& st, unsigned long long seed, const GenLayout& L, int deg,
                     double amp);
Config random_variation(const Stratum& st, unsigned long long seed, const GenLayout& L,
                        int pool, int deg, double amp);

// plain restriction of the superfields: admissible components on the child
Config restrict_cfg(const Config& c, const Stratum& child);

GrassmannElement action(const Config& c, double lambda, const Mutations& mu);
GrassmannElement alpha(const Config& c, const Config& w, const Mutations& mu);
GrassmannElement varpi(const Config& c, const Config& a, const Config& b);
Config q_of(const Config& c, double lambda, const Mutations& mu);

// catalogued degree bound of the action in any field direction
inline constexpr int kActionDegree = 3;

}  // namespace bvt::bf
