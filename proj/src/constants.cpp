#include "lpball/constants.hpp"

#include <array>

namespace lpball::constants {
namespace {

constexpr std::array<NamedConstant, 9> kAll = {{
    {"tail_universal_C", kTailUniversalC, "implementation choice",
     "C in P(x^p>u) <= C exp(-u/2) for p >= 1"},
    {"gamma_lower", kGammaLower, "calibrated",
     "c(p,q) = gamma/p * min(1, q/p - 1); upper-bound decay constant"},
    {"gamma_upper", kGammaUpper, "calibrated",
     "C(p,q) = Gamma/p; lower-bound decay constant"},
    {"tau", kTau, "calibrated", "T(p,q,n) = tau * min(q, ln n)^(1/p) for finite q > 2p"},
    {"tau_infinity", kTauInfinity, "calibrated", "T(p,inf,n) = tau_inf * (ln n)^(1/p)"},
    {"tau_generic", kTauGeneric, "implementation choice",
     "T(p,q) = tau_generic * (E x^q)^(1/q) / (E x^p)^(1/p) for q <= 2p"},
    {"kappa_lower", kKappaLower, "calibrated",
     "lower envelope constant for E(sum x_i^q)^(1/q) / regime formula"},
    {"kappa_upper", kKappaUpper, "calibrated",
     "upper envelope constant for E(sum x_i^q)^(1/q) / regime formula"},
    {"infinity_norm_slack", kInfinityNormSlack, "implementation choice",
     "slack multiplying C* in the q = inf sandwich"},
}};

}  // namespace

std::span<const NamedConstant> all() { return kAll; }

}  // namespace lpball::constants
