#pragma once

#include <span>
#include <string_view>

namespace lpball::constants {

// Frozen implementation constants standing in for the unnumbered universal
// constants of the concentration estimates. Values were fixed from the
// calibration run `lpball calibrate --seed 20261018` (see README) and are
// versioned together: bump kVersion whenever any value changes.

inline constexpr std::string_view kVersion = "1";

/// Universal C in P(x^p > u) ≤ C e^{−u/2} (p ≥ 1, all u).
inline constexpr double kTailUniversalC = 2.0;

/// Decay constant γ of the upper bound: c(p, q) = γ/p for q > 2p.
inline constexpr double kGammaLower = 0.4;

/// Decay constant Γ of the lower bound: C(p, q) = Γ/p.
inline constexpr double kGammaUpper = 4.0;

/// τ in T(p, q) = τ min{q, ln n}^{1/p} for finite q > 2p.
inline constexpr double kTau = 0.75;

/// τ for q = ∞, where T = τ_∞ (ln n)^{1/p}.
inline constexpr double kTauInfinity = 2.0;

/// Multiplier on the moment-norm limit ((E x^q)^{1/q} / (E x^p)^{1/p}) used as
/// T(p, q) when q ≤ 2p.
inline constexpr double kTauGeneric = 1.0;

/// Envelope constants for E(Σ x_i^q)^{1/q} relative to the regime formula.
inline constexpr double kKappaLower = 0.25;
inline constexpr double kKappaUpper = 4.0;

/// Slack on the upper side of the q = ∞ sandwich.
inline constexpr double kInfinityNormSlack = 1.0;

struct NamedConstant {
  std::string_view name;
  double value;
  std::string_view provenance;
  std::string_view description;
};

/// All frozen constants, in a stable order, for reporting.
std::span<const NamedConstant> all();

}  // namespace lpball::constants
