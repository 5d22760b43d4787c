#pragma once

#include "windwave/core.hpp"

namespace windwave {

/// A flat-surface, parallel-streamline solution. Lidded regimes carry the
/// height profile H(p) on [p0, 0]; unbounded regimes carry the two slopes of
/// the piecewise-linear stream function Ψ0(ȳ).
struct LaminarFlow {
    Regime regime{};
    double lambda = 0.0;
    double Q = 0.0;
    double depth = 0.0;   ///< water depth: H(p1) lidded, depth_d unbounded
    double width = 0.0;   ///< channel width ℓ + depth (lidded only)
    double ell = 0.0;
    double p0 = 0.0, p1 = 0.0;
    GammaRelProfile gamma_rel;  ///< air circulation profile (lidded)

    /// height above the bed of streamline p (lidded regimes)
    double H(double p) const;
    /// dH/dp (lidded)
    double Hp(double p) const;
    /// a(p) = H_p(p)^(-1): the transmission coefficient
    double a(double p) const { return 1.0 / Hp(p); }
    /// laminar stream function (unbounded regimes): -λ ȳ above, p0 ȳ below
    double psi0(double ybar) const { return ybar > 0.0 ? -lambda * ybar : p0 * ybar; }
};

/// Q(λ) for the lidded regimes (gamma_rel_p1 = Γ_rel(p1)).
inline double lidded_Q(const PhysicalConfig& cfg, double gamma_rel_p1, double lambda) {
    return 2.0 * g_jump_rho(cfg) * (cfg.p1 - cfg.p0) / lambda +
           gamma_rel_p1 * gamma_rel_p1 - lambda * lambda;
}

/// Q(λ) for the unbounded regimes.
inline double unbounded_Q(const PhysicalConfig& cfg, double lambda) {
    return 2.0 * (lambda * lambda - cfg.p0 * cfg.p0) + 2.0 * g_jump_rho(cfg);
}

LaminarFlow laminar_ideal(const PhysicalConfig& cfg, double gamma_rel, double lambda);
LaminarFlow laminar_shear(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                          double lambda);
LaminarFlow laminar_unbounded(const PhysicalConfig& cfg, double lambda);

/// Convenience: build the flow appropriate for cfg.regime (computes Γ_rel).
LaminarFlow make_laminar(const PhysicalConfig& cfg, double lambda);

/// The unique maximizer of λ ↦ Q(λ) in the lidded regimes:
/// λ0 = (-g⟦ρ⟧ (p1-p0))^(1/3).
double lambda_zero(const PhysicalConfig& cfg);

}  // namespace windwave
