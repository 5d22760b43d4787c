#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "windwave/core.hpp"
#include "windwave/sl_eigen.hpp"

namespace windwave {

struct ConditionEntry {
    double value = 0.0;  ///< signed residual/margin of the condition
    bool pass = false;
};

using ConditionReport = std::map<std::string, ConditionEntry>;

inline bool all_pass(const ConditionReport& r) {
    for (const auto& [k, v] : r)
        if (!v.pass) return false;
    return true;
}

struct BifurcationPoint {
    Regime regime{};
    int mode = 1;                 ///< n (lidded) or k (unbounded)
    double lambda_star = 0.0;
    ConditionReport conditions;
    std::vector<double> eig_p;    ///< sample abscissae of the eigenfunction
    std::vector<double> eig_M;    ///< eigenfunction samples
    std::optional<double> mu;     ///< coupling constant (lidded irrotational)
};

/// Local bifurcation condition for the irrotational lidded regime. The
/// reported value is -g⟦ρ⟧ + Γ² coth(p1/Γ); the condition holds (a mode-1
/// eigenvalue crossing exists) iff the value is positive, which is exactly
/// the n = 1 size condition below.
ConditionEntry check_ilbc(const PhysicalConfig& cfg, double gamma_rel);

/// Mode-n size condition: value g⟦ρ⟧/n - Γ² coth(n p1/Γ), pass iff < 0.
ConditionEntry check_size_condition_n(const PhysicalConfig& cfg, double gamma_rel, int n);

/// Unique λ with g⟦ρ⟧/n = Γ² coth(n p1/Γ) - λ² coth(n(p1-p0)/λ).
/// Throws InfeasibleError when the size condition fails.
double solve_ideal_lambda_n(const PhysicalConfig& cfg, double gamma_rel, int n);

/// Analytic transmission eigenfunction for the irrotational lidded regime.
struct IdealEigenfunction {
    double mu = 0.0;
    double n = 1;
    double gamma_rel = 0.0, lambda = 0.0, p0 = 0.0, p1 = 0.0;
    double value(double p) const;
    double derivative(double p) const;
};
IdealEigenfunction eigenfunction_ideal(const PhysicalConfig& cfg, double gamma_rel, int n,
                                       double lambda);

/// ⟦a³ M_p⟧ - g⟦ρ⟧ M(p1) for the analytic eigenfunction (air minus water).
double ideal_interface_residual(const PhysicalConfig& cfg, const IdealEigenfunction& M);

/// Explicit sufficient condition for the rotational lidded regime:
/// g⟦ρ⟧ p1² + ∫ (Γ³ + p²Γ) dp < 0.
ConditionEntry check_shear_size_condition(const PhysicalConfig& cfg,
                                          const GammaRelProfile& gamma_rel);

struct NuOptions {
    int elements = 256;     ///< elements per region for the eigensolve
    int scan_points = 64;   ///< geometric λ-grid size for the LBC scan
    double lambda_min = 1e-3;
    double residual_tol = 1e-9;  ///< |ν(λ*) + 1| target
};

/// ν(λ): minimum of the discretized transmission Rayleigh quotient.
double nu_of_lambda(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                    double lambda, const NuOptions& opt = {});

/// Upper end of the λ-scan: above it ν > -1 (minimum-coefficient bound).
double nu_scan_upper_lambda(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel);

/// Scan ν over a geometric λ-grid (parallel over grid points).
std::vector<double> nu_scan(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                            const std::vector<double>& lambdas, const NuOptions& opt = {},
                            bool parallel = true);

/// λ* with ν(λ*) = -1, found by bisection on the monotone segment.
/// Throws InfeasibleError when the scanned infimum never drops below -1.
double solve_shear_lambda_star(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                               const NuOptions& opt = {});

/// Fourier multipliers of the linearized unbounded-regime surface operator.
double multiplier_m(const PhysicalConfig& cfg, double k, double lambda);
double multiplier_m_tilde(const PhysicalConfig& cfg, double k, double lambda);

/// Bifurcation point of the unbounded regimes (closed form for the
/// irrotational case; concave-branch bisection for constant shear).
double solve_unbounded_lambda_star(const PhysicalConfig& cfg);

/// Unbounded local bifurcation condition values (mode 1, depth 1).
ConditionEntry check_ulbc(const PhysicalConfig& cfg);
ConditionEntry check_uslbc(const PhysicalConfig& cfg);

/// Smallest mode k <= k_max with p0² k coth(k d)/d² + g⟦ρ⟧ (+ shear terms) > 0.
int k_star(const PhysicalConfig& cfg, int k_max = 64);

/// Height of the neutered critical layer in the air (unbounded shear):
/// root of Ψ0'(y) = -λ - γ0 y in y > 0 when γ0 < 0 and λ > 0.
std::optional<double> critical_layer(const PhysicalConfig& cfg, double lambda);

/// Full per-regime bifurcation solve with condition report (CLI entry).
BifurcationPoint solve_bifurcation(const PhysicalConfig& cfg, int mode = 1,
                                   const NuOptions& opt = {});

/// Mode-1 null profile M̂(p) normalized to M̂(p1) = 1, for seeding the
/// bifurcating branch: analytic in the irrotational regime, interpolated
/// discrete eigenvector in the rotational one.
std::function<double(double)> normalized_null_profile(const PhysicalConfig& cfg,
                                                      const GammaRelProfile& gamma_rel,
                                                      double lambda_star,
                                                      const NuOptions& opt = {});

}  // namespace windwave
