#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "windwave/errors.hpp"
#include "windwave/numerics.hpp"

namespace windwave {

enum class Regime {
    LiddedIrrotational,
    LiddedRotational,
    UnboundedIrrotational,
    UnboundedShear,
};

std::string regime_name(Regime r);
Regime regime_from_name(const std::string& s);

/// Vorticity strength along streamlines of the air region, expressed as a
/// polynomial in the streamline coordinate p on [p1, 0]; value(p) = γ(-p).
struct VorticityPoly {
    std::vector<double> coeffs;  ///< value(p) = Σ coeffs[k] p^k

    double operator()(double p) const {
        double v = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) v = v * p + coeffs[k];
        return v;
    }
    bool is_zero() const {
        for (double c : coeffs)
            if (c != 0.0) return false;
        return true;
    }
};

/// All prescribed physical quantities. Nondimensional by convention: the
/// horizontal period is 2π on the core path (see rescale_to_unit_period).
struct PhysicalConfig {
    Regime regime = Regime::LiddedIrrotational;
    double g = 0.0;
    double rho_air = 0.0;
    double rho_water = 0.0;
    double p0 = 0.0;           ///< total pseudo-volumetric mass flux (< 0)
    double p1 = 0.0;           ///< interface streamline value (p0 < p1 < 0, lidded); 0 unbounded
    double ell = 0.0;          ///< lid height (lidded)
    VorticityPoly gamma;       ///< air vorticity profile (lidded rotational)
    double gamma0 = 0.0;       ///< constant air vorticity (unbounded shear)
    double depth_d = 1.0;      ///< water depth (unbounded)
    double period_L = 2.0 * std::acos(-1.0);

    bool lidded() const {
        return regime == Regime::LiddedIrrotational || regime == Regime::LiddedRotational;
    }
    /// throws ConfigError on violated invariants
    void validate() const;
};

/// ρ_air − ρ_water (strictly negative for a stable stratification).
inline double jump_rho(const PhysicalConfig& cfg) { return cfg.rho_air - cfg.rho_water; }
inline double g_jump_rho(const PhysicalConfig& cfg) { return cfg.g * jump_rho(cfg); }

/// Relative circulation Γ_rel(p) on the air streamlines p ∈ [p1, 0],
/// stored on a uniform grid with cubic interpolation between nodes.
class GammaRelProfile {
public:
    GammaRelProfile() = default;
    /// constant profile (irrotational air)
    GammaRelProfile(double p1, double value, int n_nodes = 1025);
    /// profile from nodal Γ values on the uniform grid over [p1, 0]
    GammaRelProfile(double p1, std::vector<double> values);

    double value(double p) const;
    double derivative(double p) const;
    /// ∫_{p1}^{p} dr / Γ_rel(r)
    double inv_integral(double p) const;
    double at_p1() const { return values_.front(); }
    double at_lid() const { return values_.back(); }
    double min_value() const;
    bool is_const() const { return is_const_; }
    double p1() const { return p1_; }
    const std::vector<double>& grid() const { return p_; }
    const std::vector<double>& nodal_values() const { return values_; }

private:
    double p1_ = 0.0;
    bool is_const_ = false;
    std::vector<double> p_, values_;
    CubicSpline gamma_spline_;    // Γ(p)
    CubicSpline inv_spline_;      // 1/Γ(p), integrated for the laminar profile
};

/// Γ_rel for the irrotational lidded regime: |p1| / ℓ.
double gamma_rel_ideal(const PhysicalConfig& cfg);

/// Γ_rel for the rotational lidded regime: solves ∂_p(Γ²) = 2γ(-p) with the
/// free constant Γ(p1)² found by bisection on the lid integral ∫ dp/Γ = ℓ.
/// Throws InfeasibleError when no positive constant reaches ℓ.
GammaRelProfile gamma_rel_from_vorticity(const PhysicalConfig& cfg, int n_nodes = 1025);

/// Scale factors mapping a period-L configuration onto the 2π core path.
struct PeriodScaling {
    double length;     ///< lengths multiply by this (2π/L)
    double speed;      ///< pseudo-speeds (λ, Γ_rel) multiply by sqrt(length)
    double flux;       ///< p0, p1 multiply by length^(3/2)
    double vorticity;  ///< γ multiplies by length^(-1/2)
    double bernoulli;  ///< Q multiplies by length
};
PeriodScaling rescale_to_unit_period(const PhysicalConfig& cfg, PhysicalConfig& out);

}  // namespace windwave
