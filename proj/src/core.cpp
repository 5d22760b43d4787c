#include "windwave/core.hpp"

#include <algorithm>
#include <cmath>

namespace windwave {

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::LiddedIrrotational: return "lidded_irrotational";
        case Regime::LiddedRotational: return "lidded_rotational";
        case Regime::UnboundedIrrotational: return "unbounded_irrotational";
        case Regime::UnboundedShear: return "unbounded_shear";
    }
    return "?";
}

Regime regime_from_name(const std::string& s) {
    if (s == "lidded_irrotational") return Regime::LiddedIrrotational;
    if (s == "lidded_rotational") return Regime::LiddedRotational;
    if (s == "unbounded_irrotational") return Regime::UnboundedIrrotational;
    if (s == "unbounded_shear") return Regime::UnboundedShear;
    throw ConfigError("unknown regime: " + s);
}

void PhysicalConfig::validate() const {
    if (!(g > 0.0)) throw ConfigError("g must be positive");
    if (!(rho_air > 0.0 && rho_water > rho_air))
        throw ConfigError("need 0 < rho_air < rho_water (stable stratification)");
    if (lidded()) {
        if (!(p0 < p1 && p1 < 0.0)) throw ConfigError("lidded regimes need p0 < p1 < 0");
        if (!(ell > 0.0)) throw ConfigError("lid height ell must be positive");
    } else {
        if (!(p0 < 0.0)) throw ConfigError("unbounded regimes need p0 < 0");
        if (!(depth_d > 0.0)) throw ConfigError("depth_d must be positive");
    }
    if (!(period_L > 0.0)) throw ConfigError("period_L must be positive");
}

GammaRelProfile::GammaRelProfile(double p1, double value, int n_nodes) : p1_(p1) {
    if (!(value > 0.0)) throw InfeasibleError("Gamma_rel must be positive");
    p_.resize(n_nodes);
    values_.assign(n_nodes, value);
    for (int i = 0; i < n_nodes; ++i) p_[i] = p1 + (0.0 - p1) * i / (n_nodes - 1);
    is_const_ = true;
    gamma_spline_ = CubicSpline(p_, values_);
    std::vector<double> inv(n_nodes, 1.0 / value);
    inv_spline_ = CubicSpline(p_, inv);
}

GammaRelProfile::GammaRelProfile(double p1, std::vector<double> values)
    : p1_(p1), values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    p_.resize(n);
    for (int i = 0; i < n; ++i) p_[i] = p1 + (0.0 - p1) * i / (n - 1);
    for (double v : values_)
        if (!(v > 0.0)) throw InfeasibleError("Gamma_rel must be positive on [p1, 0]");
    is_const_ = std::all_of(values_.begin(), values_.end(),
                            [&](double v) { return v == values_.front(); });
    gamma_spline_ = CubicSpline(p_, values_);
    std::vector<double> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = 1.0 / values_[i];
    inv_spline_ = CubicSpline(p_, inv);
}

double GammaRelProfile::value(double p) const {
    if (is_const_) return values_.front();
    return gamma_spline_(p);
}

double GammaRelProfile::derivative(double p) const {
    if (is_const_) return 0.0;
    return gamma_spline_.derivative(p);
}

double GammaRelProfile::inv_integral(double p) const {
    if (is_const_) return (p - p1_) / values_.front();
    return inv_spline_.integral_from_start(p);
}

double GammaRelProfile::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double gamma_rel_ideal(const PhysicalConfig& cfg) {
    if (!(cfg.ell > 0.0)) throw ConfigError("gamma_rel_ideal: lid height must be positive");
    return std::abs(cfg.p1) / cfg.ell;
}

GammaRelProfile gamma_rel_from_vorticity(const PhysicalConfig& cfg, int n_nodes) {
    if (!(cfg.ell > 0.0)) throw ConfigError("gamma_rel_from_vorticity: lid height must be positive");
    if (n_nodes % 2 == 0) ++n_nodes;  // Simpson wants an odd node count
    const double p1 = cfg.p1;
    const double h = (0.0 - p1) / (n_nodes - 1);

    // G(p) = ∫_{p1}^p 2γ(-r) dr, so Γ²(p) = C + G(p) with C = Γ(p1)².
    std::vector<double> twogamma(n_nodes), G(n_nodes, 0.0);
    for (int i = 0; i < n_nodes; ++i) twogamma[i] = 2.0 * cfg.gamma(p1 + i * h);
    for (int i = 2; i < n_nodes; i += 2) {
        G[i] = G[i - 2] + h / 3.0 * (twogamma[i - 2] + 4.0 * twogamma[i - 1] + twogamma[i]);
        G[i - 1] = G[i - 2] +
                   h / 12.0 * (5.0 * twogamma[i - 2] + 8.0 * twogamma[i - 1] - twogamma[i]);
    }
    const double Gmin = *std::min_element(G.begin(), G.end());

    auto lid_integral = [&](double C) {
        std::vector<double> inv(n_nodes);
        for (int i = 0; i < n_nodes; ++i) inv[i] = 1.0 / std::sqrt(C + G[i]);
        return simpson_uniform(inv, h);
    };

    // The lid integral decreases strictly in C; bracket and bisect.
    const double scale = std::max({1.0, std::abs(Gmin), std::abs(G.back())});
    double c_lo = -Gmin + 1e-9 * scale;
    if (lid_integral(c_lo) < cfg.ell)
        throw InfeasibleError(
            "gamma_rel_from_vorticity: no positive constant matches the lid height "
            "(infeasible compatibility)");
    double c_hi = std::max(1.0, -Gmin + scale);
    int guard = 0;
    while (lid_integral(c_hi) > cfg.ell) {
        c_hi *= 2.0;
        if (++guard > 200)
            throw NumericalError("gamma_rel_from_vorticity: bracket growth failed");
    }
    RootOptions opt;
    opt.bracket_tol = 1e-12;
    opt.max_bisect = 200;
    double C = bisect_root([&](double c) { return lid_integral(c) - cfg.ell; }, c_lo, c_hi, opt);

    std::vector<double> gamma_vals(n_nodes);
    for (int i = 0; i < n_nodes; ++i) gamma_vals[i] = std::sqrt(C + G[i]);
    return GammaRelProfile(p1, std::move(gamma_vals));
}

PeriodScaling rescale_to_unit_period(const PhysicalConfig& cfg, PhysicalConfig& out) {
    const double two_pi = 2.0 * std::acos(-1.0);
    const double s = two_pi / cfg.period_L;
    PeriodScaling f{s, std::sqrt(s), std::pow(s, 1.5), 1.0 / std::sqrt(s), s};
    out = cfg;
    out.period_L = two_pi;
    out.p0 = cfg.p0 * f.flux;
    out.p1 = cfg.p1 * f.flux;
    out.ell = cfg.ell * f.length;
    out.depth_d = cfg.depth_d * f.length;
    out.gamma0 = cfg.gamma0 * f.vorticity;
    // γ(-p) as a polynomial in p: coefficient k maps as c_k -> c_k·vorticity/flux^k.
    out.gamma.coeffs = cfg.gamma.coeffs;
    double pw = 1.0;
    for (std::size_t k = 0; k < out.gamma.coeffs.size(); ++k) {
        out.gamma.coeffs[k] = cfg.gamma.coeffs[k] * f.vorticity / pw;
        pw *= f.flux;
    }
    return f;
}

}  // namespace windwave
