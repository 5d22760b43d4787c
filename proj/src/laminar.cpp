#include "windwave/laminar.hpp"

#include <cmath>

namespace windwave {

double LaminarFlow::H(double p) const {
    if (p <= p1) return (p - p0) / lambda;
    return gamma_rel.inv_integral(p) + (p1 - p0) / lambda;
}

double LaminarFlow::Hp(double p) const {
    if (p <= p1) return 1.0 / lambda;
    return 1.0 / gamma_rel.value(p);
}

LaminarFlow laminar_ideal(const PhysicalConfig& cfg, double gamma_rel, double lambda) {
    if (!(lambda > 0.0)) throw InfeasibleError("laminar_ideal: lambda must be positive (no stagnation)");
    if (!(gamma_rel > 0.0)) throw InfeasibleError("laminar_ideal: Gamma_rel must be positive");
    LaminarFlow f;
    f.regime = Regime::LiddedIrrotational;
    f.lambda = lambda;
    f.ell = cfg.ell;
    f.p0 = cfg.p0;
    f.p1 = cfg.p1;
    f.gamma_rel = GammaRelProfile(cfg.p1, gamma_rel, 9);
    f.Q = lidded_Q(cfg, gamma_rel, lambda);
    f.depth = (cfg.p1 - cfg.p0) / lambda;
    f.width = cfg.ell + f.depth;
    return f;
}

LaminarFlow laminar_shear(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                          double lambda) {
    if (!(lambda > 0.0)) throw InfeasibleError("laminar_shear: lambda must be positive (no stagnation)");
    LaminarFlow f;
    f.regime = Regime::LiddedRotational;
    f.lambda = lambda;
    f.ell = cfg.ell;
    f.p0 = cfg.p0;
    f.p1 = cfg.p1;
    f.gamma_rel = gamma_rel;
    f.Q = lidded_Q(cfg, gamma_rel.at_p1(), lambda);
    f.depth = (cfg.p1 - cfg.p0) / lambda;
    f.width = cfg.ell + f.depth;
    return f;
}

LaminarFlow laminar_unbounded(const PhysicalConfig& cfg, double lambda) {
    if (lambda < 0.0) throw InfeasibleError("laminar_unbounded: lambda must be nonnegative");
    LaminarFlow f;
    f.regime = cfg.regime;
    f.lambda = lambda;
    f.p0 = cfg.p0;
    f.p1 = 0.0;
    f.Q = unbounded_Q(cfg, lambda);
    f.depth = cfg.depth_d;
    f.width = 0.0;
    return f;
}

LaminarFlow make_laminar(const PhysicalConfig& cfg, double lambda) {
    switch (cfg.regime) {
        case Regime::LiddedIrrotational:
            return laminar_ideal(cfg, gamma_rel_ideal(cfg), lambda);
        case Regime::LiddedRotational:
            return laminar_shear(cfg, gamma_rel_from_vorticity(cfg), lambda);
        default:
            return laminar_unbounded(cfg, lambda);
    }
}

double lambda_zero(const PhysicalConfig& cfg) {
    return std::cbrt(-g_jump_rho(cfg) * (cfg.p1 - cfg.p0));
}

}  // namespace windwave
