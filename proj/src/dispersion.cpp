#include "windwave/dispersion.hpp"

#include <algorithm>
#include <cmath>

#include "windwave/laminar.hpp"
#include "windwave/parallel.hpp"

namespace windwave {

namespace {

double sinh_safe(double x) { return std::sinh(x); }

double csch2(double x) {
    double s = std::sinh(x);
    if (!std::isfinite(s) || s == 0.0) return 0.0;
    double v = 1.0 / (s * s);
    return std::isfinite(v) ? v : 0.0;
}

// λ ↦ λ² coth(c/λ), strictly increasing on λ > 0 for c > 0.
double water_branch(double lambda, double c) {
    if (lambda <= 0.0) return 0.0;
    return lambda * lambda * coth(c / lambda);
}
double water_branch_d(double lambda, double c) {
    return 2.0 * lambda * coth(c / lambda) + c * csch2(c / lambda);
}

}  // namespace

ConditionEntry check_ilbc(const PhysicalConfig& cfg, double gamma_rel) {
    const double v = -g_jump_rho(cfg) + gamma_rel * gamma_rel * coth(cfg.p1 / gamma_rel);
    return {v, v > 0.0};
}

ConditionEntry check_size_condition_n(const PhysicalConfig& cfg, double gamma_rel, int n) {
    const double v = g_jump_rho(cfg) / n -
                     gamma_rel * gamma_rel * coth(n * cfg.p1 / gamma_rel);
    return {v, v < 0.0};
}

double solve_ideal_lambda_n(const PhysicalConfig& cfg, double gamma_rel, int n) {
    auto size = check_size_condition_n(cfg, gamma_rel, n);
    if (!size.pass)
        throw InfeasibleError("solve_ideal_lambda_n: size condition fails for n=" +
                              std::to_string(n) + " (value " + std::to_string(size.value) + ")");
    const double c = n * (cfg.p1 - cfg.p0);
    const double rhs = -size.value;  // = Γ²coth(n p1/Γ) - g⟦ρ⟧/n > 0
    auto f = [&](double lam) { return water_branch(lam, c) - rhs; };
    auto df = [&](double lam) { return water_branch_d(lam, c); };
    double a = 1e-6, b = 1.0;
    if (!grow_bracket(f, a, b)) throw NumericalError("solve_ideal_lambda_n: no bracket");
    RootOptions opt;
    opt.bracket_tol = 1e-10;
    return bisect_root(f, a, b, opt, df);
}

double IdealEigenfunction::value(double p) const {
    if (p >= p1) return sinh_safe(n * p / gamma_rel);
    return mu * sinh_safe(n * (p - p0) / lambda);
}

double IdealEigenfunction::derivative(double p) const {
    if (p >= p1) return n / gamma_rel * std::cosh(n * p / gamma_rel);
    return mu * n / lambda * std::cosh(n * (p - p0) / lambda);
}

IdealEigenfunction eigenfunction_ideal(const PhysicalConfig& cfg, double gamma_rel, int n,
                                       double lambda) {
    IdealEigenfunction M;
    M.n = n;
    M.gamma_rel = gamma_rel;
    M.lambda = lambda;
    M.p0 = cfg.p0;
    M.p1 = cfg.p1;
    M.mu = sinh_safe(n * cfg.p1 / gamma_rel) / sinh_safe(n * (cfg.p1 - cfg.p0) / lambda);
    return M;
}

double ideal_interface_residual(const PhysicalConfig& cfg, const IdealEigenfunction& M) {
    const double g3 = M.gamma_rel * M.gamma_rel * M.gamma_rel;
    const double l3 = M.lambda * M.lambda * M.lambda;
    const double air = M.n / M.gamma_rel * std::cosh(M.n * cfg.p1 / M.gamma_rel);
    const double water =
        M.mu * M.n / M.lambda * std::cosh(M.n * (cfg.p1 - cfg.p0) / M.lambda);
    return g3 * air - l3 * water - g_jump_rho(cfg) * M.value(cfg.p1);
}

ConditionEntry check_shear_size_condition(const PhysicalConfig& cfg,
                                          const GammaRelProfile& gamma_rel) {
    const auto& p = gamma_rel.grid();
    const auto& gv = gamma_rel.nodal_values();
    std::vector<double> f(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        f[i] = gv[i] * gv[i] * gv[i] + p[i] * p[i] * gv[i];
    const double h = p[1] - p[0];
    double integral;
    if (f.size() % 2 == 1) {
        integral = simpson_uniform(f, h);
    } else {
        std::vector<double> head(f.begin(), f.end() - 1);
        integral = simpson_uniform(head, h) +
                   h / 12.0 * (-f[f.size() - 3] + 8.0 * f[f.size() - 2] + 5.0 * f.back());
    }
    const double v = g_jump_rho(cfg) * cfg.p1 * cfg.p1 + integral;
    return {v, v < 0.0};
}

double nu_of_lambda(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                    double lambda, const NuOptions& opt) {
    Grid1D grid = make_grid(cfg, opt.elements);
    Forms forms = assemble(cfg, gamma_rel, lambda, 1, grid);
    return min_eigenpair(cfg, gamma_rel, lambda, grid, forms).nu;
}

double nu_scan_upper_lambda(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel) {
    const double amin = gamma_rel.min_value();
    const double bound = amin * amin - 0.5 * g_jump_rho(cfg);
    return 1.05 * std::sqrt(std::max(bound, 1e-12));
}

std::vector<double> nu_scan(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                            const std::vector<double>& lambdas, const NuOptions& opt,
                            bool parallel) {
    std::vector<double> nus(lambdas.size());
    parallel_for(
        static_cast<std::ptrdiff_t>(lambdas.size()),
        [&](std::ptrdiff_t i) { nus[i] = nu_of_lambda(cfg, gamma_rel, lambdas[i], opt); },
        parallel ? Exec::Parallel : Exec::Serial);
    return nus;
}

double solve_shear_lambda_star(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                               const NuOptions& opt) {
    const double lam_hi = nu_scan_upper_lambda(cfg, gamma_rel);
    std::vector<double> lambdas(opt.scan_points);
    const double r = std::pow(lam_hi / opt.lambda_min, 1.0 / (opt.scan_points - 1));
    for (int i = 0; i < opt.scan_points; ++i)
        lambdas[i] = opt.lambda_min * std::pow(r, i);
    std::vector<double> nus = nu_scan(cfg, gamma_rel, lambdas, opt);

    // ν is increasing wherever it is negative; find the -1 crossing.
    int lo = -1;
    for (int i = 0; i < opt.scan_points; ++i)
        if (nus[i] < -1.0) lo = i;
    if (lo < 0)
        throw InfeasibleError("solve_shear_lambda_star: local bifurcation condition fails "
                              "(scanned inf nu >= -1)");
    int hi = lo + 1;
    while (hi < opt.scan_points && nus[hi] < -1.0) ++hi;
    double a = lambdas[lo];
    double b = (hi < opt.scan_points) ? lambdas[hi] : lam_hi * 2.0;
    auto f = [&](double lam) { return nu_of_lambda(cfg, gamma_rel, lam, opt) + 1.0; };
    if (f(b) < 0.0) throw NumericalError("solve_shear_lambda_star: upper bracket invalid");
    RootOptions ro;
    ro.bracket_tol = 1e-11;
    ro.newton_steps = 0;
    double lam_star = bisect_root(f, a, b, ro);
    if (std::abs(f(lam_star)) > opt.residual_tol * 10.0)
        throw NumericalError("solve_shear_lambda_star: residual did not converge");

    const double lam0 = lambda_zero(cfg);
    if (std::abs(lam_star - lam0) <= 1e-6 * lam0)
        throw NumericalError("solve_shear_lambda_star: lambda* collides with lambda0");
    return lam_star;
}

double multiplier_m(const PhysicalConfig& cfg, double k, double lambda) {
    return cfg.p0 * cfg.p0 * k_coth_kd(k, 1.0) - lambda * lambda * k + g_jump_rho(cfg);
}

double multiplier_m_tilde(const PhysicalConfig& cfg, double k, double lambda) {
    return multiplier_m(cfg, k, lambda) - cfg.gamma0 * lambda;
}

ConditionEntry check_ulbc(const PhysicalConfig& cfg) {
    const double v = cfg.p0 * cfg.p0 * coth(1.0) + g_jump_rho(cfg);
    return {v, v > 0.0};
}

ConditionEntry check_uslbc(const PhysicalConfig& cfg) {
    const double gm = std::min(cfg.gamma0, 0.0);
    const double v = cfg.p0 * cfg.p0 * coth(1.0) + g_jump_rho(cfg) - 0.25 * gm * gm +
                     0.5 * cfg.gamma0 * gm;
    return {v, v > 0.0};
}

double solve_unbounded_lambda_star(const PhysicalConfig& cfg) {
    if (cfg.regime == Regime::UnboundedIrrotational) {
        auto lbc = check_ulbc(cfg);
        if (!lbc.pass)
            throw InfeasibleError("solve_unbounded_lambda_star: ULBC fails (value " +
                                  std::to_string(lbc.value) + ")");
        return std::sqrt(lbc.value);
    }
    auto lbc = check_uslbc(cfg);
    if (!lbc.pass)
        throw InfeasibleError("solve_unbounded_lambda_star: USLBC fails (value " +
                              std::to_string(lbc.value) + ")");
    // m̃(1;λ) is concave in λ with maximizer at -γ0⁻/2; take the root on the
    // decreasing branch, where transversality 2λ* + γ0 > 0 is automatic.
    const double gm = std::min(cfg.gamma0, 0.0);
    const double peak = -0.5 * gm;
    auto f = [&](double lam) { return multiplier_m_tilde(cfg, 1.0, lam); };
    double a = peak, b = std::max(1.0, peak + 1.0);
    int guard = 0;
    while (f(b) > 0.0) {
        b *= 2.0;
        if (++guard > 100) throw NumericalError("solve_unbounded_lambda_star: no bracket");
    }
    RootOptions opt;
    opt.bracket_tol = 1e-12;
    auto df = [&](double lam) { return -2.0 * lam - cfg.gamma0; };
    double lam_star = bisect_root(f, a, b, opt, df);
    if (!(2.0 * lam_star + cfg.gamma0 > 0.0))
        throw NumericalError("solve_unbounded_lambda_star: transversality 2λ*+γ0 > 0 failed");
    return lam_star;
}

int k_star(const PhysicalConfig& cfg, int k_max) {
    const double d = cfg.depth_d;
    const double shear_extra =
        (cfg.regime == Regime::UnboundedShear)
            ? -0.25 * std::min(cfg.gamma0, 0.0) * std::min(cfg.gamma0, 0.0) +
                  0.5 * cfg.gamma0 * std::min(cfg.gamma0, 0.0)
            : 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const double v =
            cfg.p0 * cfg.p0 * k_coth_kd(double(k), d) / (d * d) + g_jump_rho(cfg) + shear_extra;
        if (v > 0.0) return k;
    }
    throw InfeasibleError("k_star: no feasible mode k <= " + std::to_string(k_max));
}

std::optional<double> critical_layer(const PhysicalConfig& cfg, double lambda) {
    if (cfg.gamma0 < 0.0 && lambda > 0.0) return -lambda / cfg.gamma0;
    return std::nullopt;
}

std::function<double(double)> normalized_null_profile(const PhysicalConfig& cfg,
                                                      const GammaRelProfile& gamma_rel,
                                                      double lambda_star,
                                                      const NuOptions& opt) {
    if (cfg.regime == Regime::LiddedIrrotational) {
        auto M = eigenfunction_ideal(cfg, gamma_rel.at_p1(), 1, lambda_star);
        const double scale = M.value(cfg.p1);
        return [M, scale](double p) { return M.value(p) / scale; };
    }
    Grid1D grid = make_grid(cfg, opt.elements);
    Forms forms = assemble(cfg, gamma_rel, lambda_star, 1, grid);
    EigenResult er = min_eigenpair(cfg, gamma_rel, lambda_star, grid, forms);
    const double scale = er.M(grid.iface);
    if (scale == 0.0) throw NumericalError("normalized_null_profile: eigenvector vanishes at p1");
    // interpolate per region so the derivative kink at p1 is preserved
    std::vector<double> pw(grid.p.begin(), grid.p.begin() + grid.iface + 1);
    std::vector<double> pa(grid.p.begin() + grid.iface, grid.p.end());
    std::vector<double> mw(grid.iface + 1), ma(grid.p.size() - grid.iface);
    for (int i = 0; i <= grid.iface; ++i) mw[i] = er.M(i) / scale;
    for (std::size_t i = 0; i < ma.size(); ++i) ma[i] = er.M(grid.iface + i) / scale;
    auto sw = std::make_shared<CubicSpline>(pw, mw);
    auto sa = std::make_shared<CubicSpline>(pa, ma);
    const double p1 = cfg.p1;
    return [sw, sa, p1](double p) { return p <= p1 ? (*sw)(p) : (*sa)(p); };
}

BifurcationPoint solve_bifurcation(const PhysicalConfig& cfg, int mode, const NuOptions& opt) {
    BifurcationPoint bp;
    bp.regime = cfg.regime;
    bp.mode = mode;

    auto q_slope = [&](double lam, double gam1) {
        // central difference of Q(λ) used for the Q-invertibility check
        const double h = 1e-6 * std::max(1.0, lam);
        return (lidded_Q(cfg, gam1, lam + h) - lidded_Q(cfg, gam1, lam - h)) / (2.0 * h);
    };

    switch (cfg.regime) {
        case Regime::LiddedIrrotational: {
            const double gam = gamma_rel_ideal(cfg);
            bp.conditions["ILBC"] = check_ilbc(cfg, gam);
            bp.conditions["SIZE_n"] = check_size_condition_n(cfg, gam, mode);
            if (!bp.conditions["SIZE_n"].pass)
                throw InfeasibleError("no bifurcation: size condition fails (SIZE_n value " +
                                      std::to_string(bp.conditions["SIZE_n"].value) + ")");
            bp.lambda_star = solve_ideal_lambda_n(cfg, gam, mode);
            auto M = eigenfunction_ideal(cfg, gam, mode, bp.lambda_star);
            bp.mu = M.mu;
            const int ns = 201;
            bp.eig_p.resize(ns);
            bp.eig_M.resize(ns);
            for (int i = 0; i < ns; ++i) {
                bp.eig_p[i] = cfg.p0 + (0.0 - cfg.p0) * i / (ns - 1);
                bp.eig_M[i] = M.value(bp.eig_p[i]);
            }
            const double dq = q_slope(bp.lambda_star, gam);
            bp.conditions["TRANSVERSALITY"] = {dq, std::abs(dq) > 1e-8};
            break;
        }
        case Regime::LiddedRotational: {
            GammaRelProfile gam = gamma_rel_from_vorticity(cfg);
            bp.conditions["SIZE_n"] = check_shear_size_condition(cfg, gam);
            const double lam_hi = nu_scan_upper_lambda(cfg, gam);
            std::vector<double> lambdas(opt.scan_points);
            const double r = std::pow(lam_hi / opt.lambda_min, 1.0 / (opt.scan_points - 1));
            for (int i = 0; i < opt.scan_points; ++i)
                lambdas[i] = opt.lambda_min * std::pow(r, i);
            auto nus = nu_scan(cfg, gam, lambdas, opt);
            const double nu_min = *std::min_element(nus.begin(), nus.end());
            bp.conditions["LBC"] = {nu_min + 1.0, nu_min < -1.0};
            if (!bp.conditions["LBC"].pass)
                throw InfeasibleError("no bifurcation: LBC fails (inf nu + 1 = " +
                                      std::to_string(nu_min + 1.0) + ")");
            bp.lambda_star = solve_shear_lambda_star(cfg, gam, opt);
            Grid1D grid = make_grid(cfg, opt.elements);
            Forms forms = assemble(cfg, gam, bp.lambda_star, 1, grid);
            auto er = min_eigenpair(cfg, gam, bp.lambda_star, grid, forms);
            bp.eig_p = grid.p;
            bp.eig_M.assign(er.M.data(), er.M.data() + er.M.size());
            const double dq = q_slope(bp.lambda_star, gam.at_p1());
            bp.conditions["TRANSVERSALITY"] = {dq, std::abs(dq) > 1e-8};
            break;
        }
        case Regime::UnboundedIrrotational: {
            bp.conditions["ULBC"] = check_ulbc(cfg);
            bp.lambda_star = solve_unbounded_lambda_star(cfg);
            const double t = -2.0 * bp.lambda_star;
            bp.conditions["TRANSVERSALITY"] = {t, std::abs(t) > 1e-10};
            bp.mode = 1;
            break;
        }
        case Regime::UnboundedShear: {
            bp.conditions["USLBC"] = check_uslbc(cfg);
            bp.lambda_star = solve_unbounded_lambda_star(cfg);
            const double t = -(2.0 * bp.lambda_star + cfg.gamma0);
            bp.conditions["TRANSVERSALITY"] = {t, std::abs(t) > 1e-10};
            bp.mode = 1;
            break;
        }
    }
    return bp;
}

}  // namespace windwave
