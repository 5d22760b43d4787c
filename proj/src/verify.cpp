#include "windwave/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "windwave/diagnostics.hpp"
#include "windwave/dispersion.hpp"
#include "windwave/height_pde.hpp"
#include "windwave/io.hpp"
#include "windwave/laminar.hpp"
#include "windwave/strip_transform.hpp"

namespace windwave {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point t0 = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }
};

std::string fmt(double v) { return io::format_double(v); }

PhysicalConfig lidded_ideal_cfg(double p0, double p1, double ell, double gdrho) {
    PhysicalConfig c;
    c.regime = Regime::LiddedIrrotational;
    c.g = 1.0;
    c.rho_air = 1.0;
    c.rho_water = 1.0 - gdrho;  // g⟦ρ⟧ = ρa − ρw = gdrho with g = 1
    c.p0 = p0;
    c.p1 = p1;
    c.ell = ell;
    return c;
}

PhysicalConfig unbounded_cfg(Regime reg, double p0, double gdrho, double gamma0) {
    PhysicalConfig c;
    c.regime = reg;
    c.g = 1.0;
    c.rho_air = 1.0;
    c.rho_water = 1.0 - gdrho;
    c.p0 = p0;
    c.gamma0 = gamma0;
    c.depth_d = 1.0;
    return c;
}

// ---------------------------------------------------------------------------
// C1: closed-form unbounded bifurcation point vs independent bisection.
CriterionResult criterion1() {
    Timer t;
    CriterionResult r{"C1", false, "", 0.0};
    PhysicalConfig cfg = unbounded_cfg(Regime::UnboundedIrrotational, -1.0, -1.0, 0.0);
    const double lam = solve_unbounded_lambda_star(cfg);
    const double expected = std::sqrt(coth(1.0) - 1.0);
    // independent bisection of m(1; ·)
    auto f = [&](double l) { return multiplier_m(cfg, 1.0, l); };
    double a = 0.0, b = 4.0;
    RootOptions ro;
    ro.bracket_tol = 1e-14;
    const double lam_bisect = bisect_root(f, a, b, ro);
    const double d1 = std::abs(lam - expected);
    const double d2 = std::abs(lam - lam_bisect);
    r.pass = d1 <= 1e-10 && d2 <= 1e-10 && t.seconds() < 1.0;
    std::ostringstream os;
    os << "lambda*=" << fmt(lam) << " |closed-form delta|=" << fmt(d1)
       << " |bisection delta|=" << fmt(d2);
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// C2 protocol shared by the pinned configuration and the feasible companion.
CriterionResult dispersion_cross_validation(const char* id, double gdrho) {
    Timer t;
    CriterionResult r{id, false, "", 0.0};
    PhysicalConfig cfg = lidded_ideal_cfg(-2.0, -1.0, 1.0, gdrho);
    const double gam = gamma_rel_ideal(cfg);
    double lam;
    try {
        lam = solve_ideal_lambda_n(cfg, gam, 1);
    } catch (const InfeasibleError& e) {
        r.detail = std::string("no mode-1 crossing exists for this configuration: ") + e.what();
        r.seconds = t.seconds();
        return r;
    }
    GammaRelProfile prof(cfg.p1, gam, 65);
    std::vector<int> elems = {128, 256, 512};
    std::vector<double> nus;
    EigenResult fine;
    for (int e : elems) {
        Grid1D grid = make_grid(cfg, e);
        Forms forms = assemble(cfg, prof, lam, 1, grid);
        EigenResult er = min_eigenpair(cfg, prof, lam, grid, forms);
        nus.push_back(er.nu);
        if (e == elems.back()) fine = er;
    }
    const double ratio = (nus[0] - nus[1]) / (nus[1] - nus[2]);
    // eigenvector match against the closed-form profile at 512 elements/region
    Grid1D grid = make_grid(cfg, elems.back());
    auto M = eigenfunction_ideal(cfg, gam, 1, lam);
    double num = 0.0, den = 0.0, cross = 0.0;
    Eigen::VectorXd Ma(grid.p.size());
    for (std::size_t i = 0; i < grid.p.size(); ++i) Ma(i) = M.value(grid.p[i]);
    cross = fine.M.dot(Ma);
    den = Ma.squaredNorm();
    const Eigen::VectorXd diff = fine.M - (cross / den) * Ma;
    num = diff.norm() / (std::abs(cross / den) * Ma.norm());
    const bool ok_ratio = ratio >= 3.5 && ratio <= 4.5;
    const bool ok_nu = std::abs(nus.back() + 1.0) <= 5e-4;
    const bool ok_vec = num <= 1e-4;
    r.pass = ok_ratio && ok_nu && ok_vec && t.seconds() < 10.0;
    std::ostringstream os;
    os << "lambda1*=" << fmt(lam) << " nu(512)=" << fmt(nus.back())
       << " richardson_ratio=" << fmt(ratio) << " eigvec_rel_l2=" << fmt(num);
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// C3: laminar exactness in all four regimes.
CriterionResult criterion3() {
    Timer t;
    CriterionResult r{"C3", false, "", 0.0};
    double worst_lidded = 0.0, worst_unbounded = 0.0, worst_profile_gap = 0.0;

    {  // lidded irrotational: the sampled analytic laminar is discretely exact
        PhysicalConfig cfg = lidded_ideal_cfg(-2.0, -1.0, 1.0, -2.0);
        GammaRelProfile prof(cfg.p1, gamma_rel_ideal(cfg), 65);
        HeightProblem prob(cfg, prof, {12, 16, 16});
        for (int i = 0; i < 10; ++i) {
            const double lam = 0.4 * std::pow(2.5 / 0.4, i / 9.0);  // 0.4 .. 2.5
            LaminarFlow flow = laminar_ideal(cfg, prof.at_p1(), lam);
            HeightField h = prob.laminar_field(flow);
            worst_lidded = std::max(worst_lidded, prob.residual(h).max_norm());
        }
    }
    {  // lidded rotational: anchored at the discrete laminar column solve
        PhysicalConfig cfg;
        cfg.regime = Regime::LiddedRotational;
        cfg.g = 1.0;
        cfg.rho_air = 1.0;
        cfg.rho_water = 3.0;
        cfg.p0 = -2.0;
        cfg.p1 = -1.0;
        cfg.gamma.coeffs = {1.0};
        cfg.ell = std::sqrt(3.0) - 1.0;
        GammaRelProfile prof = gamma_rel_from_vorticity(cfg);
        HeightProblem prob(cfg, prof, {12, 16, 16});
        for (int i = 0; i < 10; ++i) {
            const double lam = 0.4 * std::pow(2.5 / 0.4, i / 9.0);
            HeightField h = prob.discrete_laminar(lam);
            worst_lidded = std::max(worst_lidded, prob.residual(h).max_norm());
            LaminarFlow flow = laminar_shear(cfg, prof, lam);
            HeightField ana = prob.laminar_field(flow);
            worst_profile_gap = std::max(
                worst_profile_gap, (h.ha - ana.ha).cwiseAbs().maxCoeff());
        }
    }
    for (Regime reg : {Regime::UnboundedIrrotational, Regime::UnboundedShear}) {
        PhysicalConfig cfg = unbounded_cfg(reg, -1.0, -1.0,
                                           reg == Regime::UnboundedShear ? -0.5 : 0.0);
        StripGrid grid = StripGrid::make(24, 64, 32, 8.0);
        SurfaceShape flat = SurfaceShape::zero();
        for (int i = 0; i < 10; ++i) {
            const double lam = 0.2 * i;
            const double Q = unbounded_Q(cfg, lam);
            Eigen::VectorXd G = evaluate_G(cfg, lam, flat, grid, Q);
            worst_unbounded = std::max(worst_unbounded, G.cwiseAbs().maxCoeff());
        }
    }
    r.pass = worst_lidded <= 1e-12 && worst_unbounded <= 1e-10;
    std::ostringstream os;
    os << "max lidded residual=" << fmt(worst_lidded)
       << " max unbounded G residual=" << fmt(worst_unbounded)
       << " analytic-vs-discrete profile gap=" << fmt(worst_profile_gap);
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// C4: λ* stays away from λ0 and Q is locally invertible there.
CriterionResult criterion4(std::uint64_t seed) {
    Timer t;
    CriterionResult r{"C4", false, "", 0.0};
    std::mt19937_64 rng(seed + 4);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double min_sep = 1e300, min_slope = 1e300;
    int solved = 0;
    for (int c = 0; c < 20; ++c) {
        const double p0 = -1.2 - 1.8 * U(rng);
        const double p1 = p0 * (0.3 + 0.4 * U(rng));
        const double ell = 0.5 + 1.5 * U(rng);
        const double gam = std::abs(p1) / ell;
        // choose the stratification strong enough for a mode-1 crossing
        const double margin = 0.2 + 1.8 * U(rng);
        const double gdrho = -(gam * gam * coth(std::abs(p1) / gam) + margin);
        PhysicalConfig cfg = lidded_ideal_cfg(p0, p1, ell, gdrho);
        const double lam = solve_ideal_lambda_n(cfg, gam, 1);
        ++solved;
        const double lam0 = lambda_zero(cfg);
        min_sep = std::min(min_sep, std::abs(lam - lam0) / lam0);
        const double h = 1e-6 * std::max(1.0, lam);
        const double dq =
            (lidded_Q(cfg, gam, lam + h) - lidded_Q(cfg, gam, lam - h)) / (2.0 * h);
        min_slope = std::min(min_slope, std::abs(dq));
    }
    r.pass = solved == 20 && min_sep > 1e-6 && min_slope > 1e-8;
    std::ostringstream os;
    os << "configs=" << solved << " min |lambda*-lambda0|/lambda0=" << fmt(min_sep)
       << " min |dQ/dlambda(lambda*)|=" << fmt(min_slope);
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// C5: monotonicity of ν on the negative branch for rotational configs.
CriterionResult criterion5(std::uint64_t seed, bool parallel) {
    Timer t;
    CriterionResult r{"C5", false, "", 0.0};
    std::mt19937_64 rng(seed + 5);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int violations = 0, configs = 0, negatives = 0;
    while (configs < 5) {
        PhysicalConfig cfg;
        cfg.regime = Regime::LiddedRotational;
        cfg.g = 1.0;
        cfg.rho_air = 1.0;
        cfg.p0 = -1.2 - 1.8 * U(rng);
        cfg.p1 = cfg.p0 * (0.4 + 0.2 * U(rng));
        cfg.ell = 0.4 + 0.8 * U(rng);
        cfg.gamma.coeffs = {-1.0 + 2.0 * U(rng), -0.5 + U(rng)};
        cfg.rho_water = cfg.rho_air + 0.5 + 2.5 * U(rng);
        GammaRelProfile prof;
        try {
            prof = gamma_rel_from_vorticity(cfg, 513);
        } catch (const InfeasibleError&) {
            continue;  // resample: compatibility has no solution
        }
        ++configs;
        NuOptions opt;
        opt.elements = 128;
        const double hi = nu_scan_upper_lambda(cfg, prof);
        std::vector<double> lambdas(32);
        const double lo = 1e-2;
        for (int i = 0; i < 32; ++i)
            lambdas[i] = lo * std::pow(hi / lo, i / 31.0);
        std::vector<double> nus = nu_scan(cfg, prof, lambdas, opt, parallel);
        for (int i = 0; i + 1 < 32; ++i) {
            if (nus[i] < 0.0) {
                ++negatives;
                if (!(nus[i + 1] > nus[i])) ++violations;
            }
        }
    }
    r.pass = violations == 0 && negatives > 0;
    std::ostringstream os;
    os << "configs=5 negative-branch pairs=" << negatives << " violations=" << violations;
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// C6 + C7 share one continuation run.
struct BranchRun {
    PhysicalConfig cfg;
    GammaRelProfile prof;
    double lambda_star = 0.0;
    BranchResult branch;
    std::vector<const BranchPoint*> targets;  // s = 1e-3, 2e-3, 4e-3
};

BranchRun run_branch() {
    BranchRun br;
    br.cfg = lidded_ideal_cfg(-2.0, -1.0, 1.0, -2.0);
    const double gam = gamma_rel_ideal(br.cfg);
    br.prof = GammaRelProfile(br.cfg.p1, gam, 65);
    br.lambda_star = solve_ideal_lambda_n(br.cfg, gam, 1);
    HeightProblem prob(br.cfg, br.prof, {16, 48, 48});
    auto mhat = normalized_null_profile(br.cfg, br.prof, br.lambda_star);
    NewtonOptions nopt;
    nopt.tol = 1e-10;
    br.branch = prob.continue_branch(br.lambda_star, 4e-3, 4, mhat, nopt);
    for (double starget : {1e-3, 2e-3, 4e-3}) {
        for (const auto& bp : br.branch.points)
            if (std::abs(bp.s - starget) < 1e-15) br.targets.push_back(&bp);
    }
    return br;
}

CriterionResult criterion6(const BranchRun& br, double& out_seconds) {
    Timer t;
    CriterionResult r{"C6", false, "", 0.0};
    HeightProblem prob(br.cfg, br.prof, {16, 48, 48});
    bool converged = !br.branch.abort_reason && br.targets.size() == 3;
    int max_iters = 0;
    double max_resid = 0.0;
    std::vector<double> ratios;
    if (converged) {
        for (const BranchPoint* bp : br.targets) {
            max_iters = std::max(max_iters, bp->newton_iters);
            max_resid = std::max(max_resid, bp->residual_norm);
            Eigen::VectorXd eta = prob.eta_of(bp->field);
            double dev = 0.0;
            for (int i = 0; i <= prob.nq(); ++i)
                dev = std::max(dev,
                               std::abs(eta(i) - bp->s * std::cos(prob.qbasis().q(i))));
            ratios.push_back(dev / (bp->s * bp->s));
        }
    }
    bool stable = false;
    if (ratios.size() == 3) {
        const double mean = (ratios[0] + ratios[1] + ratios[2]) / 3.0;
        stable = true;
        for (double v : ratios) stable = stable && std::abs(v / mean - 1.0) <= 0.15;
    }
    r.pass = converged && max_iters <= 8 && max_resid <= 1e-10 && stable &&
             t.seconds() < 60.0;
    std::ostringstream os;
    os << "converged=" << (converged ? "yes" : "no") << " max_iters=" << max_iters
       << " max_residual=" << fmt(max_resid);
    if (ratios.size() == 3)
        os << " eta_dev/s^2={" << fmt(ratios[0]) << "," << fmt(ratios[1]) << ","
           << fmt(ratios[2]) << "}";
    if (br.branch.abort_reason) os << " abort: " << *br.branch.abort_reason;
    r.detail = os.str();
    r.seconds = out_seconds = t.seconds();
    return r;
}

CriterionResult criterion7(const BranchRun& br) {
    Timer t;
    CriterionResult r{"C7", false, "", 0.0};
    HeightProblem prob(br.cfg, br.prof, {16, 48, 48});
    double worst_fe = 0.0, worst_spread = 0.0, worst_drag = 0.0, worst_pjump = 0.0,
           worst_eta_mean = 0.0;
    bool have = false;
    for (const BranchPoint* bp : br.targets) {
        have = true;
        auto levels = default_levels(prob, bp->field);
        auto row = diagnose_branch_point(prob, *bp, levels);
        auto fes = momentum_flux_FE(prob, bp->field, levels);
        for (double v : fes) worst_fe = std::max(worst_fe, std::abs(v));
        worst_spread = std::max(worst_spread, row.fe_spread);
        worst_drag = std::max(worst_drag, std::abs(row.drag));
        worst_pjump = std::max(worst_pjump, row.pressure_jump);
        worst_eta_mean = std::max(worst_eta_mean, std::abs(row.eta_mean));
    }
    r.pass = have && worst_fe <= 1e-8 && worst_spread <= 1e-8 && worst_drag <= 1e-8 &&
             worst_pjump <= 1e-8 && worst_eta_mean <= 1e-12;
    std::ostringstream os;
    os << "max|F_E|=" << fmt(worst_fe) << " spread=" << fmt(worst_spread)
       << " |drag|=" << fmt(worst_drag) << " |[P]|=" << fmt(worst_pjump)
       << " |mean eta|=" << fmt(worst_eta_mean);
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// C8: multiplier comparison of the fd-linearized interface operator.
struct MultiplierStudy {
    double worst_tabulated = 0.0;       // against 2·m (the tabulated dispersion symbol)
    double worst_operator = 0.0;        // vs 2·m_op, scaled by max(1,|m_op|), fine grid
    double worst_operator_coarse = 0.0;  // same on the half-resolution grid
    double worst_shear_shift = 0.0;     // fd_shear − fd_ideal vs −2γ0λ
    double gamma0_reduction = 0.0;      // γ0 = 0 shear vs ideal (exact reduction)
};

MultiplierStudy multiplier_study() {
    MultiplierStudy st;
    PhysicalConfig ideal = unbounded_cfg(Regime::UnboundedIrrotational, -1.0, -1.0, 0.0);
    PhysicalConfig shear = unbounded_cfg(Regime::UnboundedShear, -1.0, -1.0, -0.5);
    PhysicalConfig shear0 = unbounded_cfg(Regime::UnboundedShear, -1.0, -1.0, 0.0);
    StripGrid coarse = StripGrid::make(24, 128, 64, 8.0);
    StripGrid fine = StripGrid::make(24, 256, 128, 8.0);
    const std::vector<double> lams = {0.3, 0.6, 0.9};
    for (int k = 1; k <= 3; ++k) {
        SurfaceShape zeta = SurfaceShape::single_mode(k, 1.0, 4);
        for (double lam : lams) {
            auto coef = [&](const PhysicalConfig& c, const StripGrid& g) {
                Eigen::VectorXd fd = linearize_G_fd(c, lam, zeta, g);
                return g.xb.mode_coeff(fd, k);
            };
            const double fd_ideal = coef(ideal, fine);
            const double fd_shear = coef(shear, fine);
            const double fd_shear0 = coef(shear0, fine);
            const double fd_ideal_coarse = coef(ideal, coarse);
            const double fd_shear_coarse = coef(shear, coarse);

            st.worst_tabulated = std::max(
                st.worst_tabulated, std::abs(fd_ideal - 2.0 * multiplier_m(ideal, k, lam)));
            st.worst_tabulated = std::max(
                st.worst_tabulated,
                std::abs(fd_shear - 2.0 * multiplier_m_tilde(shear, k, lam)));
            auto rel = [&](double fd, const PhysicalConfig& c) {
                const double m = operator_multiplier(c, k, lam);
                return std::abs(fd - 2.0 * m) / std::max(1.0, std::abs(m));
            };
            st.worst_operator = std::max(st.worst_operator, rel(fd_ideal, ideal));
            st.worst_operator = std::max(st.worst_operator, rel(fd_shear, shear));
            st.worst_operator_coarse =
                std::max(st.worst_operator_coarse, rel(fd_ideal_coarse, ideal));
            st.worst_operator_coarse =
                std::max(st.worst_operator_coarse, rel(fd_shear_coarse, shear));
            st.worst_shear_shift = std::max(
                st.worst_shear_shift,
                std::abs((fd_shear - fd_ideal) - (-2.0 * shear.gamma0 * lam)));
            st.gamma0_reduction = std::max(st.gamma0_reduction,
                                           std::abs(fd_shear0 - fd_ideal));
        }
    }
    return st;
}

CriterionResult criterion8(const MultiplierStudy& st) {
    Timer t;
    CriterionResult r{"C8", false, "", 0.0};
    r.pass = st.worst_tabulated <= 1e-4 && st.worst_shear_shift <= 1e-4 &&
             st.gamma0_reduction == 0.0;
    std::ostringstream os;
    os << "max |fd - 2m|=" << fmt(st.worst_tabulated)
       << " shear shift err=" << fmt(st.worst_shear_shift)
       << " gamma0=0 reduction err=" << fmt(st.gamma0_reduction);
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

CriterionResult criterion8b(const MultiplierStudy& st) {
    Timer t;
    CriterionResult r{"C8b", false, "", 0.0};
    r.pass = st.worst_operator <= 1e-4 &&
             st.worst_operator <= 0.5 * st.worst_operator_coarse &&
             st.worst_shear_shift <= 1e-4 && st.gamma0_reduction == 0.0;
    std::ostringstream os;
    os << "scaled |fd - 2m_op|: fine=" << fmt(st.worst_operator)
       << " coarse=" << fmt(st.worst_operator_coarse)
       << " shear shift err=" << fmt(st.worst_shear_shift)
       << " gamma0=0 reduction err=" << fmt(st.gamma0_reduction);
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// C9: transversality and the smallest feasible mode.
CriterionResult criterion9(std::uint64_t seed) {
    Timer t;
    CriterionResult r{"C9", false, "", 0.0};
    std::mt19937_64 rng(seed + 9);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int accepted = 0;
    bool transversal = true, kstar_ok = true;
    int guard = 0;
    while (accepted < 10 && ++guard < 2000) {
        PhysicalConfig cfg = unbounded_cfg(Regime::UnboundedShear, -0.8 - 1.2 * U(rng),
                                           -0.2 - 2.0 * U(rng), -1.5 + 3.0 * U(rng));
        if (!check_uslbc(cfg).pass) continue;
        ++accepted;
        const double lam = solve_unbounded_lambda_star(cfg);
        transversal = transversal && (2.0 * lam + cfg.gamma0 > 0.0);

        // brute-force scan of the mode inequality, on a varied depth
        PhysicalConfig kcfg = cfg;
        kcfg.depth_d = 0.5 + 2.0 * U(rng);
        const double extra = -0.25 * std::min(kcfg.gamma0, 0.0) * std::min(kcfg.gamma0, 0.0) +
                             0.5 * kcfg.gamma0 * std::min(kcfg.gamma0, 0.0);
        int brute = -1;
        for (int k = 1; k <= 64; ++k) {
            const double v = kcfg.p0 * kcfg.p0 * k * coth(k * kcfg.depth_d) /
                                 (kcfg.depth_d * kcfg.depth_d) +
                             g_jump_rho(kcfg) + extra;
            if (v > 0.0) {
                brute = k;
                break;
            }
        }
        int got = -1;
        try {
            got = k_star(kcfg, 64);
        } catch (const InfeasibleError&) {
            got = -1;
        }
        kstar_ok = kstar_ok && (got == brute);
    }
    r.pass = accepted == 10 && transversal && kstar_ok;
    std::ostringstream os;
    os << "configs=" << accepted << " transversality=" << (transversal ? "all" : "VIOLATED")
       << " kstar agreement=" << (kstar_ok ? "all" : "MISMATCH");
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, bool parallel) {
    std::vector<CriterionResult> out;
    out.push_back(criterion1());
    out.push_back(dispersion_cross_validation("C2", -1.0));
    out.push_back(dispersion_cross_validation("C2b", -2.0));
    out.push_back(criterion3());
    out.push_back(criterion4(seed));
    out.push_back(criterion5(seed, parallel));
    {
        Timer tb;
        BranchRun br = run_branch();
        const double branch_secs = tb.seconds();
        double secs = 0.0;
        out.push_back(criterion6(br, secs));
        out.back().seconds += branch_secs;
        out.back().pass = out.back().pass && out.back().seconds < 60.0;
        out.push_back(criterion7(br));
    }
    {
        Timer tm;
        MultiplierStudy st = multiplier_study();
        const double mult_secs = tm.seconds();
        out.push_back(criterion8(st));
        out.back().seconds += mult_secs;
        out.push_back(criterion8b(st));
        out.back().seconds += mult_secs;
        out.back().pass = out.back().pass && out.back().seconds < 60.0;
    }
    out.push_back(criterion9(seed));
    return out;
}

std::string format_report(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << r.id << (r.pass ? " PASS " : " FAIL ") << "[" << fmt(r.seconds) << "s] "
           << r.detail << "\n";
    }
    return os.str();
}

}  // namespace windwave
