#include "windwave/height_pde.hpp"

#include <Eigen/LU>
#include <cmath>

#include "windwave/numerics.hpp"

namespace windwave {

double ResidualBlocks::max_norm() const {
    double m = 0.0;
    m = std::max(m, interior_air.size() ? interior_air.cwiseAbs().maxCoeff() : 0.0);
    m = std::max(m, interior_water.size() ? interior_water.cwiseAbs().maxCoeff() : 0.0);
    m = std::max(m, interface.size() ? interface.cwiseAbs().maxCoeff() : 0.0);
    m = std::max(m, top.size() ? top.cwiseAbs().maxCoeff() : 0.0);
    m = std::max(m, bottom.size() ? bottom.cwiseAbs().maxCoeff() : 0.0);
    m = std::max(m, continuity.size() ? continuity.cwiseAbs().maxCoeff() : 0.0);
    return m;
}

HeightProblem::HeightProblem(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                             HeightGridOptions opt)
    : cfg_(cfg), gamma_rel_(gamma_rel), opt_(opt), qb_(opt.nq) {
    if (!cfg.lidded()) throw ConfigError("HeightProblem: lidded regimes only");
    if (opt.np_air < 6 || opt.np_water < 6)
        throw ConfigError("HeightProblem: need at least 6 p-intervals per region");
    pa_.resize(opt.np_air + 1);
    for (int j = 0; j <= opt.np_air; ++j)
        pa_(j) = cfg.p1 + (0.0 - cfg.p1) * double(j) / opt.np_air;
    pw_.resize(opt.np_water + 1);
    for (int j = 0; j <= opt.np_water; ++j)
        pw_(j) = cfg.p0 + (cfg.p1 - cfg.p0) * double(j) / opt.np_water;
    D1a_ = fd_matrix(pa_, 1);
    D2a_ = fd_matrix(pa_, 2);
    D1w_ = fd_matrix(pw_, 1);
    D2w_ = fd_matrix(pw_, 2);
    Na_ = (opt.nq + 1) * (opt.np_air + 1);
    Nw_ = (opt.nq + 1) * (opt.np_water + 1);
}

namespace {

// remove the endpoint-interpolating linear part before differencing in p
Eigen::MatrixXd deriv_p(const Eigen::MatrixXd& h, const Eigen::MatrixXd& D,
                        const Eigen::VectorXd& nodes, int order) {
    const int np = static_cast<int>(nodes.size()) - 1;
    const double len = nodes(np) - nodes(0);
    Eigen::VectorXd t = (nodes.array() - nodes(0)) / len;
    Eigen::VectorXd slope = (h.col(np) - h.col(0)) / len;
    Eigen::MatrixXd lin = h.col(0) * (1.0 - t.array()).matrix().transpose() +
                          h.col(np) * t.transpose();
    Eigen::MatrixXd d = (h - lin) * D.transpose();
    if (order == 1) d += slope * Eigen::RowVectorXd::Ones(np + 1);
    return d;
}

// remove the per-column mean before differencing in q
Eigen::MatrixXd deriv_q(const Eigen::MatrixXd& h, const Eigen::MatrixXd& D,
                        const Eigen::VectorXd& w) {
    Eigen::RowVectorXd mean = w.transpose() * h;
    Eigen::MatrixXd hd = h - Eigen::VectorXd::Ones(h.rows()) * mean;
    return D * hd;
}

}  // namespace

Eigen::MatrixXd HeightProblem::dq(const Eigen::MatrixXd& h) const {
    return deriv_q(h, qb_.D1, qb_.w);
}
Eigen::MatrixXd HeightProblem::dqq(const Eigen::MatrixXd& h) const {
    return deriv_q(h, qb_.D2, qb_.w);
}
Eigen::MatrixXd HeightProblem::dp_air(const Eigen::MatrixXd& h) const {
    return deriv_p(h, D1a_, pa_, 1);
}
Eigen::MatrixXd HeightProblem::dpp_air(const Eigen::MatrixXd& h) const {
    return deriv_p(h, D2a_, pa_, 2);
}
Eigen::MatrixXd HeightProblem::dp_water(const Eigen::MatrixXd& h) const {
    return deriv_p(h, D1w_, pw_, 1);
}
Eigen::MatrixXd HeightProblem::dpp_water(const Eigen::MatrixXd& h) const {
    return deriv_p(h, D2w_, pw_, 2);
}

double HeightProblem::depth_of(const HeightField& h) const {
    return qb_.mean(h.hw.col(opt_.np_water));
}

Eigen::VectorXd HeightProblem::eta_of(const HeightField& h) const {
    return h.hw.col(opt_.np_water).array() - depth_of(h);
}

double HeightProblem::amplitude_of(const HeightField& h) const {
    return qb_.mode_coeff(h.hw.col(opt_.np_water), 1);
}

void HeightProblem::check_stagnation(const HeightField& h) const {
    Eigen::MatrixXd hpa = dp_air(h.ha), hpw = dp_water(h.hw);
    for (int i = 0; i <= opt_.nq; ++i) {
        for (int j = 0; j <= opt_.np_air; ++j)
            if (!(hpa(i, j) > 0.0))
                throw NumericalError("stagnation: h_p <= 0 at air node (q=" +
                                     std::to_string(i) + ", p=" + std::to_string(pa_(j)) + ")");
        for (int j = 0; j <= opt_.np_water; ++j)
            if (!(hpw(i, j) > 0.0))
                throw NumericalError("stagnation: h_p <= 0 at water node (q=" +
                                     std::to_string(i) + ", p=" + std::to_string(pw_(j)) + ")");
    }
}

ResidualBlocks HeightProblem::residual(const HeightField& h) const {
    check_stagnation(h);
    const int nq = opt_.nq, na = opt_.np_air, nw = opt_.np_water;
    Eigen::MatrixXd hqa = dq(h.ha), hqqa = dqq(h.ha);
    Eigen::MatrixXd hpa = dp_air(h.ha), hppa = dpp_air(h.ha);
    Eigen::MatrixXd hpqa = dq(hpa);
    Eigen::MatrixXd hqw = dq(h.hw), hqqw = dqq(h.hw);
    Eigen::MatrixXd hpw = dp_water(h.hw), hppw = dpp_water(h.hw);
    Eigen::MatrixXd hpqw = dq(hpw);

    ResidualBlocks r;
    r.interior_air.resize(nq + 1, na - 1);
    r.interior_water.resize(nq + 1, nw - 1);
    r.interface.resize(nq + 1);
    r.top.resize(nq + 1);
    r.bottom.resize(nq + 1);
    r.continuity.resize(nq + 1);

    for (int i = 0; i <= nq; ++i) {
        for (int j = 1; j < na; ++j) {
            const double g = vort(pa_(j));
            r.interior_air(i, j - 1) =
                (1.0 + hqa(i, j) * hqa(i, j)) * hppa(i, j) +
                hqqa(i, j) * hpa(i, j) * hpa(i, j) -
                2.0 * hqa(i, j) * hpa(i, j) * hpqa(i, j) +
                g * hpa(i, j) * hpa(i, j) * hpa(i, j);
        }
        for (int j = 1; j < nw; ++j) {
            r.interior_water(i, j - 1) =
                (1.0 + hqw(i, j) * hqw(i, j)) * hppw(i, j) +
                hqqw(i, j) * hpw(i, j) * hpw(i, j) -
                2.0 * hqw(i, j) * hpw(i, j) * hpqw(i, j);
        }
        const double ja = (1.0 + hqa(i, 0) * hqa(i, 0)) / (hpa(i, 0) * hpa(i, 0));
        const double jw = (1.0 + hqw(i, nw) * hqw(i, nw)) / (hpw(i, nw) * hpw(i, nw));
        r.interface(i) = ja - jw + 2.0 * g_jump_rho(cfg_) * h.hw(i, nw) - h.Q;
        r.bottom(i) = h.hw(i, 0);
        r.continuity(i) = h.ha(i, 0) - h.hw(i, nw);
    }
    const double d = depth_of(h);
    for (int i = 0; i <= nq; ++i) r.top(i) = h.ha(i, na) - cfg_.ell - d;
    return r;
}

ResidualBlocks HeightProblem::linearized_apply(const HeightField& h,
                                               const Eigen::MatrixXd& phi_a,
                                               const Eigen::MatrixXd& phi_w) const {
    const int nq = opt_.nq, na = opt_.np_air, nw = opt_.np_water;
    Eigen::MatrixXd hqa = dq(h.ha), hqqa = dqq(h.ha);
    Eigen::MatrixXd hpa = dp_air(h.ha), hppa = dpp_air(h.ha);
    Eigen::MatrixXd hpqa = dq(hpa);
    Eigen::MatrixXd hqw = dq(h.hw), hqqw = dqq(h.hw);
    Eigen::MatrixXd hpw = dp_water(h.hw), hppw = dpp_water(h.hw);
    Eigen::MatrixXd hpqw = dq(hpw);

    Eigen::MatrixXd fqa = dq(phi_a), fqqa = dqq(phi_a);
    Eigen::MatrixXd fpa = dp_air(phi_a), fppa = dpp_air(phi_a);
    Eigen::MatrixXd fpqa = dq(fpa);
    Eigen::MatrixXd fqw = dq(phi_w), fqqw = dqq(phi_w);
    Eigen::MatrixXd fpw = dp_water(phi_w), fppw = dpp_water(phi_w);
    Eigen::MatrixXd fpqw = dq(fpw);

    ResidualBlocks r;
    r.interior_air.resize(nq + 1, na - 1);
    r.interior_water.resize(nq + 1, nw - 1);
    r.interface.resize(nq + 1);
    r.top.resize(nq + 1);
    r.bottom.resize(nq + 1);
    r.continuity.resize(nq + 1);

    auto lin_interior = [](double hq, double hp, double hqq, double hpp, double hpq,
                           double fq, double fp, double fqq, double fpp, double fpq,
                           double g) {
        return 2.0 * hq * fq * hpp + (1.0 + hq * hq) * fpp + fqq * hp * hp +
               2.0 * hqq * hp * fp - 2.0 * (fq * hp * hpq + hq * fp * hpq + hq * hp * fpq) +
               3.0 * g * hp * hp * fp;
    };

    for (int i = 0; i <= nq; ++i) {
        for (int j = 1; j < na; ++j)
            r.interior_air(i, j - 1) = lin_interior(
                hqa(i, j), hpa(i, j), hqqa(i, j), hppa(i, j), hpqa(i, j), fqa(i, j),
                fpa(i, j), fqqa(i, j), fppa(i, j), fpqa(i, j), vort(pa_(j)));
        for (int j = 1; j < nw; ++j)
            r.interior_water(i, j - 1) = lin_interior(
                hqw(i, j), hpw(i, j), hqqw(i, j), hppw(i, j), hpqw(i, j), fqw(i, j),
                fpw(i, j), fqqw(i, j), fppw(i, j), fpqw(i, j), 0.0);
        const double da = 2.0 * hqa(i, 0) * fqa(i, 0) / (hpa(i, 0) * hpa(i, 0)) -
                          2.0 * (1.0 + hqa(i, 0) * hqa(i, 0)) * fpa(i, 0) /
                              (hpa(i, 0) * hpa(i, 0) * hpa(i, 0));
        const double dw = 2.0 * hqw(i, nw) * fqw(i, nw) / (hpw(i, nw) * hpw(i, nw)) -
                          2.0 * (1.0 + hqw(i, nw) * hqw(i, nw)) * fpw(i, nw) /
                              (hpw(i, nw) * hpw(i, nw) * hpw(i, nw));
        r.interface(i) = da - dw + 2.0 * g_jump_rho(cfg_) * phi_w(i, nw);
        r.bottom(i) = phi_w(i, 0);
        r.continuity(i) = phi_a(i, 0) - phi_w(i, nw);
    }
    const double dphi = qb_.mean(phi_w.col(nw));
    for (int i = 0; i <= nq; ++i) r.top(i) = phi_a(i, na) - dphi;
    return r;
}

Eigen::VectorXd HeightProblem::assemble_residual(const HeightField& h, double s) const {
    ResidualBlocks r = residual(h);
    const int nq = opt_.nq, na = opt_.np_air, nw = opt_.np_water;
    Eigen::VectorXd F(n_unknowns());
    for (int i = 0; i <= nq; ++i) {
        F(idx_a(i, 0)) = r.interface(i);
        for (int j = 1; j < na; ++j) F(idx_a(i, j)) = r.interior_air(i, j - 1);
        F(idx_a(i, na)) = r.top(i);
        F(idx_w(i, 0)) = r.bottom(i);
        for (int j = 1; j < nw; ++j) F(idx_w(i, j)) = r.interior_water(i, j - 1);
        F(idx_w(i, nw)) = r.continuity(i);
    }
    F(idx_Q()) = amplitude_of(h) - s;
    return F;
}

Eigen::MatrixXd HeightProblem::assemble_jacobian(const HeightField& h, Exec exec) const {
    const int nq = opt_.nq, na = opt_.np_air, nw = opt_.np_water;
    const int N = n_unknowns();
    Eigen::MatrixXd hqa = dq(h.ha), hqqa = dqq(h.ha);
    Eigen::MatrixXd hpa = dp_air(h.ha), hppa = dpp_air(h.ha);
    Eigen::MatrixXd hpqa = dq(hpa);
    Eigen::MatrixXd hqw = dq(h.hw), hqqw = dqq(h.hw);
    Eigen::MatrixXd hpw = dp_water(h.hw), hppw = dpp_water(h.hw);
    Eigen::MatrixXd hpqw = dq(hpw);

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(N, N);

    // One parallel item per q-node; each fills a disjoint set of rows.
    parallel_for(
        nq + 1,
        [&](std::ptrdiff_t ii) {
            const int i = static_cast<int>(ii);
            // --- interior air rows ---
            for (int j = 1; j < na; ++j) {
                const int row = idx_a(i, j);
                const double hq = hqa(i, j), hp = hpa(i, j), hqq = hqqa(i, j),
                             hpp = hppa(i, j), hpq = hpqa(i, j);
                const double g = vort(pa_(j));
                const double cq1 = 2.0 * hq * hpp - 2.0 * hp * hpq;  // on D1q
                const double cq2 = hp * hp;                          // on D2q
                const double cp1 = 2.0 * hqq * hp - 2.0 * hq * hpq + 3.0 * g * hp * hp;
                const double cp2 = 1.0 + hq * hq;
                const double cx = -2.0 * hq * hp;  // on D1q ⊗ D1p
                for (int ip = 0; ip <= nq; ++ip)
                    J(row, idx_a(ip, j)) += cq1 * qb_.D1(i, ip) + cq2 * qb_.D2(i, ip);
                for (int jp = 0; jp <= na; ++jp)
                    J(row, idx_a(i, jp)) += cp1 * D1a_(j, jp) + cp2 * D2a_(j, jp);
                for (int ip = 0; ip <= nq; ++ip) {
                    const double dq1 = qb_.D1(i, ip);
                    if (dq1 == 0.0) continue;
                    for (int jp = 0; jp <= na; ++jp)
                        J(row, idx_a(ip, jp)) += cx * dq1 * D1a_(j, jp);
                }
            }
            // --- interior water rows ---
            for (int j = 1; j < nw; ++j) {
                const int row = idx_w(i, j);
                const double hq = hqw(i, j), hp = hpw(i, j), hqq = hqqw(i, j),
                             hpp = hppw(i, j), hpq = hpqw(i, j);
                const double cq1 = 2.0 * hq * hpp - 2.0 * hp * hpq;
                const double cq2 = hp * hp;
                const double cp1 = 2.0 * hqq * hp - 2.0 * hq * hpq;
                const double cp2 = 1.0 + hq * hq;
                const double cx = -2.0 * hq * hp;
                for (int ip = 0; ip <= nq; ++ip)
                    J(row, idx_w(ip, j)) += cq1 * qb_.D1(i, ip) + cq2 * qb_.D2(i, ip);
                for (int jp = 0; jp <= nw; ++jp)
                    J(row, idx_w(i, jp)) += cp1 * D1w_(j, jp) + cp2 * D2w_(j, jp);
                for (int ip = 0; ip <= nq; ++ip) {
                    const double dq1 = qb_.D1(i, ip);
                    if (dq1 == 0.0) continue;
                    for (int jp = 0; jp <= nw; ++jp)
                        J(row, idx_w(ip, jp)) += cx * dq1 * D1w_(j, jp);
                }
            }
            // --- interface row (stored at air j = 0) ---
            {
                const int row = idx_a(i, 0);
                const double hq_a = hqa(i, 0), hp_a = hpa(i, 0);
                const double hq_w = hqw(i, nw), hp_w = hpw(i, nw);
                for (int ip = 0; ip <= nq; ++ip) {
                    J(row, idx_a(ip, 0)) += 2.0 * hq_a / (hp_a * hp_a) * qb_.D1(i, ip);
                    J(row, idx_w(ip, nw)) -= 2.0 * hq_w / (hp_w * hp_w) * qb_.D1(i, ip);
                }
                for (int jp = 0; jp <= na; ++jp)
                    J(row, idx_a(i, jp)) -=
                        2.0 * (1.0 + hq_a * hq_a) / (hp_a * hp_a * hp_a) * D1a_(0, jp);
                for (int jp = 0; jp <= nw; ++jp)
                    J(row, idx_w(i, jp)) +=
                        2.0 * (1.0 + hq_w * hq_w) / (hp_w * hp_w * hp_w) * D1w_(nw, jp);
                J(row, idx_w(i, nw)) += 2.0 * g_jump_rho(cfg_);
                J(row, idx_Q()) = -1.0;
            }
            // --- top row ---
            {
                const int row = idx_a(i, na);
                J(row, idx_a(i, na)) += 1.0;
                for (int ip = 0; ip <= nq; ++ip) J(row, idx_w(ip, nw)) -= qb_.w(ip);
            }
            // --- bottom and continuity rows ---
            J(idx_w(i, 0), idx_w(i, 0)) = 1.0;
            J(idx_w(i, nw), idx_a(i, 0)) = 1.0;
            J(idx_w(i, nw), idx_w(i, nw)) = -1.0;
        },
        exec);

    // amplitude row
    for (int ip = 0; ip <= nq; ++ip)
        J(idx_Q(), idx_w(ip, nw)) = 2.0 * qb_.w(ip) * std::cos(qb_.q(ip));
    return J;
}

HeightField HeightProblem::laminar_field(const LaminarFlow& flow) const {
    HeightField h;
    h.ha.resize(opt_.nq + 1, opt_.np_air + 1);
    h.hw.resize(opt_.nq + 1, opt_.np_water + 1);
    auto fill_linear = [](Eigen::MatrixXd& m, const Eigen::VectorXd& nodes, double lo,
                          double hi) {
        const int np = static_cast<int>(nodes.size()) - 1;
        for (int j = 0; j <= np; ++j) {
            const double t = (nodes(j) - nodes(0)) / (nodes(np) - nodes(0));
            m.col(j).setConstant(lo * (1.0 - t) + hi * t);
        }
    };
    fill_linear(h.hw, pw_, flow.H(cfg_.p0), flow.H(cfg_.p1));
    if (cfg_.regime == Regime::LiddedIrrotational) {
        fill_linear(h.ha, pa_, flow.H(cfg_.p1), flow.H(0.0));
    } else {
        for (int j = 0; j <= opt_.np_air; ++j) h.ha.col(j).setConstant(flow.H(pa_(j)));
    }
    h.Q = flow.Q;
    return h;
}

HeightField HeightProblem::discrete_laminar(double lambda) const {
    const int na = opt_.np_air, nw = opt_.np_water;
    const int n = na + nw + 2;  // column unknowns: water nodes then air nodes
    LaminarFlow flow = cfg_.regime == Regime::LiddedIrrotational
                           ? laminar_ideal(cfg_, gamma_rel_.at_p1(), lambda)
                           : laminar_shear(cfg_, gamma_rel_, lambda);
    Eigen::VectorXd x(n);
    HeightField seed = laminar_field(flow);
    for (int j = 0; j <= nw; ++j) x(j) = seed.hw(0, j);
    for (int j = 0; j <= na; ++j) x(nw + 1 + j) = seed.ha(0, j);
    const double Q = flow.Q;

    auto dcol = [](const Eigen::MatrixXd& D, const Eigen::VectorXd& v,
                   const Eigen::VectorXd& nodes, int order) {
        Eigen::MatrixXd row = v.transpose();
        return Eigen::VectorXd(deriv_p(row, D, nodes, order).transpose());
    };
    auto column_residual = [&](const Eigen::VectorXd& v) {
        Eigen::VectorXd hw = v.head(nw + 1), ha = v.tail(na + 1);
        Eigen::VectorXd hpw = dcol(D1w_, hw, pw_, 1), hppw = dcol(D2w_, hw, pw_, 2);
        Eigen::VectorXd hpa = dcol(D1a_, ha, pa_, 1), hppa = dcol(D2a_, ha, pa_, 2);
        Eigen::VectorXd F(n);
        F(0) = hw(0);  // bed
        for (int j = 1; j < nw; ++j) F(j) = hppw(j);
        // interface jump at fixed Q
        F(nw) = 1.0 / (hpa(0) * hpa(0)) - 1.0 / (hpw(nw) * hpw(nw)) +
                2.0 * g_jump_rho(cfg_) * hw(nw) - Q;
        F(nw + 1) = ha(0) - hw(nw);  // continuity
        for (int j = 1; j < na; ++j) {
            const double g = vort(pa_(j));
            F(nw + 1 + j) = hppa(j) + g * hpa(j) * hpa(j) * hpa(j);
        }
        F(n - 1) = ha(na) - cfg_.ell - hw(nw);  // lid: d(h) = h(p1) for laminar columns
        return F;
    };

    double prev_norm = 1e300;
    for (int it = 0; it < 30; ++it) {
        Eigen::VectorXd F = column_residual(x);
        const double norm = F.lpNorm<Eigen::Infinity>();
        if (norm < 1e-13) break;
        if (norm < 1e-11 && norm > 0.5 * prev_norm) break;  // quantization floor
        prev_norm = norm;
        Eigen::MatrixXd Jc = Eigen::MatrixXd::Zero(n, n);
        Eigen::VectorXd hw = x.head(nw + 1), ha = x.tail(na + 1);
        Eigen::VectorXd hpw = dcol(D1w_, hw, pw_, 1), hpa = dcol(D1a_, ha, pa_, 1);
        Jc(0, 0) = 1.0;
        for (int j = 1; j < nw; ++j)
            for (int jp = 0; jp <= nw; ++jp) Jc(j, jp) = D2w_(j, jp);
        for (int jp = 0; jp <= na; ++jp)
            Jc(nw, nw + 1 + jp) = -2.0 / (hpa(0) * hpa(0) * hpa(0)) * D1a_(0, jp);
        for (int jp = 0; jp <= nw; ++jp)
            Jc(nw, jp) = 2.0 / (hpw(nw) * hpw(nw) * hpw(nw)) * D1w_(nw, jp);
        Jc(nw, nw) += 2.0 * g_jump_rho(cfg_);
        Jc(nw + 1, nw + 1) = 1.0;
        Jc(nw + 1, nw) = -1.0;
        for (int j = 1; j < na; ++j) {
            const double g = vort(pa_(j));
            for (int jp = 0; jp <= na; ++jp)
                Jc(nw + 1 + j, nw + 1 + jp) =
                    D2a_(j, jp) + 3.0 * g * hpa(j) * hpa(j) * D1a_(j, jp);
        }
        Jc(n - 1, nw + 1 + na) = 1.0;
        Jc(n - 1, nw) = -1.0;
        x -= Jc.partialPivLu().solve(F);
    }
    if (column_residual(x).lpNorm<Eigen::Infinity>() > 1e-11)
        throw NumericalError("discrete_laminar: column Newton did not converge");

    HeightField h;
    h.ha.resize(opt_.nq + 1, na + 1);
    h.hw.resize(opt_.nq + 1, nw + 1);
    for (int j = 0; j <= nw; ++j) h.hw.col(j).setConstant(x(j));
    for (int j = 0; j <= na; ++j) h.ha.col(j).setConstant(x(nw + 1 + j));
    h.Q = Q;
    return h;
}

HeightField HeightProblem::first_order_wave(double lambda_star, double s,
                                            const std::function<double(double)>& mhat) const {
    HeightField h = discrete_laminar(lambda_star);
    for (int i = 0; i <= opt_.nq; ++i) {
        const double c = std::cos(qb_.q(i));
        for (int j = 0; j <= opt_.np_air; ++j) h.ha(i, j) += s * mhat(pa_(j)) * c;
        for (int j = 0; j <= opt_.np_water; ++j) h.hw(i, j) += s * mhat(pw_(j)) * c;
    }
    return h;
}

BranchPoint HeightProblem::newton_correct(const HeightField& guess, double s,
                                          const NewtonOptions& opt) const {
    HeightField h = guess;
    BranchPoint out;
    out.s = s;
    for (int it = 0; it <= opt.max_iter; ++it) {
        Eigen::VectorXd F = assemble_residual(h, s);
        const double norm = F.lpNorm<Eigen::Infinity>();
        if (norm <= opt.tol) {
            out.field = h;
            out.Q = h.Q;
            out.newton_iters = it;
            out.residual_norm = norm;
            return out;
        }
        if (it == opt.max_iter) break;
        Eigen::MatrixXd J = assemble_jacobian(h, opt.exec);
        Eigen::VectorXd dx = J.partialPivLu().solve(F);
        if (!dx.allFinite()) throw NumericalError("newton_correct: linear solve produced NaN");
        const int nq = opt_.nq;
        for (int i = 0; i <= nq; ++i) {
            for (int j = 0; j <= opt_.np_air; ++j) h.ha(i, j) -= dx(idx_a(i, j));
            for (int j = 0; j <= opt_.np_water; ++j) h.hw(i, j) -= dx(idx_w(i, j));
        }
        h.Q -= dx(idx_Q());
    }
    throw NumericalError("newton_correct: no convergence after " +
                         std::to_string(opt.max_iter) + " iterations");
}

BranchResult HeightProblem::continue_branch(double lambda_star, double s_max, int steps,
                                            const std::function<double(double)>& mhat,
                                            const NewtonOptions& opt) const {
    BranchResult res;
    if (steps < 1) throw ConfigError("continue_branch: steps must be >= 1");
    const double ds = s_max / steps;

    BranchPoint base;
    base.s = 0.0;
    base.field = discrete_laminar(lambda_star);
    base.Q = base.field.Q;
    base.residual_norm = residual(base.field).max_norm();
    res.points.push_back(base);

    for (int k = 1; k <= steps; ++k) {
        const double s = k * ds;
        HeightField guess;
        if (k == 1) {
            guess = first_order_wave(lambda_star, s, mhat);
        } else {
            // secant predictor over the last two converged points
            const HeightField& a = res.points[res.points.size() - 2].field;
            const HeightField& b = res.points[res.points.size() - 1].field;
            guess.ha = 2.0 * b.ha - a.ha;
            guess.hw = 2.0 * b.hw - a.hw;
            guess.Q = 2.0 * b.Q - a.Q;
        }
        try {
            res.points.push_back(newton_correct(guess, s, opt));
        } catch (const NumericalError& e) {
            res.abort_reason = std::string(e.what()) + " (step " + std::to_string(k) + ")";
            res.failed_step = k;
            break;
        }
    }
    return res;
}

}  // namespace windwave
