#include "windwave/strip_transform.hpp"

#include <Eigen/LU>
#include <Eigen/Sparse>
#include <cmath>

#include "windwave/numerics.hpp"
#include "windwave/parallel.hpp"

namespace windwave {

SurfaceShape SurfaceShape::zero(int K) {
    SurfaceShape s;
    s.c = Eigen::VectorXd::Zero(K + 1);
    return s;
}

SurfaceShape SurfaceShape::single_mode(int k, double amplitude, int K) {
    SurfaceShape s;
    s.c = Eigen::VectorXd::Zero(std::max(k, K) + 1);
    s.c(k) = amplitude;
    return s;
}

double SurfaceShape::eval(double x) const {
    double v = 0.0;
    for (int k = 1; k < c.size(); ++k) v += c(k) * std::cos(k * x);
    return v;
}
double SurfaceShape::eval_dx(double x) const {
    double v = 0.0;
    for (int k = 1; k < c.size(); ++k) v -= c(k) * k * std::sin(k * x);
    return v;
}
double SurfaceShape::eval_dxx(double x) const {
    double v = 0.0;
    for (int k = 1; k < c.size(); ++k) v -= c(k) * double(k) * k * std::cos(k * x);
    return v;
}
double SurfaceShape::amp_norm() const {
    double v = 0.0;
    for (int k = 1; k < c.size(); ++k) v += std::abs(c(k));
    return v;
}
void SurfaceShape::validate() const {
    if (c.size() > 0 && c(0) != 0.0)
        throw ConfigError("SurfaceShape: mean must be zero (c0 = 0)");
    if (amp_norm() >= 1.0)
        throw InfeasibleError("SurfaceShape: amplitude reaches the bed (|η| >= depth)");
}

StripGrid::StripGrid(int nx_, int nya, int nyw, double ymax_)
    : nx(nx_), ny_air(nya), ny_water(nyw), ymax(ymax_), xb(nx_) {
    if (ymax < 8.0) throw ConfigError("StripGrid: ymax must be at least 8");
    ya.resize(ny_air + 1);
    for (int j = 0; j <= ny_air; ++j) ya(j) = ymax * double(j) / ny_air;
    yw.resize(ny_water + 1);
    for (int j = 0; j <= ny_water; ++j) yw(j) = -1.0 + double(j) / ny_water;
}

StripGrid StripGrid::make(int nx_, int nya, int nyw, double ymax_) {
    return StripGrid(nx_, nya, nyw, ymax_);
}

double strip_cutoff(double y) { return 1.0 - smoothstep9(y - 1.0); }

namespace {

struct MapDerivs {
    double t2, tx, ty, txx, tyy;  // T2 and its physical-coordinate derivatives
};

MapDerivs map_derivs(double eta, double eta_x, double eta_xx, double y) {
    const double w = strip_cutoff(y);
    const double wp = -smoothstep9_d1(y - 1.0);
    const double wpp = -smoothstep9_d2(y - 1.0);
    const double den = 1.0 + eta;
    const double flat = (y - eta) / den;
    MapDerivs d;
    d.t2 = w * flat + (1.0 - w) * y;
    d.tx = -w * eta_x * (1.0 + y) / (den * den);
    d.ty = w / den + (1.0 - w) + wp * (flat - y);
    d.txx = -w * (1.0 + y) * (eta_xx * den - 2.0 * eta_x * eta_x) / (den * den * den);
    d.tyy = wpp * (flat - y) + 2.0 * wp * (1.0 / den - 1.0);
    return d;
}

// Invert T2(x, ·) = ybar by a monotone Newton iteration.
double invert_map(double eta, double eta_x, double eta_xx, double ybar, double y0) {
    double y = y0;
    for (int it = 0; it < 60; ++it) {
        MapDerivs d = map_derivs(eta, eta_x, eta_xx, y);
        if (!(d.ty > 0.0))
            throw InfeasibleError("flatten_coeffs: map not invertible (amplitude too large)");
        const double step = (d.t2 - ybar) / d.ty;
        y -= step;
        if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(y))) return y;
    }
    throw NumericalError("flatten_coeffs: map inversion did not converge");
}

void fill_region(const SurfaceShape& eta, const Eigen::VectorXd& xnodes,
                 const Eigen::VectorXd& ynodes, Eigen::MatrixXd& A12, Eigen::MatrixXd& A22,
                 Eigen::MatrixXd& B2, Eigen::MatrixXd& C21, Eigen::MatrixXd& C22,
                 Eigen::MatrixXd& S2, bool parallel) {
    const int nx = static_cast<int>(xnodes.size()) - 1;
    const int ny = static_cast<int>(ynodes.size()) - 1;
    A12.resize(nx + 1, ny + 1);
    A22.resize(nx + 1, ny + 1);
    B2.resize(nx + 1, ny + 1);
    C21.resize(nx + 1, ny + 1);
    C22.resize(nx + 1, ny + 1);
    S2.resize(nx + 1, ny + 1);
    parallel_for(
        nx + 1,
        [&](std::ptrdiff_t ii) {
            const int i = static_cast<int>(ii);
            const double e = eta.eval(xnodes(i));
            const double ex = eta.eval_dx(xnodes(i));
            const double exx = eta.eval_dxx(xnodes(i));
            for (int j = 0; j <= ny; ++j) {
                const double yb = ynodes(j);
                const double y = invert_map(e, ex, exx, yb, yb + e * (1.0 - std::abs(yb) / 3.0));
                MapDerivs d = map_derivs(e, ex, exx, y);
                S2(i, j) = y;
                C21(i, j) = d.tx;
                C22(i, j) = d.ty;
                A12(i, j) = d.tx;  // A12 = ∂_x T1 ∂_x T2 + ∂_y T1 ∂_y T2 = ∂_x T2
                A22(i, j) = d.tx * d.tx + d.ty * d.ty;
                B2(i, j) = d.txx + d.tyy;
            }
        },
        parallel ? Exec::Parallel : Exec::Serial);
}

}  // namespace

FlattenCoeffs flatten_coeffs(const SurfaceShape& eta, const StripGrid& grid, bool parallel) {
    eta.validate();
    FlattenCoeffs fc;
    fill_region(eta, grid.xb.q, grid.ya, fc.A12a, fc.A22a, fc.B2a, fc.C21a, fc.C22a, fc.S2a,
                parallel);
    fill_region(eta, grid.xb.q, grid.yw, fc.A12w, fc.A22w, fc.B2w, fc.C21w, fc.C22w, fc.S2w,
                parallel);
    return fc;
}

namespace {

// Sparse collocation solve of E(η)Ψ = A11 ∂x²Ψ + 2 A12 ∂x∂yΨ + A22 ∂y²Ψ + B2 ∂yΨ = 0
// with the given boundary closures; spectral in x̄, 6-point (4th-order)
// stencils in ȳ.
Eigen::MatrixXd strip_solve(const StripGrid& grid, const Eigen::VectorXd& ynodes,
                            const Eigen::MatrixXd& A12, const Eigen::MatrixXd& A22,
                            const Eigen::MatrixXd& B2,
                            const Eigen::VectorXd& dirichlet_bottom_row,
                            bool robin_top, double top_slope,
                            const Eigen::VectorXd& dirichlet_top_row) {
    const int nx = grid.nx;
    const int n = nx + 1;
    const int ny = static_cast<int>(ynodes.size()) - 1;
    const double hy = ynodes(1) - ynodes(0);
    Eigen::MatrixXd D1y = fd_matrix(ynodes, 1);
    Eigen::MatrixXd D2y = fd_matrix(ynodes, 2);

    auto id = [&](int i, int j) { return i + n * j; };
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(n) * (ny + 1) * (n + 16));
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n * (ny + 1));

    for (int i = 0; i < n; ++i) {  // ȳ = ynodes(0): Dirichlet
        trip.emplace_back(id(i, 0), id(i, 0), 1.0);
        rhs(id(i, 0)) = dirichlet_bottom_row(i);
    }
    for (int j = 1; j < ny; ++j) {
        for (int i = 0; i < n; ++i) {
            const int row = id(i, j);
            for (int ip = 0; ip < n; ++ip)
                trip.emplace_back(row, id(ip, j), grid.xb.D2(i, ip));  // A11 = 1
            for (int jp = 0; jp <= ny; ++jp) {
                const double d2 = D2y(j, jp), d1 = D1y(j, jp);
                if (d2 != 0.0 || d1 != 0.0)
                    trip.emplace_back(row, id(i, jp), A22(i, j) * d2 + B2(i, j) * d1);
            }
            if (A12(i, j) != 0.0) {
                for (int ip = 0; ip < n; ++ip) {
                    const double dx = grid.xb.D1(i, ip);
                    if (dx == 0.0) continue;
                    for (int jp = 0; jp <= ny; ++jp) {
                        const double d1 = D1y(j, jp);
                        if (d1 != 0.0)
                            trip.emplace_back(row, id(ip, jp), 2.0 * A12(i, j) * dx * d1);
                    }
                }
            }
        }
    }
    if (robin_top) {
        // Mode-wise decay closure at ȳ_max, ghost row eliminated through the
        // Laplace stencil (coefficients are identity above the cutoff):
        //   (1 + h k + h²k²/2) Ψ̂_k(ny) = Ψ̂_k(ny-1),   k >= 1,
        //   Ψ̂_0(ny) - Ψ̂_0(ny-1) = slope · h.
        for (int k = 0; k < n; ++k) {
            const int row = id(k, ny);
            const double ck = (k == 0) ? 1.0 : 1.0 + hy * k + 0.5 * hy * hy * k * k;
            for (int i = 0; i < n; ++i) {
                trip.emplace_back(row, id(i, ny), ck * grid.xb.Vinv(k, i));
                trip.emplace_back(row, id(i, ny - 1), -grid.xb.Vinv(k, i));
            }
            rhs(row) = (k == 0) ? top_slope * hy : 0.0;
        }
    } else {
        for (int i = 0; i < n; ++i) {
            trip.emplace_back(id(i, ny), id(i, ny), 1.0);
            rhs(id(i, ny)) = dirichlet_top_row(i);
        }
    }

    Eigen::SparseMatrix<double> M(n * (ny + 1), n * (ny + 1));
    M.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(M);
    if (lu.info() != Eigen::Success)
        throw NumericalError("strip_solve: sparse factorization failed");
    Eigen::VectorXd sol = lu.solve(rhs);
    if (lu.info() != Eigen::Success || !sol.allFinite())
        throw NumericalError("strip_solve: linear solve failed");

    Eigen::MatrixXd out(n, ny + 1);
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i < n; ++i) out(i, j) = sol(id(i, j));
    return out;
}

}  // namespace

Eigen::MatrixXd solve_psi_air(const PhysicalConfig& cfg, double lambda,
                              const SurfaceShape& eta, const StripGrid& grid,
                              const FlattenCoeffs& fc) {
    const int n = grid.nx + 1;
    Eigen::VectorXd surf = Eigen::VectorXd::Zero(n);
    if (cfg.regime == Regime::UnboundedShear) {
        for (int i = 0; i < n; ++i) {
            const double e = eta.eval(grid.xb.q(i));
            surf(i) = 0.5 * cfg.gamma0 * e * e;
        }
    }
    return strip_solve(grid, grid.ya, fc.A12a, fc.A22a, fc.B2a, surf, true, -lambda,
                       Eigen::VectorXd());
}

Eigen::MatrixXd solve_psi_water(const PhysicalConfig& cfg, const SurfaceShape& eta,
                                const StripGrid& grid, const FlattenCoeffs& fc) {
    (void)eta;
    const int n = grid.nx + 1;
    Eigen::VectorXd bed = Eigen::VectorXd::Constant(n, -cfg.p0);
    Eigen::VectorXd surf = Eigen::VectorXd::Zero(n);
    return strip_solve(grid, grid.yw, fc.A12w, fc.A22w, fc.B2w, bed, false, 0.0, surf);
}

Eigen::VectorXd evaluate_G(const PhysicalConfig& cfg, double lambda,
                           const SurfaceShape& eta, const StripGrid& grid, double Q) {
    FlattenCoeffs fc = flatten_coeffs(eta, grid);
    Eigen::MatrixXd psi_a = solve_psi_air(cfg, lambda, eta, grid, fc);
    Eigen::MatrixXd psi_w = solve_psi_water(cfg, eta, grid, fc);

    const int n = grid.nx + 1;
    const int mw = grid.ny_water;

    // one-sided 5-point (4th-order) ∂ȳ at the interface from each region
    auto edge_deriv = [](const Eigen::MatrixXd& psi, const Eigen::VectorXd& ynodes, int at) {
        const int stencil = 5;
        const int start = (at == 0) ? 0 : static_cast<int>(ynodes.size()) - stencil;
        std::vector<double> pts(stencil);
        for (int k = 0; k < stencil; ++k) pts[k] = ynodes(start + k);
        auto w = fd_weights(ynodes(at), pts, 1);
        Eigen::VectorXd d = Eigen::VectorXd::Zero(psi.rows());
        for (int k = 0; k < stencil; ++k) d += w[k] * psi.col(start + k);
        return d;
    };
    Eigen::VectorXd dy_a = edge_deriv(psi_a, grid.ya, 0);
    Eigen::VectorXd dy_w = edge_deriv(psi_w, grid.yw, mw);
    Eigen::VectorXd dx_a = grid.xb.D1 * psi_a.col(0);
    Eigen::VectorXd dx_w = grid.xb.D1 * psi_w.col(mw);

    Eigen::VectorXd G(n);
    for (int i = 0; i < n; ++i) {
        const double u1a = dx_a(i) + fc.C21a(i, 0) * dy_a(i);
        const double u2a = fc.C22a(i, 0) * dy_a(i);
        const double u1w = dx_w(i) + fc.C21w(i, mw) * dy_w(i);
        const double u2w = fc.C22w(i, mw) * dy_w(i);
        const double e = eta.eval(grid.xb.q(i));
        double g = 2.0 * (u1a * u1a + u2a * u2a - u1w * u1w - u2w * u2w) +
                   2.0 * g_jump_rho(cfg) * (e + 1.0) - Q;
        if (cfg.regime == Regime::UnboundedShear)
            g += 2.0 * cfg.gamma0 * fc.S2a(i, 0) * u2a;
        G(i) = g;
    }
    return G;
}

Eigen::VectorXd linearize_G_fd(const PhysicalConfig& cfg, double lambda,
                               const SurfaceShape& zeta, const StripGrid& grid, double eps) {
    SurfaceShape plus = zeta, minus = zeta;
    plus.c *= eps;
    minus.c *= -eps;
    const double Q = 0.0;  // affine offset cancels in the central difference
    Eigen::VectorXd gp = evaluate_G(cfg, lambda, plus, grid, Q);
    Eigen::VectorXd gm = evaluate_G(cfg, lambda, minus, grid, Q);
    return (gp - gm) / (2.0 * eps);
}

double operator_multiplier(const PhysicalConfig& cfg, double k, double lambda) {
    double m = 2.0 * cfg.p0 * cfg.p0 * k_coth_kd(k, 1.0) + 2.0 * lambda * lambda * k +
               g_jump_rho(cfg);
    if (cfg.regime == Regime::UnboundedShear) m -= cfg.gamma0 * lambda;
    return m;
}

}  // namespace windwave
