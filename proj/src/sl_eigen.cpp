#include "windwave/sl_eigen.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "windwave/numerics.hpp"

namespace windwave {

Grid1D make_grid(const PhysicalConfig& cfg, int elems_per_region) {
    if (elems_per_region < 8) throw ConfigError("make_grid: need at least 8 elements per region");
    Grid1D g;
    g.n_water = g.n_air = elems_per_region;
    g.p.resize(2 * elems_per_region + 1);
    for (int i = 0; i <= elems_per_region; ++i)
        g.p[i] = cfg.p0 + (cfg.p1 - cfg.p0) * double(i) / elems_per_region;
    for (int i = 1; i <= elems_per_region; ++i)
        g.p[elems_per_region + i] = cfg.p1 + (0.0 - cfg.p1) * double(i) / elems_per_region;
    g.iface = elems_per_region;
    return g;
}

Forms assemble(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel, double lambda,
               int n, const Grid1D& grid) {
    if (!(lambda > 0.0)) throw InfeasibleError("assemble: lambda must be positive");
    if (n < 1) throw ConfigError("assemble: mode number n must be >= 1");
    const int n_nodes = static_cast<int>(grid.p.size());
    const int n_dof = n_nodes - 2;  // Dirichlet at both ends
    Forms f;
    f.A = Eigen::MatrixXd::Zero(n_dof, n_dof);
    f.B = Eigen::MatrixXd::Zero(n_dof, n_dof);
    f.iface_dof = grid.iface - 1;

    for (int e = 0; e + 1 < n_nodes; ++e) {
        const double h = grid.p[e + 1] - grid.p[e];
        const double pm = 0.5 * (grid.p[e] + grid.p[e + 1]);
        // coefficients stay one-sided across the interface element boundary
        const double aw = (e < grid.iface) ? lambda : gamma_rel.value(pm);
        const double a3 = aw * aw * aw;
        const int i = e - 1, j = e;  // dof indices of the element's nodes
        const double k11 = a3 / h, m11 = aw * h / 3.0, m12 = aw * h / 6.0;
        if (i >= 0) {
            f.A(i, i) += k11;
            f.B(i, i) += m11;
        }
        if (j < n_dof) {
            f.A(j, j) += k11;
            f.B(j, j) += m11;
        }
        if (i >= 0 && j < n_dof) {
            f.A(i, j) -= k11;
            f.A(j, i) -= k11;
            f.B(i, j) += m12;
            f.B(j, i) += m12;
        }
    }
    f.A(f.iface_dof, f.iface_dof) += g_jump_rho(cfg);
    return f;
}

std::pair<double, Eigen::VectorXd> min_eigenpair_raw(const Eigen::MatrixXd& A,
                                                     const Eigen::MatrixXd& B) {
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, B);
    if (es.info() != Eigen::Success)
        throw NumericalError("min_eigenpair: generalized eigensolver failed");
    return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

EigenResult min_eigenpair(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                          double lambda, const Grid1D& grid, const Forms& forms) {
    auto [nu, v] = min_eigenpair_raw(forms.A, forms.B);
    if (!std::isfinite(nu)) throw NumericalError("min_eigenpair: eigenvalue is not finite");

    if (v(forms.iface_dof) < 0.0) v = -v;

    EigenResult r;
    r.nu = nu;
    const int n_nodes = static_cast<int>(grid.p.size());
    r.M = Eigen::VectorXd::Zero(n_nodes);
    for (int i = 0; i < n_nodes - 2; ++i) r.M(i + 1) = v(i);
    r.algebraic_residual = (forms.A * v - nu * forms.B * v).lpNorm<Eigen::Infinity>();
    r.boundary_residual = std::abs(r.M(0)) + std::abs(r.M(n_nodes - 1));

    // One-sided 4th-order derivatives at the interface node.
    const int I = grid.iface;
    auto one_sided = [&](bool water) {
        std::vector<double> pts, vals;
        for (int k = 0; k < 5; ++k) {
            int idx = water ? I - k : I + k;
            pts.push_back(grid.p[idx]);
            vals.push_back(r.M(idx));
        }
        auto w = fd_weights(grid.p[I], pts, 1);
        double d = 0.0;
        for (int k = 0; k < 5; ++k) d += w[k] * vals[k];
        return d;
    };
    const double gam1 = gamma_rel.at_p1();
    const double jump = gam1 * gam1 * gam1 * one_sided(false) -
                        lambda * lambda * lambda * one_sided(true);
    r.interface_residual = std::abs(jump - g_jump_rho(cfg) * r.M(I));
    return r;
}

bool zero_mode_check(const PhysicalConfig& cfg, const GammaRelProfile& /*gamma_rel*/,
                     double lambda, double tol) {
    const double rhs = -g_jump_rho(cfg) * (cfg.p1 - cfg.p0);  // = λ0³
    const double scale = std::max(1.0, std::abs(rhs));
    return std::abs(lambda * lambda * lambda - rhs) <= tol * scale;
}

}  // namespace windwave
