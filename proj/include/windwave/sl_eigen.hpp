#pragma once

#include <Eigen/Dense>

#include "windwave/core.hpp"

namespace windwave {

/// 1-D grid over [p0, 0] with a node exactly at p1; uniform per region.
struct Grid1D {
    std::vector<double> p;  ///< strictly increasing, p.front()=p0, p.back()=0
    int iface = 0;          ///< index of the p1 node
    int n_water = 0;        ///< elements in [p0, p1]
    int n_air = 0;          ///< elements in [p1, 0]
};

Grid1D make_grid(const PhysicalConfig& cfg, int elems_per_region);

/// Discrete forms of the transmission quotient: A holds the a³-weighted
/// stiffness plus the interface coupling g⟦ρ⟧ M(p1)², B the a-weighted mass.
/// Dirichlet dofs at p = p0 and p = 0 are eliminated; M(p1) stays free.
struct Forms {
    Eigen::MatrixXd A, B;
    int iface_dof = 0;  ///< dof index of the p1 node
};

/// Piecewise-linear elements; a and a³ are taken at element midpoints.
/// The mode number n does not enter the forms (it appears as the eigenvalue
/// ν = -n² at a bifurcation); it is validated only.
Forms assemble(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel, double lambda,
               int n, const Grid1D& grid);

struct EigenResult {
    double nu = 0.0;
    Eigen::VectorXd M;  ///< nodal values on the full grid (boundary zeros included)
    double algebraic_residual = 0.0;  ///< ‖A v − ν B v‖∞
    double interface_residual = 0.0;  ///< |⟦a³M_p⟧ − g⟦ρ⟧ M(p1)| by one-sided differences
    double boundary_residual = 0.0;   ///< |M(p0)| + |M(0)|
};

/// Smallest eigenpair of the generalized symmetric problem A M = ν B M.
/// Eigenvector is normalized to unit a-weighted L² norm with M(p1) >= 0.
EigenResult min_eigenpair(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                          double lambda, const Grid1D& grid, const Forms& forms);

/// Raw dense solve for sanity oracles: smallest eigenvalue of (A, B).
std::pair<double, Eigen::VectorXd> min_eigenpair_raw(const Eigen::MatrixXd& A,
                                                     const Eigen::MatrixXd& B);

/// Nontrivial q-independent (zero-mode) solutions exist iff λ³ = -g⟦ρ⟧(p1-p0),
/// i.e. λ = λ0; both lidded regimes reduce to the same criterion.
bool zero_mode_check(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                     double lambda, double tol = 1e-10);

}  // namespace windwave
