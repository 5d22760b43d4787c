#pragma once

#include <Eigen/Dense>
#include <vector>

#include "windwave/core.hpp"
#include "windwave/height_pde.hpp"

namespace windwave {

/// Eulerian reconstruction of a height field on the body-fitted (streamline)
/// grid. Velocities are frame-relative (u - c); the pressure gauge puts the
/// mean surface pressure at zero, recovering laminar hydrostatics as s -> 0.
struct EulerianFields {
    Eigen::MatrixXd ya, yw;      ///< node heights y = h - depth
    Eigen::MatrixXd uma, umw;    ///< u - c
    Eigen::MatrixXd va, vw;      ///< v
    Eigen::MatrixXd Pa, Pw;      ///< pressure
    Eigen::VectorXd eta;         ///< surface elevation (mean zero)
    double depth = 0.0;
    double Q = 0.0;
};

EulerianFields eulerian_from_height(const HeightProblem& prob, const HeightField& h);

/// Mean upward flux of horizontal momentum across y = level:
/// F_E(y) = (1/L)∮ ρ(u-c) v dx. Levels must avoid the surface band.
double momentum_flux_FE(const HeightProblem& prob, const HeightField& h, double level);
std::vector<double> momentum_flux_FE(const HeightProblem& prob, const HeightField& h,
                                     const std::vector<double>& levels);

struct DragResult {
    double water_side = 0.0;
    double air_side = 0.0;
};
/// (1/L)∮ η_x P(x, η(x)) dx evaluated with the pressure from each side.
DragResult drag_force(const HeightProblem& prob, const HeightField& h);

/// Γ_rel(p) = (1/L)∮ (1+h_q²)/h_p dq for p in [p1, 0].
double relative_circulation(const HeightProblem& prob, const HeightField& h, double p);

/// max over the surface of |⟦|∇ψ|²⟧ + 2g⟦ρ⟧(η+d) − Q|.
double bernoulli_jump_check(const HeightProblem& prob, const HeightField& h, double Q);

/// max over the surface of |v − (u−c) η_x| (water side).
double kinematic_residual(const HeightProblem& prob, const HeightField& h);

/// max over the surface of |P_air − P_water|.
double pressure_jump_residual(const HeightProblem& prob, const HeightField& h);

/// One row of the branch diagnostics table.
struct DiagnosticsRow {
    double s = 0.0;
    double fe_mean = 0.0;
    double fe_spread = 0.0;
    double drag = 0.0;
    double bernoulli_resid = 0.0;
    double kinematic_resid = 0.0;
    double circ_err = 0.0;       ///< max over air rows of |Γ_rel(p) − prescribed|
    double pressure_jump = 0.0;
    double eta_mean = 0.0;
};
DiagnosticsRow diagnose_branch_point(const HeightProblem& prob, const BranchPoint& bp,
                                     const std::vector<double>& levels);

/// Default probe levels: three in the water column, two in the air.
std::vector<double> default_levels(const HeightProblem& prob, const HeightField& h);

}  // namespace windwave
