#pragma once

#include <Eigen/Dense>

#include "windwave/core.hpp"
#include "windwave/spectral.hpp"

namespace windwave {

/// Truncated Fourier cosine surface η(x̄) = Σ_{k>=1} c_k cos(k x̄); mean zero.
struct SurfaceShape {
    Eigen::VectorXd c;  ///< c(k) for k = 0..K, c(0) must be 0

    static SurfaceShape zero(int K = 4);
    static SurfaceShape single_mode(int k, double amplitude, int K = 0);

    double eval(double x) const;
    double eval_dx(double x) const;
    double eval_dxx(double x) const;
    double amp_norm() const;  ///< Σ|c_k|, bounds ‖η‖∞
    void validate() const;    ///< mean zero, amplitude below the depth
};

/// Collocation grid on the truncated strip [-1, ȳ_max] with a node at ȳ = 0.
struct StripGrid {
    int nx = 32;        ///< cosine intervals on the half period
    int ny_air = 96;    ///< ȳ-intervals on [0, ȳ_max]
    int ny_water = 48;  ///< ȳ-intervals on [-1, 0]
    double ymax = 8.0;

    CosineBasis xb;
    Eigen::VectorXd ya;  ///< 0 .. ymax
    Eigen::VectorXd yw;  ///< -1 .. 0

    StripGrid(int nx_, int nya, int nyw, double ymax_);
    static StripGrid make(int nx_ = 32, int nya = 96, int nyw = 48, double ymax_ = 8.0);
};

/// Flattening-map coefficient fields of the transformed elliptic operator
/// (A_ij ∂_i∂_j + B_i ∂_i) and of the gradient push-forward C_ij, sampled on
/// the strip grid. Row index = x̄ node, column = ȳ node.
struct FlattenCoeffs {
    Eigen::MatrixXd A12a, A22a, B2a, C21a, C22a, S2a;  // air region
    Eigen::MatrixXd A12w, A22w, B2w, C21w, C22w, S2w;  // water region
};

/// Cutoff profile of the flattening map: 1 for y <= 1, 0 for y >= 2,
/// blended with a C^4 (ninth-degree) smoothstep.
double strip_cutoff(double y);

FlattenCoeffs flatten_coeffs(const SurfaceShape& eta, const StripGrid& grid,
                             bool parallel = true);

/// Transformed stream function in the air: E(η)Ψ = 0, Dirichlet at ȳ=0
/// (0, or γ0 η²/2 for the shear variant), mode-wise decay closure at ȳ_max
/// with far-field slope -λ in the mean mode.
Eigen::MatrixXd solve_psi_air(const PhysicalConfig& cfg, double lambda,
                              const SurfaceShape& eta, const StripGrid& grid,
                              const FlattenCoeffs& fc);

/// Transformed stream function in the water: Dirichlet 0 at ȳ=0, -p0 at ȳ=-1.
Eigen::MatrixXd solve_psi_water(const PhysicalConfig& cfg, const SurfaceShape& eta,
                                const StripGrid& grid, const FlattenCoeffs& fc);

/// Pointwise interface residual on ȳ = 0:
///   2⟦|∇ψ|²⟧ + 2g⟦ρ⟧(η+1) − Q   (+ 2⟦γ S₂ (∇ψ̃)₂⟧ in the shear variant),
/// with ∇ψ reconstructed through C_ij from the strip solves.
Eigen::VectorXd evaluate_G(const PhysicalConfig& cfg, double lambda,
                           const SurfaceShape& eta, const StripGrid& grid, double Q);

/// Central finite difference (G(λ, εζ) − G(λ, −εζ)) / (2ε).
Eigen::VectorXd linearize_G_fd(const PhysicalConfig& cfg, double lambda,
                               const SurfaceShape& zeta, const StripGrid& grid,
                               double eps = 1e-5);

/// Multiplier of the implemented operator: the exact Fréchet derivative of
/// evaluate_G acts mode-wise as 2·m_op(k;λ) with
///   m_op = 2 p0² k coth k + 2 λ² k + g⟦ρ⟧ − γ0 λ   (γ0 = 0 outside shear).
double operator_multiplier(const PhysicalConfig& cfg, double k, double lambda);

}  // namespace windwave
