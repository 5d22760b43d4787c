#pragma once

#include <Eigen/Dense>

namespace windwave {

/// Collocation machinery for even, 2π-periodic functions represented by their
/// values on the half-period grid q_i = iπ/N, i = 0..N (cosine modes 0..N).
struct CosineBasis {
    int N = 0;
    Eigen::VectorXd q;     ///< nodes on [0, π]
    Eigen::MatrixXd V;     ///< V(i,k) = cos(k q_i): coeffs -> values
    Eigen::MatrixXd Vinv;  ///< values -> coeffs
    Eigen::MatrixXd D1;    ///< values -> d/dq values (odd output on same nodes)
    Eigen::MatrixXd D2;    ///< values -> d²/dq² values
    Eigen::VectorXd w;     ///< mean weights: (1/2π)∮ f dq = w·f (exact for modes < 2N)

    explicit CosineBasis(int n);

    Eigen::VectorXd coeffs(const Eigen::VectorXd& values) const { return Vinv * values; }
    Eigen::VectorXd values(const Eigen::VectorXd& coeffs) const { return V * coeffs; }
    /// per-period mean of the function with these nodal values
    double mean(const Eigen::VectorXd& values) const { return w.dot(values); }
    /// cosine coefficient of mode k (k >= 1) via exact quadrature
    double mode_coeff(const Eigen::VectorXd& values, int k) const;
};

/// Dense differentiation matrix on arbitrary nodes built from 6-point
/// (order >= 4) finite-difference stencils.
Eigen::MatrixXd fd_matrix(const Eigen::VectorXd& nodes, int order);

}  // namespace windwave
