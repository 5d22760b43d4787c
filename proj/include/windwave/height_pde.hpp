#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "windwave/core.hpp"
#include "windwave/laminar.hpp"
#include "windwave/parallel.hpp"
#include "windwave/spectral.hpp"

namespace windwave {

struct HeightGridOptions {
    int nq = 16;        ///< cosine intervals on the half period
    int np_air = 48;    ///< p-intervals in the air region
    int np_water = 48;  ///< p-intervals in the water region
};

struct NewtonOptions {
    double tol = 1e-10;  ///< max-norm residual target
    int max_iter = 25;
    Exec exec = Exec::Parallel;  ///< Jacobian assembly policy
};

/// Discrete height field h(q, p) on the two-rectangle domain. The interface
/// row is duplicated (air column 0 and water column np_water carry their own
/// unknowns, tied by an explicit continuity equation) so both one-sided
/// p-derivatives exist for the jump condition.
struct HeightField {
    Eigen::MatrixXd ha;  ///< (nq+1) x (np_air+1), columns p1 .. 0
    Eigen::MatrixXd hw;  ///< (nq+1) x (np_water+1), columns p0 .. p1
    double Q = 0.0;
};

struct ResidualBlocks {
    Eigen::MatrixXd interior_air;    ///< rows q, cols interior p-nodes
    Eigen::MatrixXd interior_water;
    Eigen::VectorXd interface;       ///< jump condition per q-node
    Eigen::VectorXd top;             ///< lid condition per q-node
    Eigen::VectorXd bottom;          ///< bed condition per q-node
    Eigen::VectorXd continuity;      ///< air/water interface value tie
    double max_norm() const;
};

struct BranchPoint {
    double s = 0.0;
    HeightField field;
    double Q = 0.0;
    int newton_iters = 0;
    double residual_norm = 0.0;
};

struct BranchResult {
    std::vector<BranchPoint> points;
    std::optional<std::string> abort_reason;
    int failed_step = -1;
};

/// Collocation operators and solvers for the lidded height equation at a
/// fixed configuration. Spectral in q, 4th-order finite differences in p.
class HeightProblem {
public:
    HeightProblem(const PhysicalConfig& cfg, const GammaRelProfile& gamma_rel,
                  HeightGridOptions opt = {});

    const PhysicalConfig& cfg() const { return cfg_; }
    const GammaRelProfile& gamma_rel() const { return gamma_rel_; }
    const CosineBasis& qbasis() const { return qb_; }
    const Eigen::VectorXd& pa() const { return pa_; }
    const Eigen::VectorXd& pw() const { return pw_; }
    int nq() const { return opt_.nq; }
    int npa() const { return opt_.np_air; }
    int npw() const { return opt_.np_water; }
    int n_unknowns() const { return Na_ + Nw_ + 1; }

    /// mean of the interface row (the nonlocal depth operator)
    double depth_of(const HeightField& h) const;
    /// surface elevation η = h(·, p1) − d(h)
    Eigen::VectorXd eta_of(const HeightField& h) const;
    /// mode-1 cosine coefficient of the surface trace (branch amplitude)
    double amplitude_of(const HeightField& h) const;

    /// Derivative fields (exposed for diagnostics). Evaluation is compensated:
    /// the per-column q-mean and the per-row linear part in p are removed
    /// before differencing, so laminar fields differentiate to exact zeros.
    Eigen::MatrixXd dq(const Eigen::MatrixXd& h) const;
    Eigen::MatrixXd dqq(const Eigen::MatrixXd& h) const;
    Eigen::MatrixXd dp_air(const Eigen::MatrixXd& h) const;
    Eigen::MatrixXd dpp_air(const Eigen::MatrixXd& h) const;
    Eigen::MatrixXd dp_water(const Eigen::MatrixXd& h) const;
    Eigen::MatrixXd dpp_water(const Eigen::MatrixXd& h) const;

    /// throws NumericalError naming the first stagnant node
    void check_stagnation(const HeightField& h) const;

    ResidualBlocks residual(const HeightField& h) const;

    /// linearization of `residual` at base `h` applied to (phi_air, phi_water)
    ResidualBlocks linearized_apply(const HeightField& h, const Eigen::MatrixXd& phi_a,
                                    const Eigen::MatrixXd& phi_w) const;

    /// residual stacked into the Newton layout, amplitude row included
    Eigen::VectorXd assemble_residual(const HeightField& h, double s) const;
    /// dense Jacobian of assemble_residual (rows/cols in the same layout)
    Eigen::MatrixXd assemble_jacobian(const HeightField& h, Exec exec = Exec::Parallel) const;

    /// analytic laminar sample (exact for irrotational profiles)
    HeightField laminar_field(const LaminarFlow& flow) const;
    /// q-independent Newton solve at fixed Q = Q(λ): the discrete laminar flow
    HeightField discrete_laminar(double lambda) const;

    /// H(λ*) + s·M̂(p)cos q with M̂ normalized so the surface mode-1
    /// coefficient equals s exactly (M̂(p1) = 1)
    HeightField first_order_wave(double lambda_star, double s,
                                 const std::function<double(double)>& mhat) const;

    BranchPoint newton_correct(const HeightField& guess, double s,
                               const NewtonOptions& opt = {}) const;

    BranchResult continue_branch(double lambda_star, double s_max, int steps,
                                 const std::function<double(double)>& mhat,
                                 const NewtonOptions& opt = {}) const;

private:
    double vort(double p) const {  // air vorticity γ(-p); zero elsewhere
        return cfg_.regime == Regime::LiddedRotational ? cfg_.gamma(p) : 0.0;
    }
    int idx_a(int i, int j) const { return i + (opt_.nq + 1) * j; }
    int idx_w(int i, int j) const { return Na_ + i + (opt_.nq + 1) * j; }
    int idx_Q() const { return Na_ + Nw_; }

    PhysicalConfig cfg_;
    GammaRelProfile gamma_rel_;
    HeightGridOptions opt_;
    CosineBasis qb_;
    Eigen::VectorXd pa_, pw_;
    Eigen::MatrixXd D1a_, D2a_, D1w_, D2w_;  // p-derivative operators per region
    int Na_ = 0, Nw_ = 0;
};

}  // namespace windwave
