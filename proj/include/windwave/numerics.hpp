#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace windwave {

/// coth(x) via expm1 so small arguments do not cancel.
inline double coth(double x) {
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    double ax = std::abs(x);
    double v;
    if (ax < 1e-3) {
        // 1/x + x/3 - x^3/45 + ...
        v = 1.0 / ax + ax / 3.0 - ax * ax * ax / 45.0;
    } else {
        v = 1.0 + 2.0 / std::expm1(2.0 * ax);
    }
    return x > 0 ? v : -v;
}

/// k * coth(k*d); the k -> 0 limit is 1/d.
inline double k_coth_kd(double k, double d) {
    if (k == 0.0) return 1.0 / d;
    double x = k * d;
    if (std::abs(x) < 1e-3) {
        // k*coth(kd) = 1/d + k^2 d/3 - ...
        return 1.0 / d + k * k * d / 3.0 - k * k * k * k * d * d * d / 45.0;
    }
    return k * coth(x);
}

/// Ninth-degree smoothstep: 0 at t<=0, 1 at t>=1, C^4 across the ends.
/// S'(t) = 630 t^4 (1-t)^4.
inline double smoothstep9(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double t5 = t * t * t * t * t;
    return t5 * (126.0 + t * (-420.0 + t * (540.0 + t * (-315.0 + 70.0 * t))));
}
inline double smoothstep9_d1(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double u = t * (1.0 - t);
    return 630.0 * u * u * u * u;
}
inline double smoothstep9_d2(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double u = t * (1.0 - t);
    return 2520.0 * u * u * u * (1.0 - 2.0 * t);
}

/// Fornberg finite-difference weights for derivative `m` at `x0` on `grid`.
std::vector<double> fd_weights(double x0, const std::vector<double>& grid, int m);

struct RootOptions {
    double bracket_tol = 1e-10;  ///< bisection stops at this bracket width
    int max_bisect = 200;
    int newton_steps = 5;  ///< polish steps after bisection
};

/// Root of increasing-or-decreasing f on [a,b] with f(a)*f(b) <= 0.
/// Bisection to `bracket_tol`, then Newton polish when df is given.
double bisect_root(const std::function<double(double)>& f, double a, double b,
                   const RootOptions& opt = {},
                   const std::function<double(double)>& df = nullptr);

/// Grow [a0, b0] geometrically (factor 2 on b, /2 on a) until f changes sign.
/// Returns false if no sign change is found within `max_grow` doublings.
bool grow_bracket(const std::function<double(double)>& f, double& a, double& b,
                  int max_grow = 60);

/// Composite Simpson over uniformly sampled values (n must be even intervals,
/// i.e. values.size() odd).
double simpson_uniform(const std::vector<double>& values, double h);

/// Natural cubic spline through (x_i, y_i), x strictly increasing.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    double derivative(double x) const;
    /// definite integral from x.front() to x
    double integral_from_start(double x) const;
    bool empty() const { return x_.empty(); }

private:
    std::size_t locate(double x) const;
    std::vector<double> x_, y_, m_;     // m_: second derivatives at nodes
    std::vector<double> cumint_;        // integral up to node i
};

}  // namespace windwave
