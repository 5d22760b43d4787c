#include "windwave/numerics.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "windwave/errors.hpp"

namespace windwave {

std::vector<double> fd_weights(double x0, const std::vector<double>& grid, int m) {
    // Fornberg (1988) recursion.
    const int n = static_cast<int>(grid.size()) - 1;
    std::vector<std::vector<std::vector<double>>> d(
        m + 1, std::vector<std::vector<double>>(n + 1, std::vector<double>(n + 1, 0.0)));
    d[0][0][0] = 1.0;
    double c1 = 1.0;
    for (int i = 1; i <= n; ++i) {
        double c2 = 1.0;
        for (int j = 0; j < i; ++j) {
            double c3 = grid[i] - grid[j];
            c2 *= c3;
            for (int k = 0; k <= std::min(i, m); ++k) {
                d[k][i][j] = ((grid[i] - x0) * d[k][i - 1][j] -
                              (k > 0 ? k * d[k - 1][i - 1][j] : 0.0)) /
                             c3;
            }
        }
        for (int k = 0; k <= std::min(i, m); ++k) {
            d[k][i][i] = c1 / c2 *
                         ((k > 0 ? k * d[k - 1][i - 1][i - 1] : 0.0) -
                          (grid[i - 1] - x0) * d[k][i - 1][i - 1]);
        }
        c1 = c2;
    }
    std::vector<double> w(n + 1);
    for (int j = 0; j <= n; ++j) w[j] = d[m][n][j];
    return w;
}

double bisect_root(const std::function<double(double)>& f, double a, double b,
                   const RootOptions& opt, const std::function<double(double)>& df) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw NumericalError("bisect_root: endpoints do not bracket a root");
    for (int it = 0; it < opt.max_bisect && (b - a) > opt.bracket_tol; ++it) {
        double c = 0.5 * (a + b);
        double fc = f(c);
        if (fc == 0.0) return c;
        if (fa * fc < 0.0) {
            b = c;
            fb = fc;
        } else {
            a = c;
            fa = fc;
        }
    }
    double x = 0.5 * (a + b);
    if (df) {
        for (int it = 0; it < opt.newton_steps; ++it) {
            double fx = f(x), dfx = df(x);
            if (dfx == 0.0) break;
            double xn = x - fx / dfx;
            if (!(xn > a - (b - a) && xn < b + (b - a))) break;  // keep near bracket
            if (xn == x) break;
            x = xn;
        }
    }
    return x;
}

bool grow_bracket(const std::function<double(double)>& f, double& a, double& b,
                  int max_grow) {
    double fa = f(a), fb = f(b);
    for (int it = 0; it < max_grow; ++it) {
        if (fa * fb <= 0.0) return true;
        b *= 2.0;
        fb = f(b);
        if (fa * fb <= 0.0) return true;
        a *= 0.5;
        fa = f(a);
    }
    return fa * fb <= 0.0;
}

double simpson_uniform(const std::vector<double>& values, double h) {
    const std::size_t n = values.size();
    if (n < 3 || n % 2 == 0) throw NumericalError("simpson_uniform: need odd point count >= 3");
    double s = values.front() + values.back();
    for (std::size_t i = 1; i + 1 < n; ++i) s += values[i] * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    assert(n >= 3 && y_.size() == n);
    m_.assign(n, 0.0);
    // Solve the natural-spline tridiagonal system for second derivatives.
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), r(n, 0.0);
    b[0] = b[n - 1] = 1.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double hm = x_[i] - x_[i - 1], hp = x_[i + 1] - x_[i];
        a[i] = hm / 6.0;
        b[i] = (hm + hp) / 3.0;
        c[i] = hp / 6.0;
        r[i] = (y_[i + 1] - y_[i]) / hp - (y_[i] - y_[i - 1]) / hm;
    }
    for (std::size_t i = 1; i < n; ++i) {
        double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        r[i] -= w * r[i - 1];
    }
    m_[n - 1] = r[n - 1] / b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) m_[i] = (r[i] - c[i] * m_[i + 1]) / b[i];

    cumint_.assign(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        double h = x_[i] - x_[i - 1];
        // exact integral of the cubic segment
        cumint_[i] = cumint_[i - 1] + 0.5 * h * (y_[i - 1] + y_[i]) -
                     h * h * h * (m_[i - 1] + m_[i]) / 24.0;
    }
}

std::size_t CubicSpline::locate(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    if (i == 0) return 0;
    if (i >= x_.size()) return x_.size() - 2;
    return i - 1;
}

double CubicSpline::operator()(double x) const {
    std::size_t i = locate(x);
    double h = x_[i + 1] - x_[i];
    double A = (x_[i + 1] - x) / h, B = (x - x_[i]) / h;
    return A * y_[i] + B * y_[i + 1] +
           ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double x) const {
    std::size_t i = locate(x);
    double h = x_[i + 1] - x_[i];
    double A = (x_[i + 1] - x) / h, B = (x - x_[i]) / h;
    return (y_[i + 1] - y_[i]) / h +
           ((3.0 * B * B - 1.0) * m_[i + 1] - (3.0 * A * A - 1.0) * m_[i]) * h / 6.0;
}

double CubicSpline::integral_from_start(double x) const {
    std::size_t i = locate(x);
    double h = x_[i + 1] - x_[i];
    double A = (x_[i + 1] - x) / h, B = (x - x_[i]) / h;
    // integral over [x_i, x] of the segment polynomial
    double seg = h * (0.5 * (1.0 - A * A) * y_[i] + 0.5 * B * B * y_[i + 1]) +
                 h * h * h / 6.0 *
                     ((-0.25 * (A * A * A * A - 1.0) + 0.5 * (A * A - 1.0)) * m_[i] +
                      (0.25 * B * B * B * B - 0.5 * B * B) * m_[i + 1]);
    return cumint_[i] + seg;
}

}  // namespace windwave
