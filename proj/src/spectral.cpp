#include "windwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "windwave/numerics.hpp"

namespace windwave {

CosineBasis::CosineBasis(int n) : N(n) {
    const double pi = std::acos(-1.0);
    q.resize(N + 1);
    for (int i = 0; i <= N; ++i) q(i) = i * pi / N;

    V.resize(N + 1, N + 1);
    for (int i = 0; i <= N; ++i)
        for (int k = 0; k <= N; ++k) V(i, k) = std::cos(k * q(i));

    // DCT-I orthogonality gives the inverse in closed form.
    Vinv.resize(N + 1, N + 1);
    for (int k = 0; k <= N; ++k) {
        double ck = (k == 0 || k == N) ? 1.0 : 2.0;
        for (int i = 0; i <= N; ++i) {
            double ci = (i == 0 || i == N) ? 0.5 : 1.0;
            Vinv(k, i) = ck * ci / N * std::cos(k * q(i));
        }
    }

    Eigen::MatrixXd S1(N + 1, N + 1), C2(N + 1, N + 1);
    for (int i = 0; i <= N; ++i)
        for (int k = 0; k <= N; ++k) {
            S1(i, k) = -k * std::sin(k * q(i));
            C2(i, k) = -double(k) * k * std::cos(k * q(i));
        }
    D1 = S1 * Vinv;
    D2 = C2 * Vinv;

    w.resize(N + 1);
    for (int i = 0; i <= N; ++i) w(i) = (i == 0 || i == N) ? 0.5 / N : 1.0 / N;
}

Eigen::MatrixXd fd_matrix(const Eigen::VectorXd& nodes, int order) {
    const int n = static_cast<int>(nodes.size());
    const int width = std::min(6, n);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        int start = std::clamp(j - width / 2, 0, n - width);
        std::vector<double> pts(width);
        for (int k = 0; k < width; ++k) pts[k] = nodes(start + k);
        auto w = fd_weights(nodes(j), pts, order);
        for (int k = 0; k < width; ++k) D(j, start + k) = w[k];
    }
    return D;
}

double CosineBasis::mode_coeff(const Eigen::VectorXd& values, int k) const {
    if (k == 0) return mean(values);
    double s = 0.0;
    for (int i = 0; i <= N; ++i) s += w(i) * values(i) * std::cos(k * q(i));
    return (k == N ? 1.0 : 2.0) * s;
}

}  // namespace windwave
