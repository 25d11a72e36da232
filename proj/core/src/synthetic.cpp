#include "tvlinf/synthetic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "tvlinf/oracle_1d.hpp"

namespace tvlinf {

ScalarField step_1d(double L, double h_jump, int n) {
    return sample_data(StepData{L, h_jump, 0.0}, n);
}

ScalarField affine_step_1d(double L, double h_jump, double lambda, int n) {
    return sample_data(StepData{L, h_jump, lambda}, n);
}

ScalarField hat_1d(double L, double height, double half_width, int n) {
    if (!(L > 0.0) || !(height > 0.0) || !(half_width > 0.0))
        throw std::invalid_argument("hat_1d: L, height, half_width must be positive");
    return sample_profile(L, n, [&](double x) {
        return height * std::max(0.0, 1.0 - std::abs(x) / half_width);
    });
}

ScalarField circle_2d(int n) {
    if (n < 16) throw std::invalid_argument("circle_2d: n must be >= 16");
    GridSpec g = GridSpec::plane(n, n);
    ScalarField out(g);
    const double c = (n - 1) / 2.0;
    const double R = 0.35 * n;
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            const double dx = x - c, dy = y - c;
            const double r = std::sqrt(dx * dx + dy * dy);
            out[g.index(x, y)] = (r <= R) ? 0.3 + 0.65 * (1.0 - r / R) : 0.15;
        }
    }
    return out;
}

ScalarField pyramid_square_2d(int n) {
    if (n < 16) throw std::invalid_argument("pyramid_square_2d: n must be >= 16");
    GridSpec g = GridSpec::plane(n, n);
    ScalarField out(g);
    const double c = (n - 1) / 2.0;
    const double T = c;        // max square distance
    const double a = 0.5 * T;  // inner square half-width
    const double s = 0.9 / (T + a);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            const double t = std::max(std::abs(x - c), std::abs(y - c));
            const double v = (t >= a) ? s * (T - t) : s * (T - a) + 2.0 * s * (a - t);
            out[g.index(x, y)] = 0.05 + v;
        }
    }
    return out;
}

ScalarField add_gaussian_noise(const ScalarField& field, double variance, std::uint64_t seed) {
    if (variance < 0.0) throw std::invalid_argument("add_gaussian_noise: variance must be >= 0");
    if (variance == 0.0) return field;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, std::sqrt(variance));
    ScalarField out = field;
    for (double& v : out.values()) v += noise(rng);
    return out;
}

}  // namespace tvlinf
