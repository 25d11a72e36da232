#include "tvlinf/prox.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tvlinf {

VectorField shrink_vector(const VectorField& v, double tau) {
    if (tau < 0.0) throw std::invalid_argument("shrink_vector: tau must be >= 0");
    VectorField out(v.grid());
    const std::int64_t n = v.grid().point_count();
    const int d = v.components();
    for (std::int64_t i = 0; i < n; ++i) {
        const double m = v.magnitude(i);
        if (m > tau) {
            const double scale = (m - tau) / m;
            for (int k = 0; k < d; ++k) out.comp(k)[i] = v.comp(k)[i] * scale;
        }
    }
    return out;
}

std::vector<double> project_l1_ball(std::vector<double> v, double radius) {
    std::vector<double> ones(v.size(), 1.0);
    return project_weighted_l1_ball(std::move(v), ones, radius);
}

std::vector<double> project_weighted_l1_ball(std::vector<double> v,
                                             std::span<const double> weights,
                                             double radius) {
    if (radius < 0.0) throw std::invalid_argument("project_weighted_l1_ball: radius must be >= 0");
    if (weights.size() != v.size())
        throw std::invalid_argument("project_weighted_l1_ball: weight count mismatch");
    const std::size_t n = v.size();
    if (radius == 0.0) return std::vector<double>(n, 0.0);

    double mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(weights[i] > 0.0))
            throw std::invalid_argument("project_weighted_l1_ball: weights must be positive");
        mass += weights[i] * std::abs(v[i]);
    }
    if (mass <= radius) return v;

    // Threshold search: z_i = sign(v_i) * max(|v_i| - theta*a_i, 0) with theta
    // the root of sum a_i*(|v_i| - theta*a_i)_+ = radius. Breakpoints sorted
    // descending by |v_i|/a_i.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(v[a]) / weights[a] > std::abs(v[b]) / weights[b];
    });

    double acc_av = 0.0, acc_aa = 0.0, theta = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = order[k];
        acc_av += weights[i] * std::abs(v[i]);
        acc_aa += weights[i] * weights[i];
        const double cand = (acc_av - radius) / acc_aa;
        if (std::abs(v[i]) / weights[i] > cand) theta = cand;
        else break;
    }

    for (std::size_t i = 0; i < n; ++i) {
        const double m = std::abs(v[i]) - theta * weights[i];
        v[i] = (m > 0.0) ? std::copysign(m, v[i]) : 0.0;
    }
    return v;
}

VectorField prox_linf(const VectorField& v, double tau, const ScalarField* beta_map) {
    if (!(tau > 0.0)) throw std::invalid_argument("prox_linf: tau must be positive");
    const std::int64_t n = v.grid().point_count();
    if (beta_map) check_same_grid(beta_map->grid(), v.grid(), "prox_linf");

    std::vector<double> mags(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) mags[static_cast<std::size_t>(i)] = v.magnitude(i);

    std::vector<double> weights(static_cast<std::size_t>(n), 1.0);
    if (beta_map) {
        for (std::int64_t i = 0; i < n; ++i) {
            const double b = (*beta_map)[i];
            if (!(b > 0.0)) throw std::invalid_argument("prox_linf: beta map must be positive");
            weights[static_cast<std::size_t>(i)] = 1.0 / b;
        }
    }
    const std::vector<double> proj = project_weighted_l1_ball(mags, weights, tau);

    VectorField out(v.grid());
    const int d = v.components();
    for (std::int64_t i = 0; i < n; ++i) {
        const double m = mags[static_cast<std::size_t>(i)];
        if (m > 0.0) {
            const double keep = (m - proj[static_cast<std::size_t>(i)]) / m;
            if (keep > 0.0)
                for (int k = 0; k < d; ++k) out.comp(k)[i] = v.comp(k)[i] * keep;
        }
    }
    return out;
}

}  // namespace tvlinf
