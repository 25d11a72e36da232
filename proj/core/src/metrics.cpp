#include "tvlinf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "tvlinf/diff_ops.hpp"

namespace tvlinf {

namespace {

constexpr double kSsimSigma = 1.5;
constexpr int kSsimWindow = 11;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

ScalarField clamp_unit(const ScalarField& a, const char* name) {
    double lo = 0.0, hi = 1.0;
    for (double v : a.values()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo < -1e-6 || hi > 1.0 + 1e-6)
        std::cerr << "ssim: " << name << " range [" << lo << ", " << hi
                  << "] clamped to [0, 1]\n";
    ScalarField out = a;
    for (double& v : out.values()) v = std::clamp(v, 0.0, 1.0);
    return out;
}

ScalarField pointwise_product(const ScalarField& a, const ScalarField& b) {
    ScalarField out = a;
    const std::int64_t n = a.size();
    for (std::int64_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
    return out;
}

}  // namespace

double ssim(const ScalarField& a_in, const ScalarField& b_in) {
    check_same_grid(a_in.grid(), b_in.grid(), "ssim");
    const ScalarField a = clamp_unit(a_in, "first argument");
    const ScalarField b = clamp_unit(b_in, "second argument");

    const auto smooth = [](const ScalarField& x) {
        return gaussian_filter(x, kSsimSigma, kSsimWindow);
    };
    const ScalarField mu_a = smooth(a);
    const ScalarField mu_b = smooth(b);
    const ScalarField e_aa = smooth(pointwise_product(a, a));
    const ScalarField e_bb = smooth(pointwise_product(b, b));
    const ScalarField e_ab = smooth(pointwise_product(a, b));

    double acc = 0.0;
    const std::int64_t n = a.size();
    for (std::int64_t i = 0; i < n; ++i) {
        const double va = e_aa[i] - mu_a[i] * mu_a[i];
        const double vb = e_bb[i] - mu_b[i] * mu_b[i];
        const double cov = e_ab[i] - mu_a[i] * mu_b[i];
        acc += ((2.0 * mu_a[i] * mu_b[i] + kC1) * (2.0 * cov + kC2)) /
               ((mu_a[i] * mu_a[i] + mu_b[i] * mu_b[i] + kC1) * (va + vb + kC2));
    }
    return acc / static_cast<double>(n);
}

double psnr(const ScalarField& a, const ScalarField& b) {
    check_same_grid(a.grid(), b.grid(), "psnr");
    double mse = 0.0;
    const std::int64_t n = a.size();
    for (std::int64_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        mse += d * d;
    }
    mse /= static_cast<double>(n);
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return -10.0 * std::log10(mse);
}

double l2_distance(const ScalarField& a, const ScalarField& b) {
    check_same_grid(a.grid(), b.grid(), "l2_distance");
    double s = 0.0;
    const std::int64_t n = a.size();
    for (std::int64_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(a.grid().cell_volume() * s);
}

}  // namespace tvlinf
