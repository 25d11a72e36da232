#include "tvlinf/diff_ops.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <vector>

namespace tvlinf {

namespace {

// Half-sample symmetric reflection: ... u1 u0 | u0 u1 ... un-1 | un-1 ...
inline int reflect(int i, int n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -1 - i;
        else i = 2 * n - 1 - i;
    }
    return i;
}

std::vector<double> sampled_gaussian(double sigma, int window) {
    const int radius = window / 2;
    std::vector<double> k(static_cast<std::size_t>(window));
    double sum = 0.0;
    for (int j = -radius; j <= radius; ++j) {
        const double v = std::exp(-0.5 * (j * j) / (sigma * sigma));
        k[static_cast<std::size_t>(j + radius)] = v;
        sum += v;
    }
    for (double& v : k) v /= sum;
    return k;
}

}  // namespace

VectorField gradient(const ScalarField& u) {
    const GridSpec& g = u.grid();
    VectorField out(g);
    const int nx = g.size(0);
    if (g.dims() == 1) {
        const double inv_h = 1.0 / g.spacing(0);
        auto& gx = out.comp(0);
        for (int x = 0; x + 1 < nx; ++x) gx[x] = (u[x + 1] - u[x]) * inv_h;
        gx[nx - 1] = 0.0;
        return out;
    }
    const int ny = g.size(1);
    const double inv_hx = 1.0 / g.spacing(0);
    const double inv_hy = 1.0 / g.spacing(1);
    auto& gx = out.comp(0);
    auto& gy = out.comp(1);
    for (int y = 0; y < ny; ++y) {
        const std::int64_t row = g.index(0, y);
        for (int x = 0; x < nx; ++x) {
            const std::int64_t i = row + x;
            gx[i] = (x + 1 < nx) ? (u[i + 1] - u[i]) * inv_hx : 0.0;
            gy[i] = (y + 1 < ny) ? (u[i + nx] - u[i]) * inv_hy : 0.0;
        }
    }
    return out;
}

ScalarField divergence(const VectorField& p) {
    const GridSpec& g = p.grid();
    ScalarField out(g);
    const int nx = g.size(0);
    if (g.dims() == 1) {
        const double inv_h = 1.0 / g.spacing(0);
        const auto& px = p.comp(0);
        out[0] = px[0] * inv_h;
        for (int x = 1; x + 1 < nx; ++x) out[x] = (px[x] - px[x - 1]) * inv_h;
        out[nx - 1] = -px[nx - 2] * inv_h;
        return out;
    }
    const int ny = g.size(1);
    const double inv_hx = 1.0 / g.spacing(0);
    const double inv_hy = 1.0 / g.spacing(1);
    const auto& px = p.comp(0);
    const auto& py = p.comp(1);
    for (int y = 0; y < ny; ++y) {
        const std::int64_t row = g.index(0, y);
        for (int x = 0; x < nx; ++x) {
            const std::int64_t i = row + x;
            double d;
            if (x == 0) d = px[i] * inv_hx;
            else if (x == nx - 1) d = -px[i - 1] * inv_hx;
            else d = (px[i] - px[i - 1]) * inv_hx;
            if (y == 0) d += py[i] * inv_hy;
            else if (y == ny - 1) d += -py[i - nx] * inv_hy;
            else d += (py[i] - py[i - nx]) * inv_hy;
            out[i] = d;
        }
    }
    return out;
}

ScalarField gaussian_filter(const ScalarField& f, double sigma, int window) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_filter: sigma must be positive");
    if (window < 3 || window % 2 == 0)
        throw std::invalid_argument("gaussian_filter: window must be odd and >= 3");

    const GridSpec& g = f.grid();
    std::vector<double> cur = f.values();
    std::vector<double> next(cur.size());

    for (int axis = 0; axis < g.dims(); ++axis) {
        const int n = g.size(axis);
        int win = window;
        if (win > 2 * n - 1) {
            win = 2 * n - 1;
            std::cerr << "gaussian_filter: window clamped to " << win
                      << " (axis size " << n << ")\n";
        }
        const auto kernel = sampled_gaussian(sigma, win);
        const int radius = win / 2;
        const int nx = g.size(0);
        const int ny = (g.dims() == 2) ? g.size(1) : 1;
        const int stride = (axis == 0) ? 1 : nx;
        const int lines = (axis == 0) ? ny : nx;
        const int line_stride = (axis == 0) ? nx : 1;
        for (int l = 0; l < lines; ++l) {
            const std::int64_t base = static_cast<std::int64_t>(l) * line_stride;
            for (int i = 0; i < n; ++i) {
                double acc = 0.0;
                for (int j = -radius; j <= radius; ++j)
                    acc += kernel[static_cast<std::size_t>(j + radius)] *
                           cur[base + static_cast<std::int64_t>(reflect(i + j, n)) * stride];
                next[base + static_cast<std::int64_t>(i) * stride] = acc;
            }
        }
        cur.swap(next);
    }
    return ScalarField(g, std::move(cur));
}

}  // namespace tvlinf
