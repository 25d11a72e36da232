#include "tensor_ops.hpp"

namespace tvlinf::detail {

void axis_forward_diff(const GridSpec& g, const std::vector<double>& in, int axis,
                       std::vector<double>& out) {
    const int nx = g.size(0);
    const int ny = (g.dims() == 2) ? g.size(1) : 1;
    const int n = g.size(axis);
    const int stride = (axis == 0) ? 1 : nx;
    const double inv_h = 1.0 / g.spacing(axis);
    out.assign(in.size(), 0.0);
    const int lines = (axis == 0) ? ny : nx;
    const int line_stride = (axis == 0) ? nx : 1;
    for (int l = 0; l < lines; ++l) {
        const std::int64_t base = static_cast<std::int64_t>(l) * line_stride;
        for (int i = 0; i + 1 < n; ++i) {
            const std::int64_t at = base + static_cast<std::int64_t>(i) * stride;
            out[at] = (in[at + stride] - in[at]) * inv_h;
        }
    }
}

void axis_divergence(const GridSpec& g, const std::vector<double>& in, int axis,
                     std::vector<double>& out_accum) {
    const int nx = g.size(0);
    const int ny = (g.dims() == 2) ? g.size(1) : 1;
    const int n = g.size(axis);
    const int stride = (axis == 0) ? 1 : nx;
    const double inv_h = 1.0 / g.spacing(axis);
    const int lines = (axis == 0) ? ny : nx;
    const int line_stride = (axis == 0) ? nx : 1;
    for (int l = 0; l < lines; ++l) {
        const std::int64_t base = static_cast<std::int64_t>(l) * line_stride;
        for (int i = 0; i < n; ++i) {
            const std::int64_t at = base + static_cast<std::int64_t>(i) * stride;
            double d;
            if (i == 0) d = in[at];
            else if (i == n - 1) d = -in[at - stride];
            else d = in[at] - in[at - stride];
            out_accum[at] += d * inv_h;
        }
    }
}

SymTensorField sym_gradient(const VectorField& w) {
    const GridSpec& g = w.grid();
    SymTensorField out(g);
    if (g.dims() == 1) {
        axis_forward_diff(g, w.comp(0), 0, out.comps[0]);
        return out;
    }
    std::vector<double> tmp_a, tmp_b;
    axis_forward_diff(g, w.comp(0), 0, out.comps[0]);  // e_xx
    axis_forward_diff(g, w.comp(1), 1, out.comps[1]);  // e_yy
    axis_forward_diff(g, w.comp(0), 1, tmp_a);
    axis_forward_diff(g, w.comp(1), 0, tmp_b);
    auto& exy = out.comps[2];
    for (std::size_t i = 0; i < exy.size(); ++i) exy[i] = 0.5 * (tmp_a[i] + tmp_b[i]);
    return out;
}

VectorField sym_divergence(const SymTensorField& q) {
    const GridSpec& g = q.grid;
    VectorField out(g);
    if (g.dims() == 1) {
        axis_divergence(g, q.comps[0], 0, out.comp(0));
        return out;
    }
    axis_divergence(g, q.comps[0], 0, out.comp(0));
    axis_divergence(g, q.comps[2], 1, out.comp(0));
    axis_divergence(g, q.comps[2], 0, out.comp(1));
    axis_divergence(g, q.comps[1], 1, out.comp(1));
    return out;
}

}  // namespace tvlinf::detail
