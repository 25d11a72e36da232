#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace tvlinf {

/// Regular 1D or 2D sampling grid. Index layout is row-major with x fastest,
/// i.e. index = y * size(0) + x. Spacing is the physical step per axis.
class GridSpec {
public:
    static GridSpec line(int n, double spacing = 1.0);
    static GridSpec plane(int nx, int ny, double spacing = 1.0);
    static GridSpec plane(int nx, int ny, double hx, double hy);

    int dims() const { return dims_; }
    int size(int axis) const { return sizes_[axis]; }
    double spacing(int axis) const { return spacing_[axis]; }

    std::int64_t point_count() const {
        return static_cast<std::int64_t>(sizes_[0]) * sizes_[1];
    }
    /// Volume of one grid cell: h in 1D, hx*hy in 2D. Weights all discrete
    /// integrals so that refined grids approach the continuum values.
    double cell_volume() const { return spacing_[0] * (dims_ == 2 ? spacing_[1] : 1.0); }

    std::int64_t index(int x, int y = 0) const {
        return static_cast<std::int64_t>(y) * sizes_[0] + x;
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    GridSpec(int dims, std::array<int, 2> sizes, std::array<double, 2> spacing);

    int dims_;
    std::array<int, 2> sizes_;
    std::array<double, 2> spacing_;
};

/// One real value per grid point. Values are validated to be finite on
/// construction; fields are treated as immutable values after that, which
/// makes every operation on them safe to run concurrently.
class ScalarField {
public:
    explicit ScalarField(GridSpec grid, double fill = 0.0);
    ScalarField(GridSpec grid, std::vector<double> values);

    const GridSpec& grid() const { return grid_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

    double operator[](std::int64_t i) const { return values_[i]; }
    double& operator[](std::int64_t i) { return values_[i]; }
    double at(int x, int y = 0) const { return values_[grid_.index(x, y)]; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

private:
    GridSpec grid_;
    std::vector<double> values_;
};

/// One real d-vector per grid point (d = grid dims), stored as per-component
/// planes. Holds gradient-valued quantities: w, the splitting variable and
/// the Bregman multiplier.
class VectorField {
public:
    explicit VectorField(GridSpec grid);
    VectorField(GridSpec grid, std::vector<std::vector<double>> components);

    const GridSpec& grid() const { return grid_; }
    int components() const { return grid_.dims(); }

    std::vector<double>& comp(int k) { return comps_[k]; }
    const std::vector<double>& comp(int k) const { return comps_[k]; }

    /// Euclidean norm of the vector stored at grid point i.
    double magnitude(std::int64_t i) const;
    double max_magnitude() const;

private:
    GridSpec grid_;
    std::vector<std::vector<double>> comps_;
};

/// Regularisation weights and stopping control for the solvers.
/// beta_map, when set, supersedes the scalar beta (spatially adapted model).
/// mu == 0 selects the default penalty mu = alpha * min grid spacing, which
/// is plain mu = alpha on unit-spacing image grids.
struct RegParams {
    double alpha = 1.0;
    double beta = 1.0;
    std::optional<ScalarField> beta_map;
    double mu = 0.0;
    int max_iters = 5000;
    double tol = 1e-6;

    void validate(const GridSpec& grid) const;
};

/// Per-solve iterate history. Both histories have exactly `iterations`
/// entries.
struct SolveReport {
    int iterations = 0;
    std::vector<double> energy_history;
    std::vector<double> residual_history;
    bool converged = false;
};

/// h-weighted L2 norm, sqrt(cell_volume * sum v_i^2).
double norm_l2(const ScalarField& v);
double norm_l2(const VectorField& v);

void check_same_grid(const GridSpec& a, const GridSpec& b, const char* where);

}  // namespace tvlinf
