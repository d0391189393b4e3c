#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace subwave {

/// Uniform 1-D sampling of [x_min, x_max], endpoints included.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 0.0;
    int n_points = 0;

    Grid1D() = default;
    Grid1D(double a, double b, int n) : x_min(a), x_max(b), n_points(n) {
        if (n < 2) throw std::invalid_argument("Grid1D: n_points must be >= 2");
        if (!(b > a)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
    }

    double dx() const { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const { return x_min + i * dx(); }

    std::vector<double> points() const {
        std::vector<double> p(n_points);
        for (int i = 0; i < n_points; ++i) p[i] = x(i);
        return p;
    }

    /// Index of the sample nearest to position p (clamped).
    int nearest_index(double p) const {
        int i = static_cast<int>(std::lround((p - x_min) / dx()));
        if (i < 0) i = 0;
        if (i >= n_points) i = n_points - 1;
        return i;
    }

    bool contains(double p) const { return p >= x_min && p <= x_max; }

    friend bool operator==(const Grid1D& a, const Grid1D& b) {
        return a.x_min == b.x_min && a.x_max == b.x_max && a.n_points == b.n_points;
    }
};

/// 2-D grid as a pair of 1-D axes; fields stored row-major over (ix, iy).
struct Grid2D {
    Grid1D x;
    Grid1D y;

    Grid2D() = default;
    Grid2D(const Grid1D& gx, const Grid1D& gy) : x(gx), y(gy) {}

    /// Symmetric square grid over [-half, half]^2; odd n keeps the axes on-grid.
    static Grid2D centered_square(double half, int n) {
        return Grid2D(Grid1D(-half, half, n), Grid1D(-half, half, n));
    }

    std::size_t size() const {
        return static_cast<std::size_t>(x.n_points) * static_cast<std::size_t>(y.n_points);
    }
    std::size_t index(int ix, int iy) const {
        return static_cast<std::size_t>(ix) * y.n_points + iy;
    }

    /// True when both axes contain the coordinate lines x=0 and y=0.
    bool has_axis_lines() const {
        return x.n_points % 2 == 1 && y.n_points % 2 == 1 &&
               x.x_min == -x.x_max && y.x_min == -y.x_max;
    }
};

}  // namespace subwave
