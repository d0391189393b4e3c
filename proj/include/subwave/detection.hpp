#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "subwave/field.hpp"
#include "subwave/grid.hpp"

namespace subwave {

/// Five contiguous detector stripes D1..D5 in the detector plane.
/// Boundaries are snapped onto detector-grid samples so that per-pixel
/// trapezoid integrals tile the aperture integral exactly.
struct PixelArray {
    Grid1D grid;                     // detector grid the pixels live on
    std::array<double, 6> edges{};   // snapped boundary positions (m)
    std::array<int, 6> edge_idx{};   // sample indices of the boundaries

    static PixelArray from_fractions(const Grid1D& detector_grid,
                                     const std::array<double, 6>& fractions,
                                     double aperture_radius) {
        PixelArray p;
        p.grid = detector_grid;
        for (int k = 0; k < 6; ++k) {
            const double pos = fractions[k] * aperture_radius;
            if (!detector_grid.contains(pos))
                throw std::invalid_argument("PixelArray: boundary outside detector grid");
            p.edge_idx[k] = detector_grid.nearest_index(pos);
            p.edges[k] = detector_grid.x(p.edge_idx[k]);
        }
        for (int k = 0; k < 5; ++k)
            if (p.edge_idx[k] >= p.edge_idx[k + 1])
                throw std::invalid_argument("PixelArray: boundaries must be strictly increasing");
        if (std::abs(p.edges[0] + aperture_radius) > 0.5 * detector_grid.dx() ||
            std::abs(p.edges[5] - aperture_radius) > 0.5 * detector_grid.dx())
            throw std::invalid_argument("PixelArray: pixels must cover the lens aperture");
        return p;
    }

    int lo(int k) const { return edge_idx[k]; }
    int hi(int k) const { return edge_idx[k + 1]; }
};

using PixelCounts = std::array<double, 5>;

/// N_k = integral of |u|^2 over pixel D_k. Adjacent pixels share boundary
/// samples with half trapezoid weight each, so sum(N_k) equals the aperture
/// integral to rounding.
inline PixelCounts pixel_photon_numbers(const FieldProfile& u_det, const PixelArray& array) {
    detail::require_same_grid(u_det.grid, array.grid, "pixel_photon_numbers");
    PixelCounts n{};
    for (int k = 0; k < 5; ++k) n[k] = partial_photon_number(u_det, array.lo(k), array.hi(k));
    return n;
}

inline double detected_photons(const PixelCounts& n) {
    double s = 0.0;
    for (double v : n) s += v;
    return s;
}

/// Per-pixel electronic gains adapted to one bit sequence.
struct GainSet {
    std::string target_label;
    std::array<double, 5> sigma{};

    double dot(const PixelCounts& n) const {
        double s = 0.0;
        for (int k = 0; k < 5; ++k) s += sigma[k] * n[k];
        return s;
    }
    double dot_squared(const PixelCounts& n) const {
        double s = 0.0;
        for (int k = 0; k < 5; ++k) s += sigma[k] * sigma[k] * n[k];
        return s;
    }
};

/// Solve the zero-mean condition sum sigma_k N_k = 0 under the symmetry
/// constraints sigma1 = sigma5, sigma2 = sigma4, sigma3 = -sigma1/2, with the
/// normalization sigma1 = 1.
inline GainSet solve_gains(const PixelCounts& n, const std::string& target_label) {
    const double outer = n[0] + n[4];
    const double inner = n[1] + n[3];
    if (!(inner > 0.0))
        throw std::invalid_argument("solve_gains: N2+N4 vanishes (singular pixel geometry)");
    const double s2 = -(outer - 0.5 * n[2]) / inner;
    GainSet g;
    g.target_label = target_label;
    g.sigma = {1.0, s2, -0.5, s2, 1.0};
    return g;
}

/// Eq. S = sum_k sigma_k N_k: intensity weighted by the electronic gains.
inline double signal(const PixelCounts& n, const GainSet& g) { return g.dot(n); }

/// Signal matrix S_i(j): rows = sequence on disc, columns = gain set.
struct SignalMatrix {
    std::vector<std::string> labels;          // class labels, row & column order
    std::vector<std::vector<double>> values;  // values[i][j]

    double max_abs() const {
        double m = 0.0;
        for (const auto& row : values)
            for (double v : row) m = std::max(m, std::abs(v));
        return m;
    }
};

}  // namespace subwave
