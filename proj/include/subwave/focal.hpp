#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "subwave/field.hpp"
#include "subwave/grid.hpp"
#include "subwave/math.hpp"

namespace subwave {

enum class FocalModel { vectorial, paraxial };
enum class Illumination { plane_wave, gaussian };

/// Focusing geometry of the reading lens.
struct FocusSpec {
    double wavelength = 780e-9;
    double numerical_aperture = 0.47;
    double medium_index = 1.0;
    FocalModel model = FocalModel::vectorial;
    Illumination illumination = Illumination::plane_wave;
    double gaussian_fill = 1.0;   // pupil 1/e amplitude radius over full aperture
    int quad_nodes = 256;

    void validate() const {
        if (wavelength <= 0.0) throw std::invalid_argument("FocusSpec: wavelength must be positive");
        if (medium_index <= 0.0) throw std::invalid_argument("FocusSpec: medium_index must be positive");
        if (!(numerical_aperture > 0.0) || !(numerical_aperture < medium_index))
            throw std::invalid_argument("FocusSpec: requires 0 < NA < medium_index");
        if (quad_nodes < 8) throw std::invalid_argument("FocusSpec: quad_nodes too small");
        if (illumination == Illumination::gaussian && gaussian_fill <= 0.0)
            throw std::invalid_argument("FocusSpec: gaussian_fill must be positive");
    }

    double theta_max() const { return std::asin(numerical_aperture / medium_index); }
    double wavenumber() const { return 2.0 * pi * medium_index / wavelength; }
};

/// The three Richards-Wolf radial integrals at the focal plane.
struct RWIntegrals {
    std::vector<double> i0, i1, i2;
};

/// I0, I1, I2 over theta in [0, theta_max] with sqrt(cos) apodization
/// (optionally Gaussian-filled pupil), evaluated at the given radii.
inline RWIntegrals rw_radial_integrals(const FocusSpec& spec, const std::vector<double>& radii) {
    spec.validate();
    const double tm = spec.theta_max();
    const double k = spec.wavenumber();
    const Quadrature q = gauss_legendre(spec.quad_nodes, 0.0, tm);

    const int nn = spec.quad_nodes;
    std::vector<double> c0(nn), c1(nn), c2(nn), st(nn);
    const double sin_tm = std::sin(tm);
    for (int j = 0; j < nn; ++j) {
        const double th = q.nodes[j];
        const double s = std::sin(th), c = std::cos(th);
        double apod = std::sqrt(c);
        if (spec.illumination == Illumination::gaussian) {
            const double u = s / (spec.gaussian_fill * sin_tm);
            apod *= std::exp(-u * u);
        }
        st[j] = s;
        c0[j] = apod * s * (1.0 + c) * q.weights[j];
        c1[j] = apod * s * s * q.weights[j];
        c2[j] = apod * s * (1.0 - c) * q.weights[j];
    }

    RWIntegrals out;
    const std::size_t nr = radii.size();
    out.i0.resize(nr);
    out.i1.resize(nr);
    out.i2.resize(nr);
    for (std::size_t i = 0; i < nr; ++i) {
        const double kr = k * radii[i];
        double a0 = 0.0, a1 = 0.0, a2 = 0.0;
        for (int j = 0; j < nn; ++j) {
            const double x = kr * st[j];
            a0 += c0[j] * bessel_j0(x);
            a1 += c1[j] * bessel_j1(x);
            a2 += c2[j] * bessel_j2(x);
        }
        out.i0[i] = a0;
        out.i1[i] = a1;
        out.i2[i] = a2;
    }
    return out;
}

/// Airy amplitude of the uniformly filled aperture, normalized to 1 on axis.
inline double airy_amplitude(const FocusSpec& spec, double r) {
    const double v = spec.wavenumber() * (spec.numerical_aperture / spec.medium_index) * r;
    if (std::abs(v) < 1e-9) return 1.0 - v * v / 8.0;
    return 2.0 * bessel_j1(v) / v;
}

/// Focal-plane field components on a 2-D grid.
struct FocalField2D {
    Grid2D grid;
    std::vector<cdouble> ex, ey, ez;

    double intensity(std::size_t idx) const {
        return std::norm(ex[idx]) + std::norm(ey[idx]) + std::norm(ez[idx]);
    }
    std::vector<double> intensity_map() const {
        std::vector<double> m(grid.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = intensity(i);
        return m;
    }
};

namespace detail {

// Centered grids sample radii on a sparse set of integer lattice distances;
// evaluating the RW integrals once per distinct radius cuts the Bessel work
// by more than an order of magnitude.
inline bool is_centered_square(const Grid2D& g) {
    return g.x == g.y && g.x.x_min == -g.x.x_max;
}

}  // namespace detail

/// Vectorial focal field of an x-polarized beam (Richards-Wolf, z = 0):
/// Ex = I0 + I2 cos2phi, Ey = I2 sin2phi, Ez = 2i I1 cosphi.
inline FocalField2D richards_wolf_focal_field(const FocusSpec& spec, const Grid2D& grid) {
    spec.validate();
    FocalField2D f;
    f.grid = grid;
    f.ex.resize(grid.size());
    f.ey.resize(grid.size());
    f.ez.resize(grid.size());

    const int nx = grid.x.n_points, ny = grid.y.n_points;

    if (detail::is_centered_square(grid)) {
        const double half_dx = 0.5 * grid.x.dx();
        // key: squared doubled-lattice distance a^2 + b^2 with a = 2i - (n-1)
        std::unordered_map<std::int64_t, std::size_t> key_to_slot;
        std::vector<double> radii;
        std::vector<std::int64_t> keys(grid.size());
        for (int i = 0; i < nx; ++i) {
            const std::int64_t a = 2LL * i - (nx - 1);
            for (int j = 0; j < ny; ++j) {
                const std::int64_t b = 2LL * j - (ny - 1);
                const std::int64_t key = a * a + b * b;
                keys[grid.index(i, j)] = key;
                if (key_to_slot.emplace(key, radii.size()).second)
                    radii.push_back(half_dx * std::sqrt(static_cast<double>(key)));
            }
        }
        const RWIntegrals rw = rw_radial_integrals(spec, radii);
        for (int i = 0; i < nx; ++i) {
            const double x = grid.x.x(i);
            for (int j = 0; j < ny; ++j) {
                const double y = grid.y.x(j);
                const std::size_t idx = grid.index(i, j);
                const std::size_t slot = key_to_slot[keys[idx]];
                const double phi = std::atan2(y, x);
                f.ex[idx] = cdouble(rw.i0[slot] + rw.i2[slot] * std::cos(2.0 * phi), 0.0);
                f.ey[idx] = cdouble(rw.i2[slot] * std::sin(2.0 * phi), 0.0);
                f.ez[idx] = cdouble(0.0, 2.0 * rw.i1[slot] * std::cos(phi));
            }
        }
        return f;
    }

    std::vector<double> radii(grid.size());
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            radii[grid.index(i, j)] = std::hypot(grid.x.x(i), grid.y.x(j));
    const RWIntegrals rw = rw_radial_integrals(spec, radii);
    for (int i = 0; i < nx; ++i) {
        const double x = grid.x.x(i);
        for (int j = 0; j < ny; ++j) {
            const double y = grid.y.x(j);
            const std::size_t idx = grid.index(i, j);
            const double phi = std::atan2(y, x);
            f.ex[idx] = cdouble(rw.i0[idx] + rw.i2[idx] * std::cos(2.0 * phi), 0.0);
            f.ey[idx] = cdouble(rw.i2[idx] * std::sin(2.0 * phi), 0.0);
            f.ez[idx] = cdouble(0.0, 2.0 * rw.i1[idx] * std::cos(phi));
        }
    }
    return f;
}

/// Scalar Airy pattern of the filled circular aperture, placed in Ex.
inline FocalField2D paraxial_focal_field(const FocusSpec& spec, const Grid2D& grid) {
    spec.validate();
    FocalField2D f;
    f.grid = grid;
    f.ex.resize(grid.size());
    f.ey.assign(grid.size(), cdouble(0.0, 0.0));
    f.ez.assign(grid.size(), cdouble(0.0, 0.0));
    for (int i = 0; i < grid.x.n_points; ++i) {
        const double x = grid.x.x(i);
        for (int j = 0; j < grid.y.n_points; ++j) {
            const double r = std::hypot(x, grid.y.x(j));
            f.ex[grid.index(i, j)] = cdouble(airy_amplitude(spec, r), 0.0);
        }
    }
    return f;
}

/// Diameter of the smallest centered disc containing 86% of the energy.
/// Grid-quantized: cells sorted by center radius, uniform dx*dy weights.
inline double spot_size_86(const std::vector<double>& intensity, const Grid2D& grid) {
    if (intensity.size() != grid.size())
        throw std::invalid_argument("spot_size_86: intensity size does not match grid");
    double total = 0.0;
    for (double v : intensity) {
        if (v < 0.0) throw std::invalid_argument("spot_size_86: negative intensity");
        total += v;
    }
    if (!(total > 0.0) || !std::isfinite(total))
        throw std::invalid_argument("spot_size_86: energy must be positive and finite");

    std::vector<std::pair<double, double>> cells;  // (radius, energy)
    cells.reserve(grid.size());
    for (int i = 0; i < grid.x.n_points; ++i) {
        const double x = grid.x.x(i);
        for (int j = 0; j < grid.y.n_points; ++j)
            cells.emplace_back(std::hypot(x, grid.y.x(j)), intensity[grid.index(i, j)]);
    }
    std::sort(cells.begin(), cells.end());
    const double target = 0.86 * total;
    double acc = 0.0;
    for (const auto& [r, e] : cells) {
        acc += e;
        if (acc >= target) return 2.0 * r;
    }
    return 2.0 * cells.back().first;  // rounding fallthrough
}

struct NaScanRow {
    double na;
    double d86_paraxial;
    double d86_vectorial;
};

/// Fig-3 style scan: D86 of the paraxial and vectorial spots per NA.
/// The grid window scales as window_lambda_over_na * lambda / NA so all
/// points solve the same dimensionless problem.
inline std::vector<NaScanRow> na_scan(const FocusSpec& base, const std::vector<double>& na_values,
                                      int grid_n = 385, double window_lambda_over_na = 8.0) {
    std::vector<NaScanRow> rows;
    rows.reserve(na_values.size());
    for (double na : na_values) {
        FocusSpec spec = base;
        spec.numerical_aperture = na;
        try {
            spec.validate();
            const double half = window_lambda_over_na * spec.wavelength / na;
            const Grid2D grid = Grid2D::centered_square(half, grid_n);
            const FocalField2D par = paraxial_focal_field(spec, grid);
            const FocalField2D vec = richards_wolf_focal_field(spec, grid);
            rows.push_back({na, spot_size_86(par.intensity_map(), grid),
                            spot_size_86(vec.intensity_map(), grid)});
        } catch (const std::exception& e) {
            throw std::invalid_argument("na_scan at NA=" + std::to_string(na) + ": " + e.what());
        }
    }
    return rows;
}

/// Ex along the y = 0 line of a computed 2-D focal field.
inline FieldProfile focal_slice_x(const FocalField2D& field) {
    const Grid2D& g = field.grid;
    if (g.y.n_points % 2 == 0 || g.y.x_min != -g.y.x_max)
        throw std::invalid_argument("focal_slice_x: grid must contain the y=0 line");
    const int jy = (g.y.n_points - 1) / 2;
    std::vector<cdouble> amp(g.x.n_points);
    for (int i = 0; i < g.x.n_points; ++i) amp[i] = field.ex[g.index(i, jy)];
    return FieldProfile(g.x, std::move(amp));
}

/// Incident reading-beam profile evaluated directly on a 1-D grid
/// (the y = 0 slice: Ex = I0 + I2 at phi = 0).
inline FieldProfile slice_on_grid(const FocusSpec& spec, const Grid1D& grid) {
    spec.validate();
    std::vector<cdouble> amp(grid.n_points);
    if (spec.model == FocalModel::paraxial) {
        for (int i = 0; i < grid.n_points; ++i)
            amp[i] = cdouble(airy_amplitude(spec, std::abs(grid.x(i))), 0.0);
        return FieldProfile(grid, std::move(amp));
    }
    std::vector<double> radii(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) radii[i] = std::abs(grid.x(i));
    const RWIntegrals rw = rw_radial_integrals(spec, radii);
    for (int i = 0; i < grid.n_points; ++i) amp[i] = cdouble(rw.i0[i] + rw.i2[i], 0.0);
    return FieldProfile(grid, std::move(amp));
}

/// Beam waist: the 1/e^2 intensity radius of the focal slice (the Gaussian
/// waist analogue for the not-quite-Gaussian focal spot).
inline double slice_waist(const FocusSpec& spec, int samples = 8001) {
    spec.validate();
    const double r_max = 4.0 * spec.wavelength / (spec.numerical_aperture / 0.47);
    std::vector<double> radii(samples);
    for (int i = 0; i < samples; ++i) radii[i] = r_max * i / (samples - 1);
    const RWIntegrals rw = rw_radial_integrals(spec, radii);
    std::vector<double> inten(samples);
    for (int i = 0; i < samples; ++i) {
        double a;
        if (spec.model == FocalModel::paraxial)
            a = airy_amplitude(spec, radii[i]);
        else
            a = rw.i0[i] + rw.i2[i];
        inten[i] = a * a;
    }
    const double target = inten[0] * std::exp(-2.0);
    for (int i = 1; i < samples; ++i) {
        if (inten[i] < target) {
            const double t = (target - inten[i - 1]) / (inten[i] - inten[i - 1]);
            return radii[i - 1] + t * (radii[i] - radii[i - 1]);
        }
    }
    throw std::runtime_error("slice_waist: no 1/e^2 crossing inside the sampled window");
}

}  // namespace subwave
