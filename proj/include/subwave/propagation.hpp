#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "subwave/field.hpp"
#include "subwave/grid.hpp"
#include "subwave/math.hpp"

namespace subwave {

enum class PropagationMethod { fraunhofer, rayleigh_sommerfeld };

/// Disc plane -> detector plane geometry. The detector coordinate is the
/// back-focal-plane coordinate xi = f sin(alpha) of an aplanatic lens, so the
/// Fraunhofer kernel exp(-i k x xi / f) carries the exact direction sines.
struct PropagationSpec {
    double wavelength = 780e-9;
    double focal_length = 3e-3;
    double lens_diameter = 0.0;
    PropagationMethod method = PropagationMethod::fraunhofer;

    void validate(double numerical_aperture) const {
        if (wavelength <= 0.0 || focal_length <= 0.0 || lens_diameter <= 0.0)
            throw std::invalid_argument("PropagationSpec: lengths must be positive");
        if (focal_length / wavelength <= 1e3)
            throw std::invalid_argument("PropagationSpec: focal_length must exceed 1e3 wavelengths");
        const double want = std::tan(std::asin(numerical_aperture));
        const double have = lens_diameter / (2.0 * focal_length);
        if (relative_diff(want, have) > 1e-6)
            throw std::invalid_argument(
                "PropagationSpec: lens_diameter/(2 focal_length) inconsistent with NA");
    }

    static double diameter_for(double numerical_aperture, double focal_length) {
        return 2.0 * focal_length * std::tan(std::asin(numerical_aperture));
    }

    double aperture_radius() const { return 0.5 * lens_diameter; }
    double wavenumber() const { return 2.0 * pi / wavelength; }
};

namespace detail {

/// Unitary Fraunhofer transform sampled on an arbitrary output grid:
/// U(xi) = sqrt(k/(2 pi f)) * integral u(x) exp(-i k x xi / f) dx.
inline FieldProfile fraunhofer_transform(const FieldProfile& u, const PropagationSpec& spec,
                                         const Grid1D& out_grid) {
    const double k = spec.wavenumber();
    const double f = spec.focal_length;
    const double pref = std::sqrt(k / (2.0 * pi * f));
    const int ns = u.grid.n_points;

    std::vector<cdouble> weighted(ns);
    for (int i = 0; i < ns; ++i) weighted[i] = u.amplitude[i] * trap_weight(u.grid, i);

    std::vector<cdouble> out(out_grid.n_points);
    for (int m = 0; m < out_grid.n_points; ++m) {
        const double freq = k * out_grid.x(m) / f;
        cdouble acc(0.0, 0.0);
        for (int i = 0; i < ns; ++i) {
            const double ph = -freq * u.grid.x(i);
            acc += weighted[i] * cdouble(std::cos(ph), std::sin(ph));
        }
        out[m] = pref * acc;
    }
    return FieldProfile(out_grid, std::move(out));
}

/// First Rayleigh-Sommerfeld integral in two dimensions (one transverse axis),
/// evaluated on the physical screen at z = f and remapped to the sine
/// coordinate xi with the energy-density Jacobian. The Hankel kernel uses its
/// large-argument expansion; k r >= k f > 2e4 here, so the truncation error
/// is below 1e-8.
inline FieldProfile rayleigh_sommerfeld_transform(const FieldProfile& u,
                                                  const PropagationSpec& spec,
                                                  const Grid1D& out_grid) {
    const double k = spec.wavenumber();
    const double f = spec.focal_length;
    const int ns = u.grid.n_points;

    std::vector<cdouble> weighted(ns);
    for (int i = 0; i < ns; ++i) weighted[i] = u.amplitude[i] * trap_weight(u.grid, i);

    std::vector<cdouble> out(out_grid.n_points);
    for (int m = 0; m < out_grid.n_points; ++m) {
        const double s = out_grid.x(m) / f;  // sin(alpha)
        if (std::abs(s) >= 1.0) {
            out[m] = cdouble(0.0, 0.0);
            continue;
        }
        const double screen_x = f * s / std::sqrt(1.0 - s * s);
        const double jac = std::pow(1.0 - s * s, -0.75);  // sqrt(dX/dxi)
        cdouble acc(0.0, 0.0);
        for (int i = 0; i < ns; ++i) {
            const double dxi = screen_x - u.grid.x(i);
            const double r = std::sqrt(f * f + dxi * dxi);
            const double kr = k * r;
            // H1^(1)(kr) ~ sqrt(2/(pi kr)) e^{i(kr - 3pi/4)} (1 + 3i/(8kr))
            const double amp = std::sqrt(2.0 / (pi * kr));
            const double ph = kr - 0.75 * pi;
            const cdouble h1 = amp * cdouble(std::cos(ph), std::sin(ph)) *
                               cdouble(1.0, 3.0 / (8.0 * kr));
            acc += weighted[i] * h1 / r;
        }
        out[m] = cdouble(0.0, 0.5 * k * f) * acc * jac;
    }
    return FieldProfile(out_grid, std::move(out));
}

}  // namespace detail

/// Zero the field outside the lens aperture |xi| <= lens_diameter/2.
inline FieldProfile apply_aperture(const FieldProfile& u, double aperture_radius) {
    FieldProfile out = u;
    for (int i = 0; i < u.grid.n_points; ++i)
        if (std::abs(u.grid.x(i)) > aperture_radius) out.amplitude[i] = cdouble(0.0, 0.0);
    return out;
}

/// Far field of the disc-plane profile on the detector grid, apertured by the
/// lens. Aperture losses are physical: no renormalization here.
inline FieldProfile to_detector_plane(const FieldProfile& u_disc, const PropagationSpec& spec,
                                      const Grid1D& detector_grid) {
    if (detector_grid.x_min > -spec.aperture_radius() ||
        detector_grid.x_max < spec.aperture_radius())
        throw std::invalid_argument("to_detector_plane: detector grid does not cover the aperture");
    FieldProfile far =
        (spec.method == PropagationMethod::fraunhofer)
            ? detail::fraunhofer_transform(u_disc, spec, detector_grid)
            : detail::rayleigh_sommerfeld_transform(u_disc, spec, detector_grid);
    return apply_aperture(far, spec.aperture_radius());
}

/// Un-apertured transform onto the DFT-conjugate grid of the source sampling;
/// on this grid the discrete transform conserves energy (Parseval).
inline FieldProfile fraunhofer_full_band(const FieldProfile& u, const PropagationSpec& spec) {
    const int n = u.grid.n_points;
    const double band_half = pi * spec.focal_length / (spec.wavenumber() * u.grid.dx());
    const Grid1D out(-band_half, band_half, n);
    return detail::fraunhofer_transform(u, spec, out);
}

}  // namespace subwave
