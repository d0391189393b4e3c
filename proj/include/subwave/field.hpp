#pragma once

#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "subwave/grid.hpp"

namespace subwave {

using cdouble = std::complex<double>;

/// Transverse field profile in photon-amplitude units: |u(x)|^2 integrates
/// to photon number directly.
struct FieldProfile {
    Grid1D grid;
    std::vector<cdouble> amplitude;

    FieldProfile() = default;
    FieldProfile(const Grid1D& g, std::vector<cdouble> a) : grid(g), amplitude(std::move(a)) {
        if (static_cast<int>(amplitude.size()) != grid.n_points)
            throw std::invalid_argument("FieldProfile: amplitude size does not match grid");
    }

    static FieldProfile zeros(const Grid1D& g) {
        return FieldProfile(g, std::vector<cdouble>(g.n_points, cdouble(0.0, 0.0)));
    }
};

namespace detail {

inline void require_same_grid(const Grid1D& a, const Grid1D& b, const char* op) {
    if (!(a == b)) throw std::invalid_argument(std::string(op) + ": grid mismatch");
}

/// Trapezoid weights: dx everywhere, dx/2 at the ends.
inline double trap_weight(const Grid1D& g, int i) {
    const double dx = g.dx();
    return (i == 0 || i == g.n_points - 1) ? 0.5 * dx : dx;
}

}  // namespace detail

/// Total photon number: trapezoid integral of |u|^2 over the grid.
inline double photon_number(const FieldProfile& f) {
    double s = 0.0;
    for (int i = 0; i < f.grid.n_points; ++i)
        s += std::norm(f.amplitude[i]) * detail::trap_weight(f.grid, i);
    return s;
}

/// Inner product integral conj(u_f) u_g dx; conjugate-symmetric in its arguments.
inline cdouble overlap(const FieldProfile& f, const FieldProfile& g) {
    detail::require_same_grid(f.grid, g.grid, "overlap");
    cdouble s(0.0, 0.0);
    for (int i = 0; i < f.grid.n_points; ++i)
        s += std::conj(f.amplitude[i]) * g.amplitude[i] * detail::trap_weight(f.grid, i);
    return s;
}

/// Rescale so photon_number(result) == target; shape is preserved.
inline FieldProfile normalize(const FieldProfile& f, double target) {
    if (target < 0.0) throw std::invalid_argument("normalize: negative photon target");
    const double n = photon_number(f);
    if (n <= 0.0) throw std::invalid_argument("normalize: zero-energy profile");
    const double scale = std::sqrt(target / n);
    FieldProfile out = f;
    for (auto& a : out.amplitude) a *= scale;
    return out;
}

/// Trapezoid integral of |u|^2 between sample indices [i0, i1].
inline double partial_photon_number(const FieldProfile& f, int i0, int i1) {
    if (i0 < 0 || i1 >= f.grid.n_points || i0 >= i1)
        throw std::invalid_argument("partial_photon_number: bad index range");
    const double dx = f.grid.dx();
    double s = 0.5 * (std::norm(f.amplitude[i0]) + std::norm(f.amplitude[i1]));
    for (int i = i0 + 1; i < i1; ++i) s += std::norm(f.amplitude[i]);
    return s * dx;
}

/// Trapezoid integral of conj(u_f) u_g between sample indices [i0, i1].
inline cdouble partial_overlap(const FieldProfile& f, const FieldProfile& g, int i0, int i1) {
    detail::require_same_grid(f.grid, g.grid, "partial_overlap");
    if (i0 < 0 || i1 >= f.grid.n_points || i0 >= i1)
        throw std::invalid_argument("partial_overlap: bad index range");
    const double dx = f.grid.dx();
    cdouble s = 0.5 * (std::conj(f.amplitude[i0]) * g.amplitude[i0] +
                       std::conj(f.amplitude[i1]) * g.amplitude[i1]);
    for (int i = i0 + 1; i < i1; ++i) s += std::conj(f.amplitude[i]) * g.amplitude[i];
    return s * dx;
}

/// L2-relative distance between two sampled intensity profiles.
inline double intensity_l2_distance(const FieldProfile& a, const FieldProfile& b) {
    detail::require_same_grid(a.grid, b.grid, "intensity_l2_distance");
    double d2 = 0.0, na = 0.0, nb = 0.0;
    for (int i = 0; i < a.grid.n_points; ++i) {
        const double w = detail::trap_weight(a.grid, i);
        const double ia = std::norm(a.amplitude[i]);
        const double ib = std::norm(b.amplitude[i]);
        d2 += (ia - ib) * (ia - ib) * w;
        na += ia * ia * w;
        nb += ib * ib * w;
    }
    const double den = std::sqrt(std::max(na, nb));
    return den == 0.0 ? 0.0 : std::sqrt(d2) / den;
}

inline FieldProfile mirrored(const FieldProfile& f) {
    FieldProfile out = f;
    const int n = f.grid.n_points;
    for (int i = 0; i < n; ++i) out.amplitude[i] = f.amplitude[n - 1 - i];
    return out;
}

/// CSV with header x,re,im; one row per grid point.
inline void write_profile_csv(const FieldProfile& f, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "x,re,im\n";
    char buf[96];
    for (int i = 0; i < f.grid.n_points; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", f.grid.x(i),
                      f.amplitude[i].real(), f.amplitude[i].imag());
        os << buf;
    }
}

inline FieldProfile read_profile_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::getline(is, line);  // header
    std::vector<double> xs;
    std::vector<cdouble> amps;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        double v[3] = {0, 0, 0};
        for (int k = 0; k < 3 && std::getline(ss, tok, ','); ++k) v[k] = std::stod(tok);
        xs.push_back(v[0]);
        amps.emplace_back(v[1], v[2]);
    }
    if (xs.size() < 2) throw std::runtime_error("profile csv too short: " + path);
    Grid1D g(xs.front(), xs.back(), static_cast<int>(xs.size()));
    return FieldProfile(g, std::move(amps));
}

}  // namespace subwave
