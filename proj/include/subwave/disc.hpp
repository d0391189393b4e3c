#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "subwave/field.hpp"
#include "subwave/grid.hpp"
#include "subwave/math.hpp"

namespace subwave {

/// Bit pattern burnt inside the focal spot.
struct BitSequence {
    std::vector<int> bits;    // each 0 or 1
    double pitch = 0.0;       // bit-cell spacing (m)
    double offset = 0.0;      // lateral disc shift vs beam center (m)

    void validate() const {
        if (bits.empty()) throw std::invalid_argument("BitSequence: needs at least one bit");
        if (!(pitch > 0.0)) throw std::invalid_argument("BitSequence: pitch must be positive");
        for (int b : bits)
            if (b != 0 && b != 1) throw std::invalid_argument("BitSequence: bits must be 0 or 1");
    }

    /// Left boundary of bit k's cell; cells are centered on the sequence,
    /// so the middle cell boundary of a 3-bit pattern sits at the offset.
    double cell_boundary(int k) const {
        const int n = static_cast<int>(bits.size());
        return offset + pitch * (k - 0.5 * (n - 1));
    }

    std::string label() const {
        std::string s;
        for (int b : bits) s += static_cast<char>('0' + b);
        return s;
    }

    static BitSequence parse(const std::string& text, double pitch, double offset = 0.0) {
        BitSequence seq;
        seq.pitch = pitch;
        seq.offset = offset;
        for (char c : text) {
            if (c == '0') seq.bits.push_back(0);
            else if (c == '1') seq.bits.push_back(1);
            else throw std::invalid_argument("BitSequence: bad character '" + std::string(1, c) + "'");
        }
        seq.validate();
        return seq;
    }

    BitSequence reversed() const {
        BitSequence r = *this;
        for (std::size_t i = 0; i < bits.size(); ++i) r.bits[i] = bits[bits.size() - 1 - i];
        return r;
    }
};

/// Reflective pi-step mask: phase 0 on pits, pi on holes.
struct PhaseMask {
    Grid1D grid;
    std::vector<double> phase;               // values in {0, pi}
    std::vector<double> transitions;         // level-toggle positions (bit-1 boundaries)
};

/// Build the surface phase from the bit pattern. The level starts as a pit
/// left of the first cell; a 1-bit toggles it at its cell's left boundary,
/// a 0-bit keeps it; outside the cells the level extends unchanged.
/// Toggles act on samples at or right of the boundary (sharp steps).
inline PhaseMask mask_from_bits(const BitSequence& seq, const Grid1D& grid) {
    seq.validate();
    const int n = static_cast<int>(seq.bits.size());
    const double span_lo = seq.cell_boundary(0) - 0.5 * seq.pitch;
    const double span_hi = seq.cell_boundary(n - 1) + 0.5 * seq.pitch;
    if (grid.x_min > span_lo || grid.x_max < span_hi)
        throw std::invalid_argument("mask_from_bits: grid narrower than the bit span");

    PhaseMask m;
    m.grid = grid;
    m.phase.assign(grid.n_points, 0.0);
    for (int k = 0; k < n; ++k)
        if (seq.bits[k] == 1) m.transitions.push_back(seq.cell_boundary(k));

    for (int i = 0; i < grid.n_points; ++i) {
        const double x = grid.x(i);
        int toggles = 0;
        for (double t : m.transitions)
            if (x >= t) ++toggles;
        m.phase[i] = (toggles % 2 == 0) ? 0.0 : pi;
    }
    return m;
}

/// u_out = u_in * exp(i phase); unit-modulus, so photon number is conserved.
inline FieldProfile reflect(const FieldProfile& incident, const PhaseMask& mask) {
    detail::require_same_grid(incident.grid, mask.grid, "reflect");
    FieldProfile out = incident;
    for (int i = 0; i < incident.grid.n_points; ++i)
        out.amplitude[i] *= std::polar(1.0, mask.phase[i]);
    return out;
}

inline void write_mask_csv(const PhaseMask& m, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "x,phase\n";
    char buf[64];
    for (int i = 0; i < m.grid.n_points; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", m.grid.x(i), m.phase[i]);
        os << buf;
    }
}

}  // namespace subwave
