#pragma once

// Periodic 1-D spatial grid and its spectral frequencies.
//
// Points are x_i = -L/2 + i*dx, i = 0..n-1. Wavenumbers follow the usual
// DFT ordering: k_j = 2*pi*j/L for j < n/2 and 2*pi*(j-n)/L otherwise,
// so the Nyquist frequency sits at -pi*n/L.

#include <cstddef>
#include <vector>

#include "abgrav/errors.hpp"

namespace abgrav {

class Grid1D {
public:
    Grid1D(std::size_t n_points, double length);

    std::size_t size() const { return n_; }
    double length() const { return length_; }
    double spacing() const { return length_ / static_cast<double>(n_); }
    double x_min() const { return -0.5 * length_; }
    double x_max() const { return 0.5 * length_; }

    double x(std::size_t i) const {
        return x_min() + static_cast<double>(i) * spacing();
    }

    // DFT-ordered wavenumber for index j.
    double wavenumber(std::size_t j) const;

    std::vector<double> positions() const;
    std::vector<double> wavenumbers() const;

    bool operator==(const Grid1D& other) const {
        return n_ == other.n_ && length_ == other.length_;
    }

private:
    std::size_t n_;
    double length_;
};

} // namespace abgrav
