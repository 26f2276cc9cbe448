#pragma once

// Complex amplitudes over a periodic Grid1D. States produced by this
// library are normalized so that sum |psi_i|^2 * dx = 1.

#include <complex>
#include <vector>

#include "abgrav/constants.hpp"
#include "abgrav/grid.hpp"

namespace abgrav {

using Complex = std::complex<double>;

class Wavefunction {
public:
    Wavefunction(Grid1D grid, std::vector<Complex> amplitudes);

    const Grid1D& grid() const { return grid_; }
    const std::vector<Complex>& amplitudes() const { return amp_; }
    std::vector<Complex>& amplitudes() { return amp_; }
    std::size_t size() const { return amp_.size(); }

    // sqrt(sum |psi_i|^2 * dx)
    double norm() const;
    void normalize();

private:
    Grid1D grid_;
    std::vector<Complex> amp_;
};

// <a|b> = sum conj(a_i) b_i * dx. Grids must match.
Complex inner_product(const Wavefunction& a, const Wavefunction& b);

// Normalized Gaussian packet exp(-(x-center)^2/(4 width^2) + i p x / hbar).
// width is the position-space standard deviation.
//
// Throws ResolutionError if the grid cannot resolve the packet (width below
// 4 grid spacings, or the momentum-space support too close to Nyquist) and
// ContainmentError if the tails at the domain boundary exceed 1e-12 of the
// peak amplitude.
Wavefunction make_gaussian_packet(const Grid1D& grid, double center,
                                  double width, double momentum,
                                  const Constants& constants);

} // namespace abgrav
