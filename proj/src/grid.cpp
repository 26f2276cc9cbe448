#include "abgrav/grid.hpp"

#include <cmath>

namespace abgrav {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

Grid1D::Grid1D(std::size_t n_points, double length)
    : n_(n_points), length_(length) {
    if (n_ < 16 || !is_power_of_two(n_))
        throw DomainError("Grid1D: n_points must be a power of two >= 16");
    if (!(length_ > 0.0) || !std::isfinite(length_))
        throw DomainError("Grid1D: length must be positive and finite");
}

double Grid1D::wavenumber(std::size_t j) const {
    const double dk = 2.0 * M_PI / length_;
    const auto half = n_ / 2;
    const auto idx = (j < half) ? static_cast<double>(j)
                                : static_cast<double>(j) - static_cast<double>(n_);
    return dk * idx;
}

std::vector<double> Grid1D::positions() const {
    std::vector<double> xs(n_);
    for (std::size_t i = 0; i < n_; ++i)
        xs[i] = x(i);
    return xs;
}

std::vector<double> Grid1D::wavenumbers() const {
    std::vector<double> ks(n_);
    for (std::size_t j = 0; j < n_; ++j)
        ks[j] = wavenumber(j);
    return ks;
}

} // namespace abgrav
