#include "abgrav/wavefunction.hpp"

#include <cmath>

#include "abgrav/errors.hpp"

namespace abgrav {

Wavefunction::Wavefunction(Grid1D grid, std::vector<Complex> amplitudes)
    : grid_(grid), amp_(std::move(amplitudes)) {
    if (amp_.size() != grid_.size())
        throw DomainError("Wavefunction: amplitude count must match the grid");
}

double Wavefunction::norm() const {
    double sum = 0.0;
    for (const auto& a : amp_)
        sum += std::norm(a);
    return std::sqrt(sum * grid_.spacing());
}

void Wavefunction::normalize() {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw DomainError("Wavefunction: cannot normalize a zero/non-finite state");
    const double inv = 1.0 / n;
    for (auto& a : amp_)
        a *= inv;
}

Complex inner_product(const Wavefunction& a, const Wavefunction& b) {
    if (!(a.grid() == b.grid()))
        throw DomainError("inner_product: grids differ");
    Complex sum{0.0, 0.0};
    const auto& va = a.amplitudes();
    const auto& vb = b.amplitudes();
    for (std::size_t i = 0; i < va.size(); ++i)
        sum += std::conj(va[i]) * vb[i];
    return sum * a.grid().spacing();
}

Wavefunction make_gaussian_packet(const Grid1D& grid, double center,
                                  double width, double momentum,
                                  const Constants& constants) {
    constants.validate();
    const double dx = grid.spacing();
    if (!(width >= 4.0 * dx))
        throw ResolutionError("make_gaussian_packet: width < 4 grid spacings");
    if (!(center > grid.x_min() && center < grid.x_max()))
        throw ContainmentError("make_gaussian_packet: center outside the grid");

    // Tail amplitude at the nearest boundary must stay below 1e-12 of peak.
    const double boundary_distance =
        std::min(center - grid.x_min(), grid.x_max() - center);
    const double tail = std::exp(-boundary_distance * boundary_distance /
                                 (4.0 * width * width));
    if (tail > 1e-12)
        throw ContainmentError(
            "make_gaussian_packet: boundary tail exceeds 1e-12 of peak");

    // Momentum-space support (center +/- 4 sigma_k) must stay well inside
    // the spectral range.
    const double k_nyquist = M_PI / dx;
    const double k_center = momentum / constants.hbar;
    const double k_sigma = 1.0 / (2.0 * width);
    if (std::abs(k_center) + 4.0 * k_sigma > 0.5 * k_nyquist)
        throw ResolutionError(
            "make_gaussian_packet: momentum too close to the Nyquist limit");

    std::vector<Complex> amp(grid.size());
    const double inv_four_w2 = 1.0 / (4.0 * width * width);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        const double d = x - center;
        const double envelope = std::exp(-d * d * inv_four_w2);
        const double phase = momentum * x / constants.hbar;
        amp[i] = envelope * Complex{std::cos(phase), std::sin(phase)};
    }
    Wavefunction psi(grid, std::move(amp));
    psi.normalize();
    return psi;
}

} // namespace abgrav
