#include "abgrav/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "abgrav/errors.hpp"

namespace abgrav {

namespace {
// FFTW planning is not thread safe; executing plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

Fft::Fft(std::size_t n) : n_(n) {
    if (n_ == 0)
        throw DomainError("Fft: size must be positive");
    buffer_ = fftw_alloc_complex(n_);
    if (buffer_ == nullptr)
        throw Error("Fft: allocation failed");
    std::lock_guard<std::mutex> lock(planner_mutex());
    // FFTW_ESTIMATE keeps plans deterministic and avoids trashing the input.
    auto* buf = static_cast<fftw_complex*>(buffer_);
    plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n_), buf, buf,
                                 FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_1d(static_cast<int>(n_), buf, buf,
                                 FFTW_BACKWARD, FFTW_ESTIMATE);
    if (plan_fwd_ == nullptr || plan_bwd_ == nullptr)
        throw Error("Fft: planning failed");
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (plan_fwd_ != nullptr)
        fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    if (plan_bwd_ != nullptr)
        fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    if (buffer_ != nullptr)
        fftw_free(buffer_);
}

void Fft::forward(std::complex<double>* data) {
    auto* buf = static_cast<fftw_complex*>(buffer_);
    auto* src = reinterpret_cast<fftw_complex*>(data);
    for (std::size_t i = 0; i < n_; ++i) {
        buf[i][0] = src[i][0];
        buf[i][1] = src[i][1];
    }
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    for (std::size_t i = 0; i < n_; ++i) {
        src[i][0] = buf[i][0];
        src[i][1] = buf[i][1];
    }
}

void Fft::backward(std::complex<double>* data) {
    auto* buf = static_cast<fftw_complex*>(buffer_);
    auto* src = reinterpret_cast<fftw_complex*>(data);
    for (std::size_t i = 0; i < n_; ++i) {
        buf[i][0] = src[i][0];
        buf[i][1] = src[i][1];
    }
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        src[i][0] = buf[i][0] * scale;
        src[i][1] = buf[i][1] * scale;
    }
}

void Fft::forward(std::vector<std::complex<double>>& data) {
    if (data.size() != n_)
        throw DomainError("Fft: size mismatch");
    forward(data.data());
}

void Fft::backward(std::vector<std::complex<double>>& data) {
    if (data.size() != n_)
        throw DomainError("Fft: size mismatch");
    backward(data.data());
}

} // namespace abgrav
