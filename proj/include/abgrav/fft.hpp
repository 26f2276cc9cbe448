#pragma once

// Thin RAII wrapper around FFTW for fixed-size complex transforms.
// Plan creation is serialized behind a global mutex (FFTW planning is not
// thread-safe); each Fft owns its plans and buffer, so distinct instances
// can execute concurrently. Plans use FFTW_ESTIMATE so results are
// deterministic across runs.

#include <complex>
#include <cstddef>
#include <vector>

namespace abgrav {

class Fft {
public:
    explicit Fft(std::size_t n);
    ~Fft();

    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    std::size_t size() const { return n_; }

    // In-place unnormalized DFT of `data` (size n).
    void forward(std::complex<double>* data);
    // In-place inverse DFT including the 1/n normalization.
    void backward(std::complex<double>* data);

    void forward(std::vector<std::complex<double>>& data);
    void backward(std::vector<std::complex<double>>& data);

private:
    std::size_t n_;
    void* plan_fwd_;
    void* plan_bwd_;
    void* buffer_; // fftw-aligned scratch the plans run in
};

} // namespace abgrav
