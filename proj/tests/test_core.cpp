// Grid, FFT, wavefunction, potential-program and report-format tests.
// Oracles: naive O(n^2) DFT, closed-form Gaussian overlaps, high-resolution
// midpoint quadrature for program integrals, strtod round-trips.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "abgrav/fft.hpp"
#include "abgrav/grid.hpp"
#include "abgrav/potential_program.hpp"
#include "abgrav/report.hpp"
#include "abgrav/wavefunction.hpp"

using namespace abgrav;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Independent midpoint quadrature of program.value over [t0, t1].
double quad_program(const PotentialProgram& p, double t0, double t1,
                    std::size_t n = 200000) {
    double sum = 0.0;
    const double h = (t1 - t0) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        sum += p.value(t0 + (static_cast<double>(i) + 0.5) * h);
    return sum * h;
}

std::vector<std::complex<double>> naive_dft(
    const std::vector<std::complex<double>>& in) {
    const std::size_t n = in.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double angle = -2.0 * kPi * static_cast<double>(j) *
                                 static_cast<double>(k) /
                                 static_cast<double>(n);
            sum += in[j] * std::polar(1.0, angle);
        }
        out[k] = sum;
    }
    return out;
}

} // namespace

TEST_CASE("grid geometry") {
    Grid1D grid(16, 8.0);
    CHECK(grid.size() == 16);
    CHECK(grid.length() == doctest::Approx(8.0));
    CHECK(grid.spacing() == doctest::Approx(0.5));
    CHECK(grid.x_min() == doctest::Approx(-4.0));
    CHECK(grid.x_max() == doctest::Approx(4.0));
    CHECK(grid.x(0) == doctest::Approx(-4.0));
    CHECK(grid.x(15) == doctest::Approx(3.5));
    const auto xs = grid.positions();
    REQUIRE(xs.size() == 16);
    CHECK(xs[1] - xs[0] == doctest::Approx(0.5));
}

TEST_CASE("grid wavenumbers follow DFT ordering") {
    Grid1D grid(32, 10.0);
    const double dk = 2.0 * kPi / 10.0;
    const auto ks = grid.wavenumbers();
    REQUIRE(ks.size() == 32);
    for (std::size_t j = 0; j < 32; ++j) {
        const double expect =
            (j < 16) ? dk * static_cast<double>(j)
                     : dk * (static_cast<double>(j) - 32.0);
        CHECK(ks[j] == doctest::Approx(expect).epsilon(1e-14));
        CHECK(grid.wavenumber(j) == doctest::Approx(expect).epsilon(1e-14));
    }
    // Most negative frequency is the Nyquist wavenumber -pi n / L.
    CHECK(ks[16] == doctest::Approx(-kPi * 32.0 / 10.0));
}

TEST_CASE("grid rejects bad shapes") {
    CHECK_THROWS_AS(Grid1D(0, 1.0), DomainError);
    CHECK_THROWS_AS(Grid1D(8, 1.0), DomainError);   // too small
    CHECK_THROWS_AS(Grid1D(48, 1.0), DomainError);  // not a power of two
    CHECK_THROWS_AS(Grid1D(16, 0.0), DomainError);
    CHECK_THROWS_AS(Grid1D(16, -2.0), DomainError);
}

TEST_CASE("fft matches a naive DFT") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::complex<double>> data(16);
    for (auto& v : data)
        v = {dist(rng), dist(rng)};
    const auto expect = naive_dft(data);
    auto got = data;
    Fft fft(16);
    fft.forward(got);
    for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].real() == doctest::Approx(expect[k].real()).epsilon(1e-12));
        CHECK(got[k].imag() == doctest::Approx(expect[k].imag()).epsilon(1e-12));
    }
}

TEST_CASE("fft round trip and normalization") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::complex<double>> data(256);
    for (auto& v : data)
        v = {dist(rng), dist(rng)};
    const auto original = data;

    Fft fft(256);
    fft.forward(data);
    // Parseval: sum |X_k|^2 = n sum |x_j|^2 for the unnormalized DFT.
    double power_x = 0.0;
    double power_k = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        power_x += std::norm(original[i]);
        power_k += std::norm(data[i]);
    }
    CHECK(power_k == doctest::Approx(256.0 * power_x).epsilon(1e-12));

    fft.backward(data);
    for (std::size_t i = 0; i < data.size(); ++i)
        CHECK(std::abs(data[i] - original[i]) < 1e-12);
}

TEST_CASE("fft of a delta is flat") {
    std::vector<std::complex<double>> data(64, 0.0);
    data[0] = 1.0;
    Fft fft(64);
    fft.forward(data);
    for (const auto& v : data)
        CHECK(std::abs(v - std::complex<double>(1.0, 0.0)) < 1e-13);
}

TEST_CASE("fft rejects mismatched sizes") {
    Fft fft(32);
    std::vector<std::complex<double>> wrong(16);
    CHECK_THROWS_AS(fft.forward(wrong), DomainError);
    CHECK_THROWS_AS(fft.backward(wrong), DomainError);
}

TEST_CASE("wavefunction norm and inner product") {
    Grid1D grid(64, 16.0);
    std::vector<Complex> flat(64, Complex{1.0, 0.0});
    Wavefunction psi(grid, flat);
    // sum |1|^2 dx = 64 * 0.25 = 16.
    CHECK(psi.norm() == doctest::Approx(4.0));
    psi.normalize();
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-14));

    std::vector<Complex> other(64, Complex{0.0, 1.0});
    Wavefunction phi(grid, other);
    phi.normalize();
    const Complex ip = inner_product(psi, phi);
    CHECK(ip.real() == doctest::Approx(0.0));
    CHECK(ip.imag() == doctest::Approx(1.0).epsilon(1e-14));
    const Complex swapped = inner_product(phi, psi);
    CHECK(std::abs(swapped - std::conj(ip)) < 1e-14);

    Grid1D smaller(32, 16.0);
    std::vector<Complex> tiny(32, Complex{1.0, 0.0});
    Wavefunction mismatched(smaller, tiny);
    CHECK_THROWS_AS(inner_product(psi, mismatched), DomainError);
    CHECK_THROWS_AS(Wavefunction(grid, tiny), DomainError);
}

TEST_CASE("gaussian packet moments and overlap") {
    Constants constants;
    Grid1D grid(1024, 200.0);
    const double width = 4.0;
    Wavefunction psi = make_gaussian_packet(grid, 3.0, width, 0.0, constants);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-13));

    double mean = 0.0;
    double var = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = std::norm(psi.amplitudes()[i]) * grid.spacing();
        mean += grid.x(i) * w;
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = std::norm(psi.amplitudes()[i]) * grid.spacing();
        const double d = grid.x(i) - mean;
        var += d * d * w;
    }
    CHECK(mean == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(var == doctest::Approx(width * width).epsilon(1e-10));

    // Same packet boosted to momentum p: |<psi_0|psi_p>| = exp(-p^2 w^2 /
    // (2 hbar^2)) for a shared center.
    const double p = 0.3;
    Wavefunction boosted = make_gaussian_packet(grid, 3.0, width, p, constants);
    const double overlap = std::abs(inner_product(psi, boosted));
    const double expect =
        std::exp(-p * p * width * width / (2.0 * constants.hbar * constants.hbar));
    CHECK(overlap == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("gaussian packet rejects unresolvable requests") {
    Constants constants;
    Grid1D grid(128, 100.0);
    CHECK_THROWS_AS(
        make_gaussian_packet(grid, 0.0, 2.0, 0.0, constants),  // < 4 dx
        ResolutionError);
    CHECK_THROWS_AS(make_gaussian_packet(grid, 80.0, 5.0, 0.0, constants),
                    ContainmentError);  // center off the grid
    CHECK_THROWS_AS(make_gaussian_packet(grid, 45.0, 5.0, 0.0, constants),
                    ContainmentError);  // boundary tail too fat
    CHECK_THROWS_AS(make_gaussian_packet(grid, 0.0, 4.0, 10.0, constants),
                    ResolutionError);  // past the Nyquist guard
}

TEST_CASE("segment values and closed-form integrals") {
    const Segment flat = Segment::constant(2.0, 3.0);
    CHECK(flat.value(0.0) == doctest::Approx(2.0));
    CHECK(flat.value(1.7) == doctest::Approx(2.0));
    CHECK(flat.integral_to(2.0) == doctest::Approx(4.0));
    CHECK(flat.integral() == doctest::Approx(6.0));

    const Segment ramp = Segment::ramp(0.0, 1.0, 2.0);
    CHECK(ramp.value(0.0) == doctest::Approx(0.0));
    CHECK(ramp.value(1.0) == doctest::Approx(0.5));
    CHECK(ramp.value(2.0) == doctest::Approx(1.0));
    // C1: the slope vanishes at both endpoints.
    const double eps = 1e-6;
    CHECK(std::abs(ramp.value(eps) - ramp.value(0.0)) / eps < 1e-5);
    CHECK(std::abs(ramp.value(2.0) - ramp.value(2.0 - eps)) / eps < 1e-5);
    // Integral of the symmetric ramp is half the box.
    CHECK(ramp.integral() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(Segment::constant(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(Segment::ramp(0.0, 1.0, -1.0), DomainError);
}

TEST_CASE("program integrals agree with quadrature") {
    const PotentialProgram program({
        Segment::constant(0.0, 1.0),
        Segment::ramp(0.0, 2.0, 1.0),
        Segment::constant(2.0, 0.5),
        Segment::ramp(2.0, 0.0, 1.0),
        Segment::constant(0.0, 1.0),
    });
    CHECK(program.total_duration() == doctest::Approx(4.5));
    CHECK(program.integral() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(program.integral() ==
          doctest::Approx(quad_program(program, 0.0, 4.5)).epsilon(1e-9));
    // Sub-windows, including ones that straddle segment boundaries.
    CHECK(program.integral(0.5, 1.25) ==
          doctest::Approx(quad_program(program, 0.5, 1.25)).epsilon(1e-9));
    CHECK(program.integral(1.9, 3.1) ==
          doctest::Approx(quad_program(program, 1.9, 3.1)).epsilon(1e-9));
    CHECK(program.integral(0.0, 4.5) == doctest::Approx(program.integral()));
    CHECK(program.integral(2.0, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("program support and bounds checking") {
    const PotentialProgram program({Segment::constant(1.0, 2.0)});
    CHECK(program.value(0.0) == doctest::Approx(1.0));
    CHECK(program.value(2.0) == doctest::Approx(1.0));
    CHECK(program.value(2.0 + 1e-13) == doctest::Approx(1.0));  // slack
    CHECK_THROWS_AS(program.value(-0.1), DomainError);
    CHECK_THROWS_AS(program.value(2.1), DomainError);
    CHECK_THROWS_AS(program.integral(-0.5, 1.0), DomainError);
    CHECK_THROWS_AS(program.integral(0.0, 2.5), DomainError);
    CHECK_THROWS_AS(program.integral(1.5, 0.5), DomainError);

    const PotentialProgram empty;
    CHECK(empty.empty());
    CHECK(empty.total_duration() == doctest::Approx(0.0));
    CHECK(empty.value(0.0) == doctest::Approx(0.0));
    CHECK(empty.integral() == doctest::Approx(0.0));
}

TEST_CASE("program continuity, offsets and concatenation") {
    const PotentialProgram smooth({
        Segment::constant(0.0, 1.0),
        Segment::ramp(0.0, 1.5, 1.0),
        Segment::constant(1.5, 1.0),
    });
    CHECK(smooth.is_continuous());
    CHECK(smooth.max_abs_level() == doctest::Approx(1.5));

    const PotentialProgram jumpy({
        Segment::constant(0.0, 1.0),
        Segment::constant(1.0, 1.0),
    });
    CHECK_FALSE(jumpy.is_continuous());

    const PotentialProgram shifted = smooth.offset_by(-2.0);
    for (double t : {0.0, 0.5, 1.3, 2.2, 3.0})
        CHECK(shifted.value(t) == doctest::Approx(smooth.value(t) - 2.0));
    CHECK(shifted.integral() ==
          doctest::Approx(smooth.integral() - 2.0 * smooth.total_duration()));

    const PotentialProgram joined = smooth.then(jumpy);
    CHECK(joined.total_duration() == doctest::Approx(5.0));
    CHECK(joined.value(3.5) == doctest::Approx(0.0));
    CHECK(joined.value(4.5) == doctest::Approx(1.0));
    CHECK(joined.integral() ==
          doctest::Approx(smooth.integral() + jumpy.integral()));
}

TEST_CASE("format_full round-trips doubles exactly") {
    for (double v : {0.0, 1.0, -0.005, 1.0 / 3.0, 2.0e-13, -7.25e114,
                     3.141592653589793, 1e-300}) {
        const std::string s = format_full(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv writers emit the documented headers") {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / "abgrav_core_test_csv";
    fs::create_directories(dir);

    TwoArmResult result{
        PhaseComparison{},
        EvolutionRecord{{0.0, 0.1}, {1.0, 1.0}, {0.0, 0.0}, {0.0, 0.0},
                        {0.01, 0.01}, {0.0, -0.25}},
        EvolutionRecord{{0.0, 0.1}, {1.0, 1.0}, {0.0, 0.0}, {0.0, 0.0},
                        {0.01, 0.01}, {0.0, -0.5}},
        {0.0, -0.25},
        Wavefunction(Grid1D(16, 8.0), std::vector<Complex>(16, 0.25)),
        Wavefunction(Grid1D(16, 8.0), std::vector<Complex>(16, 0.25)),
    };
    const std::string history = (dir / "history.csv").string();
    write_history_csv(history, result);
    std::ifstream in(history);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "t,norm1,norm2,mean_p1,mean_p2,phase1,phase2,dphi_unwrapped");
    std::size_t rows = 0;
    while (std::getline(in, line))
        if (!line.empty())
            ++rows;
    CHECK(rows == 2);

    FringePattern fringes{{-1.0, 0.0, 1.0}, {0.5, 2.0, 0.5}, 0.1};
    const std::string fringe_path = (dir / "fringes.csv").string();
    write_fringes_csv(fringe_path, fringes);
    std::ifstream fin(fringe_path);
    REQUIRE(std::getline(fin, line));
    CHECK(line == "screen_position,intensity");

    const std::vector<SweepRow> sweep{{1.0, -0.5, -0.5, 0.0}};
    const std::string sweep_path = (dir / "sweep.csv").string();
    write_sweep_csv(sweep_path, sweep);
    std::ifstream sin(sweep_path);
    REQUIRE(std::getline(sin, line));
    CHECK(line == "value,numeric_phase,analytic_phase,residual");
    REQUIRE(std::getline(sin, line));
    CHECK(line.substr(0, 2) == "1,");

    fs::remove_all(dir);
}

TEST_CASE("run report serializes comparison and convergence") {
    RunReport report;
    report.scenario_echo = "route = flat_electric\n";
    report.comparison.numeric_phase = -1.25;
    report.comparison.analytic_phase = -1.25;
    report.timing_seconds = 0.5;
    report.convergence = ConvergencePair{1e-3, 4e-8, 1e-8, 4.0};
    const std::string json = report.to_json();
    CHECK(json.find("\"numeric_phase\": -1.25") != std::string::npos);
    CHECK(json.find("\"ratio\": 4.0") != std::string::npos);
    CHECK(json.find("\"scenario\"") != std::string::npos);
    CHECK(json.back() == '\n');

    RunReport bare;
    CHECK(bare.to_json().find("convergence") == std::string::npos);
}
