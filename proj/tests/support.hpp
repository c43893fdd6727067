#pragma once
// Shared fixtures and helpers for the unit and acceptance tests. Kept free of
// any test-framework dependency so both the doctest suites and the standalone
// acceptance runner can include it.

#include <cmath>
#include <complex>
#include <cstddef>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hbspace/cli.hpp"
#include "hbspace/measures.hpp"
#include "hbspace/spectral.hpp"

namespace testsupport {

inline double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

inline double rel_diff(std::complex<double> a, std::complex<double> b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

// ---------------------------------------------------------------------------
// Canonical spectral fixtures.

// Indicator of [-1, 0]: two knots, value 1 on the segment, jumps at both ends.
inline hbspace::SpectralFunction indicator_psi() {
    return hbspace::SpectralFunction::make({-1.0, 0.0}, {{1.0, 0.0}, {1.0, 0.0}});
}

// Continuous tent on [-2, 0] peaking at -1.
inline hbspace::SpectralFunction tent_psi() {
    return hbspace::SpectralFunction::make({-2.0, -1.0, 0.0},
                                           {{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
}

// Random compactly supported piecewise-linear fixture with support inside
// [-2.3, 0]: 6..12 knots, spacing 0.08..0.25, complex samples in [-1,1]^2.
inline hbspace::SpectralFunction random_compact_psi(std::mt19937& rng) {
    std::uniform_int_distribution<int> nk(6, 12);
    std::uniform_real_distribution<double> spacing(0.08, 0.25);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const int n = nk(rng);
    std::vector<double> steps(static_cast<std::size_t>(n) - 1);
    double total = 0.0;
    for (double& s : steps) {
        s = spacing(rng);
        total += s;
    }
    std::uniform_real_distribution<double> startd(-2.3, -total - 1e-3);
    const double start = startd(rng);  // keeps the support inside [-2.3, 0]
    std::vector<double> grid(static_cast<std::size_t>(n));
    grid[0] = start;
    for (int i = 1; i < n; ++i) grid[static_cast<std::size_t>(i)] = grid[i - 1] + steps[i - 1];
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(n));
    for (auto& v : samples) v = {coeff(rng), coeff(rng)};
    return hbspace::SpectralFunction::make(std::move(grid), std::move(samples));
}

// Random compactly supported half-line fixture with support inside [0.2, 3]:
// log-spaced knots, complex samples in [-1,1]^2.
inline hbspace::HalfLineFunction random_halfline_phi(std::mt19937& rng) {
    std::uniform_int_distribution<int> nk(6, 12);
    std::uniform_real_distribution<double> startd(0.2, 0.6);
    std::uniform_real_distribution<double> ratiolog(0.05, 0.2);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const int n = nk(rng);
    std::vector<double> grid(static_cast<std::size_t>(n));
    grid[0] = startd(rng);
    for (int i = 1; i < n; ++i) {
        grid[static_cast<std::size_t>(i)] = grid[i - 1] * std::exp(ratiolog(rng));
    }
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(n));
    for (auto& v : samples) v = {coeff(rng), coeff(rng)};
    return hbspace::HalfLineFunction::make(std::move(grid), std::move(samples));
}

// ---------------------------------------------------------------------------
// Kernel-section fixtures: psi_{K_w}(xi) = (1/sqrt(2 pi)) e^{-a e^{rho xi}} e^{conj(w) xi}
// sampled on a grid graded to keep the piecewise-linear sampling error of both
// factors below ~h0^2/4 relative. The grid step shrinks like
// 1/(1 + max(|z|,|w|) + a rho e^{rho xi}) where the integrand turns fastest,
// and relaxes exponentially in the flat far-left tail (mass there is O(e^{xi})).
struct KernelSectionPair {
    hbspace::SpectralFunction psi_z;
    hbspace::SpectralFunction psi_w;
};

inline std::vector<double> kernel_section_grid(double mod_scale,
                                               const hbspace::AtomicParams& p, double h0) {
    const double xi_min = -35.0;
    const double xi_max = std::log(40.0 / p.a) / p.rho;  // a e^{rho xi_max} = 40
    std::vector<double> grid;
    grid.reserve(1 << 20);
    double xi = xi_min;
    while (xi < xi_max) {
        grid.push_back(xi);
        double h = h0 / (1.0 + mod_scale + p.a * p.rho * std::exp(p.rho * xi));
        if (xi < -10.0) h *= std::exp((-10.0 - xi) / 8.0);
        xi += h;
    }
    grid.push_back(xi_max);
    return grid;
}

inline std::vector<std::complex<double>> kernel_section_samples(
    const std::vector<double>& grid, std::complex<double> w,
    const hbspace::AtomicParams& p) {
    const double inv_sqrt_two_pi = 0.39894228040143267794;
    std::vector<std::complex<double>> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double xi = grid[i];
        const double re = -p.a * std::exp(p.rho * xi) + w.real() * xi;
        const double im = -w.imag() * xi;  // exponent carries conj(w)
        samples[i] = inv_sqrt_two_pi * std::exp(std::complex<double>(re, im));
    }
    return samples;
}

inline KernelSectionPair kernel_section_pair(std::complex<double> z, std::complex<double> w,
                                             const hbspace::AtomicParams& p, double h0) {
    auto grid = kernel_section_grid(std::max(std::abs(z), std::abs(w)), p, h0);
    auto sz = kernel_section_samples(grid, z, p);
    auto sw = kernel_section_samples(grid, w, p);
    auto grid_copy = grid;
    return {hbspace::SpectralFunction::make(std::move(grid), std::move(sz)),
            hbspace::SpectralFunction::make(std::move(grid_copy), std::move(sw))};
}

// ---------------------------------------------------------------------------
// CLI harness: run the command in-process and capture streams.

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = hbspace::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

inline std::string golden_path(const std::string& name) {
#ifdef HBSPACE_GOLDEN_DIR
    return std::string(HBSPACE_GOLDEN_DIR) + "/" + name;
#else
    return "tests/golden/" + name;
#endif
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testsupport
