#pragma once
// Sequence analytics on the open right half-plane: counting function,
// exponent-of-convergence and density estimators, Carleman-type ratios, and a
// finite-data zero-set / uniqueness-set classifier.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hbspace {

// Finite point sequence in the open right half-plane, sorted by modulus.
struct PointSequence {
    std::vector<std::complex<double>> points;  // all Re > 0, moduli nondecreasing
    std::optional<std::string> generator_tag;  // e.g. "arith:1" or "geom:2"

    // Validates Re > 0 for every point and sorts by modulus.
    static PointSequence make(std::vector<std::complex<double>> pts,
                              std::optional<std::string> tag = std::nullopt);
    // z_j = j * step for j = 1..count (step > 0).
    static PointSequence arithmetic(double step, std::size_t count);
    // z_j = base^j for j = 1..count (base > 1).
    static PointSequence geometric(double base, std::size_t count);
};

enum class SequenceVerdict { sufficient_zero_set, uniqueness_set, inconclusive };

std::string to_string(SequenceVerdict v);

// Finite-data summary produced by classify(). All asymptotic quantities are
// windowed estimates, not limits.
struct DensityReport {
    double rho1_estimate = 0.0;  // exponent-of-convergence estimate
    std::vector<std::pair<double, double>> n_samples;  // (r, n(r)) used in the fit
    double d_plus = 0.0;   // upper density estimate at rho1_estimate
    double d_minus = 0.0;  // lower density estimate at rho1_estimate
    std::vector<std::pair<double, double>> carleman_samples;  // (R, ratio), top decade
    double eps0 = 0.0;     // min Re z_j
    SequenceVerdict verdict = SequenceVerdict::inconclusive;
};

// n(r) = #{ z_j : |z_j| <= r }.
std::size_t counting_function(const PointSequence& s, double r);

// Least-squares slope of log n(r) against log r over 64 log-spaced radii in
// the upper half of the modulus range. Finite-data surrogate for the exponent
// of convergence; requires at least 100 points.
double exponent_of_convergence_estimate(const PointSequence& s);

// Exact sup and inf of n(r)/r^rho1 over the upper half of the modulus range
// (evaluated at the step discontinuities and the window endpoints). Returns
// (d_plus, d_minus); both zero for an empty sequence. Requires rho1 > 0.
std::pair<double, double> densities(const PointSequence& s, double rho1);

// (1 / log R) * sum over |z_j| <= R of Re(1/z_j). Requires R > e.
double carleman_ratio(const PointSequence& s, double R);

// Classification rules, applied in order to finite-data estimates:
//   sufficient_zero_set  if |rho1_estimate - 1| <= rho1_tol and d_plus < 1/2;
//   uniqueness_set       if eps0 > 0 and every Carleman sample over the top
//                        decade [R_max/10, R_max] exceeds 2/pi + margin;
//   inconclusive         otherwise.
// Requires >= 100 points and R_max > 10e (so every sampled R satisfies R > e).
DensityReport classify(const PointSequence& s, double R_max, double rho1_tol = 0.05,
                       double carleman_margin = 0.05);

}  // namespace hbspace
