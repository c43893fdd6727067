#pragma once
// Numerical demonstrations of the negative results: divergence of the kernel
// projection series for p > 2, and two counterexample families exhibiting
// unbounded point evaluation and a non-holomorphic limit.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "hbspace/measures.hpp"
#include "hbspace/quadrature.hpp"

namespace hbspace {

enum class SeriesVerdict { diverging, converging };

std::string to_string(SeriesVerdict v);

// Log-space record of the kernel projection series partial sums.
struct DivergenceSeries {
    double p = 2.0;
    std::vector<std::pair<int, double>> terms;  // (n, log term_n)
    std::vector<double> partial_sums_log;
    SeriesVerdict verdict = SeriesVerdict::converging;
};

// Term-by-term evaluation (in log space) of the series whose sum is
// ||K_w||^p / (2 pi): term_n is the n-th line contribution to the p-norm of
// the kernel at w, truncated vertically at q.line_truncation_Y. Verdict is
// "diverging" when the last five log-terms are strictly increasing.
// Requires p >= 2, Re w > 0 and 6 <= N <= 200.
DivergenceSeries projection_partial_sums(double p, const AtomicParams& params,
                                         std::complex<double> w, int N,
                                         const QuadratureConfig& q = {});

// First counterexample family: f_k(z) = h(kz) with
// h(z) = (1+z)^{-1} exp{ i e^{2 pi i z} }. Requires k >= 1 and Re z >= 0;
// the value underflows to 0 when the outer exponent's real part drops below
// -700 and throws overflow_error when it exceeds +700.
std::complex<double> counterexample_fk(int k, std::complex<double> z);

// log |f_k(z)| for the same family, computed without forming the (possibly
// astronomically large) value: -Im(e^{2 pi i k z}) - log|1 + k z|.
// Requires k >= 1; defined for every z with 1 + kz != 0.
double counterexample_fk_log_abs(int k, std::complex<double> z);

// Squared norm of f_k accumulated from direct line quadrature:
// sum over n <= N of (2^n/n!) * Int_{-Y}^{Y} |f_k(n/2 + iy)|^2 dy.
// Requires k >= 1 and 0 <= N <= 100.
double counterexample_fk_norm(int k, int N, const QuadratureConfig& q = {});

// Second counterexample family: f_k(z) = (1+z)^{-1} (exp{iW} - 1)/W with
// W = e^{4 k pi i z}. Requires k >= 1; same overflow conventions as above.
std::complex<double> counterexample2_fk(int k, std::complex<double> z);

// Pointwise limit of the second family on the lines Re z = n/2 (n integer,
// Im z != 0): i/(1+z) in the upper half, 0 in the lower half.
std::complex<double> counterexample2_limit(std::complex<double> z);

}  // namespace hbspace
