#include "hbspace/special.hpp"

#include <cmath>

#include "hbspace/errors.hpp"

namespace hbspace {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double half_log_two_pi = 0.91893853320467274178;

// Lanczos coefficients for g = 607/128, n = 15 (Godfrey's set).
constexpr double lanczos_g = 607.0 / 128.0;
constexpr double lanczos_c[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6};

// Valid for Re z >= 0.5.
std::complex<double> log_gamma_lanczos(std::complex<double> z) {
    const std::complex<double> zm1 = z - 1.0;
    std::complex<double> series = lanczos_c[0];
    for (int k = 1; k < 15; ++k) {
        series += lanczos_c[k] / (zm1 + static_cast<double>(k));
    }
    const std::complex<double> t = zm1 + lanczos_g + 0.5;
    return half_log_two_pi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

bool near_nonpositive_integer(std::complex<double> z) {
    if (z.real() > 0.5) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= 1e-14 && std::abs(z.imag()) <= 1e-14;
}

}  // namespace

std::complex<double> gamma(std::complex<double> z) {
    if (near_nonpositive_integer(z)) {
        throw pole_error("gamma pole at a non-positive integer");
    }
    if (z.real() >= 0.5) {
        const std::complex<double> lg = log_gamma_lanczos(z);
        if (lg.real() > 709.0) {
            throw overflow_error("gamma magnitude exceeds double range");
        }
        return std::exp(lg);
    }
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z). sin(pi z) overflows for
    // large |Im z|, so work with logs there.
    const std::complex<double> one_minus = 1.0 - z;
    if (std::abs(z.imag()) > 30.0) {
        // sin(pi z) = (sigma i / 2) e^{-sigma i pi z} (1 - e^{2 sigma i pi z})
        // with sigma = sign(Im z); the second exponential is O(e^{-2 pi |Im z|}).
        const double sigma = z.imag() > 0.0 ? 1.0 : -1.0;
        const std::complex<double> is_pi_z = std::complex<double>(0.0, sigma * pi) * z;
        const std::complex<double> log_sin =
            std::complex<double>(0.0, sigma * pi / 2.0) - std::log(2.0) - is_pi_z +
            std::log(1.0 - std::exp(2.0 * is_pi_z));
        const std::complex<double> lg =
            std::log(pi) - log_sin - log_gamma_lanczos(one_minus);
        if (lg.real() > 709.0) {
            throw overflow_error("gamma magnitude exceeds double range");
        }
        return std::exp(lg);
    }
    const std::complex<double> s = std::sin(pi * z);
    return pi / (s * gamma(one_minus));
}

std::complex<double> log_gamma(std::complex<double> z) {
    if (!(z.real() > 0.0)) {
        throw domain_error("log_gamma requires Re z > 0");
    }
    if (z.real() >= 0.5) {
        return log_gamma_lanczos(z);
    }
    // Shift into the Lanczos region; the subtraction keeps the branch that is
    // continuous in Im z on vertical segments through (0, 0.5).
    return log_gamma_lanczos(z + 1.0) - std::log(z);
}

double gamma_magnitude_lower_bound(int n, double u, double rho, double y, double p) {
    if (n < 1 || !(u > 0.0) || !(rho > 0.0) || !(p >= 1.0)) {
        throw domain_error("gamma_magnitude_lower_bound requires n >= 1, u > 0, "
                           "rho > 0 and p >= 1");
    }
    const double stirling = ((n - 1) / 2.0) * std::log(n / 2.0) - n / 2.0;
    const double log_bound = -p * u / rho - p * pi * std::abs(y) / 2.0 + p * stirling;
    return std::exp(log_bound);
}

}  // namespace hbspace
