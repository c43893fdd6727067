#pragma once

#include <complex>

namespace hbspace {

// Gamma function on the complex plane, Lanczos approximation with reflection
// for Re z < 0.5. Throws pole_error within 1e-14 of a non-positive integer and
// overflow_error when the magnitude exceeds double range.
std::complex<double> gamma(std::complex<double> z);

// Principal-branch log-gamma for Re z > 0 (domain_error otherwise). Continuous
// along vertical lines in the right half-plane; exp(log_gamma(z)) == gamma(z).
std::complex<double> log_gamma(std::complex<double> z);

// Stirling-type lower envelope for |Gamma(n/2 + u/rho + i y)|^p used when
// bounding reproducing-kernel norms from below:
//   exp( p * [ ((n-1)/2) log(n/2) - n/2 - u/rho - pi |y| / 2 ] ),
// normalization constant taken as 1. Requires n >= 1, u > 0, rho > 0, p >= 1.
double gamma_magnitude_lower_bound(int n, double u, double rho, double y, double p);

}  // namespace hbspace
