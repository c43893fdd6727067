#pragma once

#include <complex>
#include <vector>

#include "hbspace/measures.hpp"
#include "hbspace/quadrature.hpp"

namespace hbspace {

// A compactly supported function of the spectral variable xi, stored as
// complex samples on a strictly increasing grid, interpreted piecewise-linear
// and zero outside [grid.front(), grid.back()].
struct SpectralFunction {
    std::vector<double> grid;
    std::vector<std::complex<double>> samples;

    static SpectralFunction make(std::vector<double> grid,
                                 std::vector<std::complex<double>> samples);

    std::complex<double> value(double xi) const;
    double support_min() const { return grid.front(); }
    double support_max() const { return grid.back(); }
};

// A compactly supported function on the half-line (0, inf), sampled on a
// strictly increasing grid of t > 0 and interpreted piecewise-linear in log t
// (so the log substitution maps it exactly onto a SpectralFunction).
struct HalfLineFunction {
    std::vector<double> grid;
    std::vector<std::complex<double>> samples;

    static HalfLineFunction make(std::vector<double> grid,
                                 std::vector<std::complex<double>> samples);

    std::complex<double> value(double t) const;
};

// Samples of a transform along the vertical line Re = c: values[i] = f(c + i y[i]).
struct LineSamples {
    std::vector<double> y;
    std::vector<std::complex<double>> values;

    static LineSamples make(std::vector<double> y,
                            std::vector<std::complex<double>> values);
};

struct LineNormDiagnostics {
    double norm = 0.0;
    bool truncation_warning = false;
    int terms_used = 0;
    double last_term = 0.0;
};

// Synthesis f(z) = (1/sqrt(2 pi)) * integral psi(xi) e^{z xi} dxi by adaptive
// quadrature. Accepts Re z >= 0 (compact support keeps the integral entire).
std::complex<double> pw_synthesize(const SpectralFunction& psi, std::complex<double> z,
                                   const QuadratureConfig& q);

// Same synthesis evaluated through the exact segment antiderivative of the
// piecewise-linear representation (terminating formula, no quadrature). Used
// as the fast inner evaluator of the line norms; unit tests pin it to
// pw_synthesize. For |z| below 1e-3 it falls back to per-segment fixed-order
// quadrature to avoid cancellation in the 1/z^2 terms.
std::complex<double> pw_synthesize_closed(const SpectralFunction& psi,
                                          std::complex<double> z);

// Spectral-side norm: ( integral |psi|^2 e^{a e^{rho xi}} dxi )^{1/2}.
double norm_M_spectral(const SpectralFunction& psi, const AtomicParams& p,
                       const QuadratureConfig& q);

// Spatial-side norm: weighted sum over the lines Re z = rho n / 2 of the line
// L^2 norms of the synthesized function, each line integral computed by
// quadrature on [-Y, Y] plus the analytic remainder of the truncated
// piecewise-linear synthesis beyond |y| = Y. Independent cross-check of the
// spectral-side norm.
double norm_M_lines(const SpectralFunction& psi, const AtomicParams& p,
                    const QuadratureConfig& q);
LineNormDiagnostics norm_M_lines_diag(const SpectralFunction& psi, const AtomicParams& p,
                                      const QuadratureConfig& q);

// One line of the spatial norm: integral over y of |f(x+iy)|^2 with f the
// synthesis of psi, truncated at |y| = Y with the analytic tail added back.
double line_norm_sq(const SpectralFunction& psi, double x, const QuadratureConfig& q);

// Weighted spectral inner product: integral psi1 conj(psi2) e^{a e^{rho xi}} dxi.
std::complex<double> inner_M(const SpectralFunction& psi1, const SpectralFunction& psi2,
                             const AtomicParams& p, const QuadratureConfig& q);

// Average function along Re = x:  integral e^{2 x xi} |psi(xi)|^2 dxi.
double average_function(const SpectralFunction& psi, double x, const QuadratureConfig& q);

// Renormalized Mellin transform (1/sqrt(2 pi)) * integral phi(t) t^{z-1} dt.
std::complex<double> mellin_transform(const HalfLineFunction& phi, std::complex<double> z,
                                      const QuadratureConfig& q);

// Exact log-variable change: psi(xi) = phi(e^xi) on the log-mapped grid, so
// pw_synthesize(psi, z) equals mellin_transform(phi, z).
SpectralFunction mellin_to_spectral(const HalfLineFunction& phi);

// ( integral |phi(t)|^2 e^{a t^rho} dt/t )^{1/2}.
double norm_halfline_weighted(const HalfLineFunction& phi, const AtomicParams& p,
                              const QuadratureConfig& q);

// Edge decay required of the sampled line before inversion is attempted,
// relative to the peak sample magnitude. Matches the documented 2e-3 accuracy
// of the inversion itself (the integrand decays only polynomially for
// discontinuous data, so a stricter gate would reject every valid input).
inline constexpr double mellin_line_decay_threshold = 2e-3;

// Inverse Mellin integral (1/sqrt(2 pi)) * integral f(c+iy) xi^{-c-iy} dy over
// the sampled window; xi > 0 is the recovery point on the half-line. Throws
// decay_error when the window edges have not decayed below the threshold.
std::complex<double> mellin_inverse_line(const LineSamples& f_line, double c, double xi,
                                         const QuadratureConfig& q);

// Zen synthesis (1/sqrt(2 pi)) * integral_{xi<0} e^{z xi} phi(xi) dxi for phi
// supported in [xi_min, 0].
std::complex<double> zen_synthesize(const SpectralFunction& phi, std::complex<double> z,
                                    const QuadratureConfig& q);

// ( integral |phi|^2 v(xi) dxi )^{1/2} with v the Zen weight of the measure.
double norm_zen(const SpectralFunction& phi, const BoundaryMeasure& m,
                const QuadratureConfig& q);

}  // namespace hbspace
