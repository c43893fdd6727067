#pragma once

#include <complex>
#include <vector>

#include "hbspace/measures.hpp"
#include "hbspace/quadrature.hpp"

namespace hbspace {

// Reproducing kernel of the atomic-measure space:
// K(z, w) = (1/(2 pi rho)) a^{-(z+conj w)/rho} Gamma((z+conj w)/rho),
// evaluated in log-space. Throws domain_error when Re(z + conj w) <= 0.
std::complex<double> kernel_M(std::complex<double> z, std::complex<double> w,
                              const AtomicParams& p);

// Kernel of the Zen space of a boundary measure:
// K(z, w) = (1/(2 pi)) integral_{-inf}^0 e^{(z+conj w) xi} dxi / v(xi),
// integrated over dyadic blocks marching outward until the contributions fall
// below the target and inward toward 0 to resolve short-scale features of v.
// Throws singular_weight_error when v vanishes or decays so fast the integral
// grows without bound.
std::complex<double> kernel_zen(std::complex<double> z, std::complex<double> w,
                                const BoundaryMeasure& m, const QuadratureConfig& q);

// Closed-form specializations: the point mass at 0 gives the Hardy kernel,
// Lebesgue boundary measure gives the Bergman kernel.
std::complex<double> hardy_kernel(std::complex<double> z, std::complex<double> w);
std::complex<double> bergman_kernel(std::complex<double> z, std::complex<double> w);

// Growth envelope (Re z)^{1/4} (2/a)^{Re z / rho} Gamma(Re z / rho) with the
// unspecified constant fixed to 1; depends on Re z only.
double growth_envelope(std::complex<double> z, const AtomicParams& p);

// Sharp evaluation bound sqrt(K(z, z)).
double pointwise_bound(std::complex<double> z, const AtomicParams& p);

// Continuous embedding of the (a, rho) space into the (a2, rho2) space holds
// iff rho > rho2, or rho == rho2 and a > a2.
bool embedding_check(double a, double rho, double a2, double rho2);

struct KernelSpec {
    enum class Kind { atomic, zen, hardy, bergman };

    Kind kind = Kind::hardy;
    AtomicParams atomic{1.0, 1.0};
    BoundaryMeasure measure;
    QuadratureConfig quad;

    static KernelSpec make_atomic(double a, double rho);
    static KernelSpec make_zen(BoundaryMeasure m, QuadratureConfig q = {});
    static KernelSpec make_hardy();
    static KernelSpec make_bergman();
};

std::complex<double> kernel_eval(std::complex<double> z, std::complex<double> w,
                                 const KernelSpec& spec);

// G[i][j] = K(points[i], points[j]); points must be pairwise distinct with
// positive real part.
std::vector<std::vector<std::complex<double>>> gram_matrix(
    const std::vector<std::complex<double>>& points, const KernelSpec& spec);

// Smallest eigenvalue of a Hermitian Gram matrix (positive semidefiniteness
// check; slightly negative values bounded by solver noise are expected).
double gram_min_eigenvalue(const std::vector<std::vector<std::complex<double>>>& gram);

}  // namespace hbspace
