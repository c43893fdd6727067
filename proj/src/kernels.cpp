#include "hbspace/kernels.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "hbspace/errors.hpp"
#include "hbspace/special.hpp"

namespace hbspace {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 6.28318530717958647692;

using cplx = std::complex<double>;

cplx require_right_sum(cplx z, cplx w, const char* who) {
    const cplx s = z + std::conj(w);
    if (!(s.real() > 0.0)) {
        throw domain_error(std::string(who) + " requires Re(z + conj w) > 0");
    }
    return s;
}

}  // namespace

std::complex<double> kernel_M(std::complex<double> z, std::complex<double> w,
                              const AtomicParams& p) {
    const cplx s = require_right_sum(z, w, "kernel_M") / p.rho;
    const cplx log_value = -s * std::log(p.a) + log_gamma(s);
    if (log_value.real() > 700.0) {
        throw overflow_error("kernel_M magnitude exceeds double range");
    }
    return std::exp(log_value) / (two_pi * p.rho);
}

std::complex<double> kernel_zen(std::complex<double> z, std::complex<double> w,
                                const BoundaryMeasure& m, const QuadratureConfig& q) {
    const cplx s = require_right_sum(z, w, "kernel_zen");
    const auto integrand = [&](double xi) {
        const double v = zen_weight_v(xi, m);
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw singular_weight_error("Zen weight vanished on the integration domain");
        }
        return std::exp(s * xi) / v;
    };
    const auto block = [&](double lo, double hi) {
        return integrate_adaptive(integrand, lo, hi, q, 0.0, 3);
    };

    cplx acc = block(-1.0, -0.5);
    double acc_mag = std::abs(acc);

    // Inward toward 0: halve the remaining stub until its estimated
    // contribution is negligible against the accumulated value.
    double edge = 0.5;
    for (int k = 0; k < 60; ++k) {
        const cplx contrib = block(-edge, -edge / 2.0);
        acc += contrib;
        acc_mag = std::max(acc_mag, std::abs(acc));
        edge /= 2.0;
        const double stub = std::abs(integrand(-edge / 2.0)) * edge;
        if (stub < 0.25 * q.target_rel_error * acc_mag) {
            acc += integrand(-edge / 2.0) * edge;
            break;
        }
        if (k == 59) {
            throw non_convergence_error("Zen kernel inward refinement did not terminate");
        }
    }

    // Outward: dyadic blocks [-2B, -B] until two consecutive contributions are
    // negligible; sustained growth means the weight decays faster than the
    // exponential and the kernel integral does not exist.
    double B = 1.0;
    int quiet = 0;
    int growing = 0;
    double prev_mag = std::abs(acc);
    for (int k = 0; k < 64; ++k) {
        const cplx contrib = block(-2.0 * B, -B);
        acc += contrib;
        const double mag = std::abs(contrib);
        if (mag < q.target_rel_error * std::abs(acc)) {
            if (++quiet >= 2) return acc / two_pi;
        } else {
            quiet = 0;
        }
        if (mag > prev_mag && mag > std::abs(acc) * 0.1) {
            if (++growing >= 3) {
                throw singular_weight_error(
                    "Zen kernel integrand grows toward -inf; weight decays too fast");
            }
        } else {
            growing = 0;
        }
        prev_mag = mag;
        B *= 2.0;
    }
    throw non_convergence_error("Zen kernel outward blocks did not converge");
}

std::complex<double> hardy_kernel(std::complex<double> z, std::complex<double> w) {
    const cplx s = require_right_sum(z, w, "hardy_kernel");
    return 1.0 / (two_pi * s);
}

std::complex<double> bergman_kernel(std::complex<double> z, std::complex<double> w) {
    const cplx s = require_right_sum(z, w, "bergman_kernel");
    return 1.0 / (pi * s * s);
}

double growth_envelope(std::complex<double> z, const AtomicParams& p) {
    if (!(z.real() > 0.0)) throw domain_error("growth_envelope requires Re z > 0");
    const double x = z.real() / p.rho;
    const double log_value = 0.25 * std::log(z.real()) + x * std::log(2.0 / p.a) +
                             log_gamma(cplx(x, 0.0)).real();
    if (log_value > 700.0) {
        throw overflow_error("growth envelope exceeds double range");
    }
    return std::exp(log_value);
}

double pointwise_bound(std::complex<double> z, const AtomicParams& p) {
    if (!(z.real() > 0.0)) throw domain_error("pointwise_bound requires Re z > 0");
    return std::sqrt(kernel_M(z, z, p).real());
}

bool embedding_check(double a, double rho, double a2, double rho2) {
    return rho > rho2 || (rho == rho2 && a > a2);
}

KernelSpec KernelSpec::make_atomic(double a, double rho) {
    KernelSpec s;
    s.kind = Kind::atomic;
    s.atomic = AtomicParams(a, rho);
    return s;
}

KernelSpec KernelSpec::make_zen(BoundaryMeasure m, QuadratureConfig q) {
    KernelSpec s;
    s.kind = Kind::zen;
    s.measure = std::move(m);
    s.quad = q;
    return s;
}

KernelSpec KernelSpec::make_hardy() {
    KernelSpec s;
    s.kind = Kind::hardy;
    return s;
}

KernelSpec KernelSpec::make_bergman() {
    KernelSpec s;
    s.kind = Kind::bergman;
    return s;
}

std::complex<double> kernel_eval(std::complex<double> z, std::complex<double> w,
                                 const KernelSpec& spec) {
    switch (spec.kind) {
        case KernelSpec::Kind::atomic:
            return kernel_M(z, w, spec.atomic);
        case KernelSpec::Kind::zen:
            return kernel_zen(z, w, spec.measure, spec.quad);
        case KernelSpec::Kind::hardy:
            return hardy_kernel(z, w);
        case KernelSpec::Kind::bergman:
            return bergman_kernel(z, w);
    }
    throw domain_error("unknown kernel kind");
}

std::vector<std::vector<std::complex<double>>> gram_matrix(
    const std::vector<std::complex<double>>& points, const KernelSpec& spec) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].real() > 0.0)) {
            throw domain_error("gram_matrix points must have Re > 0");
        }
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                throw domain_error("gram_matrix points must be pairwise distinct");
            }
        }
    }
    const std::size_t n = points.size();
    std::vector<std::vector<cplx>> g(n, std::vector<cplx>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            g[i][j] = kernel_eval(points[i], points[j], spec);
            if (j != i) g[j][i] = std::conj(g[i][j]);
        }
    }
    return g;
}

double gram_min_eigenvalue(const std::vector<std::vector<std::complex<double>>>& gram) {
    const std::size_t n = gram.size();
    if (n == 0) throw domain_error("gram_min_eigenvalue requires a non-empty matrix");
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw domain_error("gram matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = gram[i][j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw non_convergence_error("eigenvalue iteration failed on the Gram matrix");
    }
    return solver.eigenvalues().minCoeff();
}

}  // namespace hbspace
