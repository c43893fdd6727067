#include "hbspace/pathology.hpp"

#include <cmath>
#include <limits>

#include "hbspace/errors.hpp"
#include "hbspace/special.hpp"

namespace hbspace {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 6.28318530717958647692;

using cplx = std::complex<double>;

double logsumexp(double a, double b) {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

// Phase bookkeeping for e^{2 pi i (t_re + i t_im)}. When 2*t_re is an integer
// the phase is an exact multiple of pi, so the result is exactly real; this
// keeps |exp{i e^{...}}| = 1 exact on the lines Re z = n/2.
struct InnerExp {
    double log_mag;   // log |e^{2 pi i t}| = -2 pi t_im
    double phase;     // meaningful only when !reduced
    bool reduced;     // 2*t_re is an integer
    bool negative;    // when reduced: e^{2 pi i t_re} = -1 (odd multiple of pi)

    InnerExp(double t_re, double t_im) {
        log_mag = -two_pi * t_im;
        const double s = 2.0 * t_re;
        const double s_round = std::nearbyint(s);
        reduced = std::abs(s - s_round) <= 1e-9 && std::abs(s_round) < 9.0e15;
        if (reduced) {
            negative = std::fmod(std::abs(s_round), 2.0) == 1.0;
            phase = 0.0;
        } else {
            negative = false;
            phase = two_pi * t_re;
        }
    }

    // Components; requires log_mag <= 709 so the magnitude is representable.
    cplx value() const {
        const double mag = std::exp(log_mag);
        if (reduced) return cplx(negative ? -mag : mag, 0.0);
        return cplx(mag * std::cos(phase), mag * std::sin(phase));
    }

    double imag_part() const {
        if (reduced) return 0.0;
        return std::exp(log_mag) * std::sin(phase);
    }
};

void require_k(int k) {
    if (k < 1) throw domain_error("counterexample families require k >= 1");
}

}  // namespace

std::string to_string(SeriesVerdict v) {
    return v == SeriesVerdict::diverging ? "diverging" : "converging";
}

DivergenceSeries projection_partial_sums(double p, const AtomicParams& params,
                                         std::complex<double> w, int N,
                                         const QuadratureConfig& q) {
    if (!(p >= 2.0)) throw domain_error("projection series requires p >= 2");
    if (!(w.real() > 0.0)) throw domain_error("projection series requires Re w > 0");
    if (N < 6 || N > 200) throw domain_error("projection series requires 6 <= N <= 200");

    const double a = params.a;
    const double rho = params.rho;
    const double u = w.real();
    const double Y = q.line_truncation_Y;
    const double log_a = std::log(a);
    const double log_prefactor = std::log(rho) - std::log(two_pi) -
                                 p * std::log(two_pi * rho) - p * (u / rho) * log_a;

    DivergenceSeries out;
    out.p = p;
    out.terms.reserve(N + 1);
    out.partial_sums_log.reserve(N + 1);
    double running = -std::numeric_limits<double>::infinity();
    for (int n = 0; n <= N; ++n) {
        const double c = 0.5 * n + u / rho;
        const double log_gamma_c = log_gamma(cplx(c, 0.0)).real();
        // |Gamma(c+is)|^p rescaled by its s = 0 value so the quadrature works
        // on a [0, 1]-sized integrand; the scale is restored in log space.
        const auto integrand = [&](double s) {
            return std::exp(p * (log_gamma(cplx(c, s)).real() - log_gamma_c));
        };
        const double integral = 2.0 * integrate_adaptive(integrand, 0.0, Y, q, 0.0, 4);
        const double log_term = log_prefactor + n * (1.0 - 0.5 * p) * log_a -
                                std::lgamma(n + 1.0) + p * log_gamma_c +
                                std::log(integral);
        out.terms.emplace_back(n, log_term);
        running = (n == 0) ? log_term : logsumexp(running, log_term);
        out.partial_sums_log.push_back(running);
    }

    bool increasing = true;
    for (std::size_t i = out.terms.size() - 4; i < out.terms.size(); ++i) {
        if (!(out.terms[i].second > out.terms[i - 1].second)) {
            increasing = false;
            break;
        }
    }
    out.verdict = increasing ? SeriesVerdict::diverging : SeriesVerdict::converging;
    return out;
}

std::complex<double> counterexample_fk(int k, std::complex<double> z) {
    require_k(k);
    if (!(z.real() >= 0.0)) {
        throw domain_error("counterexample_fk requires Re z >= 0");
    }
    const InnerExp inner(k * z.real(), k * z.imag());
    if (inner.log_mag > 709.0) {
        throw overflow_error("inner exponential exceeds double range");
    }
    const cplx e = inner.value();
    const double outer_re = -e.imag();  // Re(i * e)
    if (outer_re > 700.0) {
        throw overflow_error("counterexample magnitude exceeds double range");
    }
    const cplx denom = 1.0 + static_cast<double>(k) * z;
    if (outer_re < -700.0) return cplx(0.0, 0.0);
    return std::exp(cplx(outer_re, e.real())) / denom;
}

double counterexample_fk_log_abs(int k, std::complex<double> z) {
    require_k(k);
    const InnerExp inner(k * z.real(), k * z.imag());
    const double im_e = inner.imag_part();
    const cplx denom = 1.0 + static_cast<double>(k) * z;
    return -im_e - std::log(std::abs(denom));
}

double counterexample_fk_norm(int k, int N, const QuadratureConfig& q) {
    require_k(k);
    if (N < 0 || N > 100) {
        throw domain_error("counterexample_fk_norm requires 0 <= N <= 100");
    }
    const double Y = q.line_truncation_Y;
    const AtomicParams params(2.0, 1.0);
    double total = 0.0;
    int quiet = 0;
    for (int n = 0; n <= N; ++n) {
        const double x = 0.5 * n;
        const auto integrand = [&](double y) {
            return std::exp(2.0 * counterexample_fk_log_abs(k, cplx(x, y)));
        };
        const double line = integrate_adaptive(integrand, -Y, Y, q, 0.0, 6);
        const double term = atom_weight(n, params) * line;
        total += term;
        if (n >= 1 && term <= 1e-16 * total) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    return total;
}

std::complex<double> counterexample2_fk(int k, std::complex<double> z) {
    require_k(k);
    const InnerExp inner(2.0 * k * z.real(), 2.0 * k * z.imag());
    if (inner.log_mag > 690.0) {
        // |W| is astronomically large. On the reduced (real, positive) branch
        // |f| <= 2/(|W| |1+z|) which underflows; otherwise the sign of Im W
        // decides between underflow and genuine overflow of exp{iW}.
        if (!inner.reduced && std::sin(inner.phase) < 0.0) {
            throw overflow_error("counterexample2 magnitude exceeds double range");
        }
        return cplx(0.0, 0.0);
    }
    const cplx W = inner.value();
    const cplx denom = 1.0 + z;
    if (std::abs(W) < 1e-8) {
        return (cplx(0.0, 1.0) - 0.5 * W) / denom;  // (e^{iW}-1)/W ~ i - W/2
    }
    const double outer_re = -W.imag();  // Re(iW)
    if (outer_re > 700.0) {
        throw overflow_error("counterexample2 magnitude exceeds double range");
    }
    cplx num;
    if (W.imag() == 0.0) {
        // Real W: e^{iW}-1 = -2 sin^2(W/2) + i sin W, free of cancellation.
        const double sh = std::sin(0.5 * W.real());
        num = cplx(-2.0 * sh * sh, std::sin(W.real()));
    } else if (outer_re < -700.0) {
        num = cplx(-1.0, 0.0);
    } else {
        num = std::exp(cplx(outer_re, W.real())) - 1.0;
    }
    return num / (W * denom);
}

std::complex<double> counterexample2_limit(std::complex<double> z) {
    const double s = 2.0 * z.real();
    const double s_round = std::nearbyint(s);
    if (!(std::abs(s - s_round) <= 1e-9) || s_round < 0.0) {
        throw domain_error("limit is defined on the lines Re z = n/2, n >= 0");
    }
    if (z.imag() == 0.0) {
        throw domain_error("limit is undefined on the real axis");
    }
    if (z.imag() > 0.0) return cplx(0.0, 1.0) / (1.0 + z);
    return cplx(0.0, 0.0);
}

}  // namespace hbspace
