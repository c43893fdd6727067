#include "hbspace/zerosets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "hbspace/errors.hpp"

namespace hbspace {

namespace {

constexpr double euler_e = 2.71828182845904523536;
constexpr double two_over_pi = 0.63661977236758134308;

std::size_t count_leq(const std::vector<std::complex<double>>& pts, double r) {
    auto it = std::upper_bound(pts.begin(), pts.end(), r,
                               [](double rr, const std::complex<double>& z) {
                                   return rr < std::abs(z);
                               });
    return static_cast<std::size_t>(it - pts.begin());
}

// Left edge of the "upper half of the modulus range" estimation window.
double window_lo(const std::vector<std::complex<double>>& pts) {
    const double lo = std::abs(pts.front());
    const double hi = std::abs(pts.back());
    return lo + 0.5 * (hi - lo);
}

struct ExponentFit {
    double slope = 0.0;
    std::vector<std::pair<double, double>> samples;
};

ExponentFit fit_exponent(const PointSequence& s) {
    if (s.points.size() < 100) {
        throw insufficient_data_error(
            "exponent-of-convergence estimate requires at least 100 points");
    }
    const double r_lo = window_lo(s.points);
    const double r_hi = std::abs(s.points.back());
    ExponentFit fit;
    const double llo = std::log(r_lo);
    const double lhi = std::log(r_hi);
    if (!(lhi - llo > 1e-12)) {
        // Degenerate window (all moduli essentially equal): the counting
        // function is constant there, so the fitted growth exponent is zero.
        fit.samples.emplace_back(r_hi,
                                 static_cast<double>(count_leq(s.points, r_hi)));
        return fit;
    }
    constexpr int m = 64;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < m; ++i) {
        double r;
        if (i == 0) {
            r = r_lo;
        } else if (i == m - 1) {
            r = r_hi;
        } else {
            r = std::exp(llo + (lhi - llo) * i / (m - 1.0));
        }
        const double n = static_cast<double>(count_leq(s.points, r));
        fit.samples.emplace_back(r, n);
        const double x = std::log(r);
        const double y = std::log(n);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = sxx - sx * sx / m;
    fit.slope = (sxy - sx * sy / m) / denom;
    return fit;
}

std::string format_tag(const char* prefix, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s%g", prefix, value);
    return buf;
}

}  // namespace

PointSequence PointSequence::make(std::vector<std::complex<double>> pts,
                                  std::optional<std::string> tag) {
    for (const auto& z : pts) {
        if (!(z.real() > 0.0)) {
            throw domain_error("point sequences must lie in the open right half-plane");
        }
    }
    std::stable_sort(pts.begin(), pts.end(),
                     [](const std::complex<double>& a, const std::complex<double>& b) {
                         return std::abs(a) < std::abs(b);
                     });
    PointSequence s;
    s.points = std::move(pts);
    s.generator_tag = std::move(tag);
    return s;
}

PointSequence PointSequence::arithmetic(double step, std::size_t count) {
    if (!(step > 0.0)) throw domain_error("arithmetic generator requires step > 0");
    std::vector<std::complex<double>> pts;
    pts.reserve(count);
    for (std::size_t j = 1; j <= count; ++j) {
        pts.emplace_back(step * static_cast<double>(j), 0.0);
    }
    return make(std::move(pts), format_tag("arith:", step));
}

PointSequence PointSequence::geometric(double base, std::size_t count) {
    if (!(base > 1.0)) throw domain_error("geometric generator requires base > 1");
    std::vector<std::complex<double>> pts;
    pts.reserve(count);
    for (std::size_t j = 1; j <= count; ++j) {
        const double log_z = static_cast<double>(j) * std::log(base);
        if (log_z > 700.0) {
            throw overflow_error("geometric sequence point exceeds double range");
        }
        pts.emplace_back(std::exp(log_z), 0.0);
    }
    return make(std::move(pts), format_tag("geom:", base));
}

std::string to_string(SequenceVerdict v) {
    switch (v) {
        case SequenceVerdict::sufficient_zero_set:
            return "sufficient_zero_set";
        case SequenceVerdict::uniqueness_set:
            return "uniqueness_set";
        case SequenceVerdict::inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

std::size_t counting_function(const PointSequence& s, double r) {
    return count_leq(s.points, r);
}

double exponent_of_convergence_estimate(const PointSequence& s) {
    return fit_exponent(s).slope;
}

std::pair<double, double> densities(const PointSequence& s, double rho1) {
    if (!(rho1 > 0.0)) throw domain_error("densities require rho1 > 0");
    if (s.points.empty()) return {0.0, 0.0};
    const auto& pts = s.points;
    const double r_lo = window_lo(pts);
    const double r_hi = std::abs(pts.back());
    const auto value = [rho1](double count, double r) {
        return count / std::pow(r, rho1);
    };
    // n(r)/r^rho1 decreases between jumps of n, so its extrema over the window
    // occur at the window endpoints and at the step discontinuities.
    double d_plus = std::max(value(static_cast<double>(count_leq(pts, r_lo)), r_lo),
                             value(static_cast<double>(count_leq(pts, r_hi)), r_hi));
    double d_minus = std::min(value(static_cast<double>(count_leq(pts, r_lo)), r_lo),
                              value(static_cast<double>(count_leq(pts, r_hi)), r_hi));
    std::size_t i = count_leq(pts, r_lo);  // first point with |z| > r_lo
    while (i < pts.size()) {
        const double m = std::abs(pts[i]);
        std::size_t j = i;
        while (j < pts.size() && std::abs(pts[j]) == m) ++j;
        d_plus = std::max(d_plus, value(static_cast<double>(j), m));
        d_minus = std::min(d_minus, value(static_cast<double>(i), m));
        i = j;
    }
    return {d_plus, d_minus};
}

double carleman_ratio(const PointSequence& s, double R) {
    if (!(R > euler_e)) throw domain_error("carleman_ratio requires R > e");
    double sum = 0.0;
    for (const auto& z : s.points) {
        if (std::abs(z) > R) break;  // sorted by modulus
        sum += z.real() / std::norm(z);
    }
    return sum / std::log(R);
}

DensityReport classify(const PointSequence& s, double R_max, double rho1_tol,
                       double carleman_margin) {
    if (s.points.size() < 100) {
        throw insufficient_data_error("classification requires at least 100 points");
    }
    if (!(R_max > 10.0 * euler_e)) {
        throw domain_error(
            "classification requires R_max > 10e so the top-decade window is valid");
    }
    DensityReport rep;
    rep.eps0 = std::numeric_limits<double>::infinity();
    for (const auto& z : s.points) rep.eps0 = std::min(rep.eps0, z.real());

    ExponentFit fit = fit_exponent(s);
    rep.rho1_estimate = fit.slope;
    rep.n_samples = std::move(fit.samples);

    const auto [dp, dm] = densities(s, std::max(rep.rho1_estimate, 1e-12));
    rep.d_plus = dp;
    rep.d_minus = dm;

    const double R_lo = R_max / 10.0;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 8; ++i) {
        const double R = (i == 7) ? R_max : R_lo * std::pow(10.0, i / 7.0);
        const double ratio = carleman_ratio(s, R);
        rep.carleman_samples.emplace_back(R, ratio);
        min_ratio = std::min(min_ratio, ratio);
    }

    if (std::abs(rep.rho1_estimate - 1.0) <= rho1_tol && rep.d_plus < 0.5) {
        rep.verdict = SequenceVerdict::sufficient_zero_set;
    } else if (rep.eps0 > 0.0 && min_ratio > two_over_pi + carleman_margin) {
        rep.verdict = SequenceVerdict::uniqueness_set;
    } else {
        rep.verdict = SequenceVerdict::inconclusive;
    }
    return rep;
}

}  // namespace hbspace
