#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <type_traits>
#include <vector>

#include "hbspace/errors.hpp"

namespace hbspace {

// Shared tuning knobs for every integral and series truncation in the library.
// The CLI exposes each field as a flag with these values as defaults.
struct QuadratureConfig {
    double target_rel_error = 1e-9;
    int max_refinements = 20;
    double line_truncation_Y = 200.0;
    int series_truncation_N = 60;
};

namespace detail {

// 15-point Gauss-Legendre rule on [-1, 1].
inline constexpr int gl15_size = 15;
inline constexpr double gl15_nodes[gl15_size] = {
    -9.87992518020485377406e-01, -9.37273392400705951388e-01,
    -8.48206583410427206182e-01, -7.24417731360170069621e-01,
    -5.70972172608538830474e-01, -3.94151347077563385390e-01,
    -2.01194093997434542143e-01, 0.0,
    2.01194093997434542143e-01,  3.94151347077563385390e-01,
    5.70972172608538830474e-01,  7.24417731360170069621e-01,
    8.48206583410427206182e-01,  9.37273392400705951388e-01,
    9.87992518020485377406e-01};
inline constexpr double gl15_weights[gl15_size] = {
    3.07532419961181538448e-02, 7.03660474881071529296e-02,
    1.07159220467171759084e-01, 1.39570677926154324000e-01,
    1.66269205816994114500e-01, 1.86161000015562239085e-01,
    1.98431485327111634120e-01, 2.02578241925561369774e-01,
    1.98431485327111634120e-01, 1.86161000015562239085e-01,
    1.66269205816994114500e-01, 1.39570677926154324000e-01,
    1.07159220467171759084e-01, 7.03660474881071529296e-02,
    3.07532419961181538448e-02};

// 7-point rule, used for fixed per-segment integration of densely sampled data.
inline constexpr int gl7_size = 7;
inline constexpr double gl7_nodes[gl7_size] = {
    -9.49107912342758375246e-01, -7.41531185599394460084e-01,
    -4.05845151377397184156e-01, 0.0,
    4.05845151377397184156e-01,  7.41531185599394460084e-01,
    9.49107912342758375246e-01};
inline constexpr double gl7_weights[gl7_size] = {
    1.29484966168869924941e-01, 2.79705391489276589123e-01,
    3.81830050505118756554e-01, 4.17959183673469125697e-01,
    3.81830050505118756554e-01, 2.79705391489276589123e-01,
    1.29484966168869924941e-01};

template <typename T>
double abs_value(const T& v) {
    if constexpr (std::is_same_v<T, std::complex<double>>) {
        return std::abs(v);
    } else {
        return std::fabs(v);
    }
}

}  // namespace detail

// One pass of composite 15-point Gauss-Legendre with `panels` equal panels.
template <typename F>
auto gl15_composite(F&& f, double a, double b, std::size_t panels)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    const double h = (b - a) / static_cast<double>(panels);
    R total{};
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = a + (static_cast<double>(p) + 0.5) * h;
        R panel{};
        for (int i = 0; i < detail::gl15_size; ++i) {
            panel += detail::gl15_weights[i] * f(mid + 0.5 * h * detail::gl15_nodes[i]);
        }
        total += panel * (0.5 * h);
    }
    return total;
}

// Adaptive integration on [a, b]: the panel count doubles until two
// consecutive refinements agree to the relative target (measured against
// max(|I|, abs_scale)), starting no earlier than min_refinements doublings so
// a sharply peaked integrand cannot slip through a coarse pass unseen.
// Throws non_convergence_error when max_refinements doublings are exhausted.
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& cfg,
                        double abs_scale = 0.0, int min_refinements = 4)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    if (!(b > a)) return R{};
    R prev = gl15_composite(f, a, b, 1);
    double prev_diff = std::numeric_limits<double>::infinity();
    std::size_t panels = 1;
    for (int level = 1; level <= cfg.max_refinements; ++level) {
        panels *= 2;
        R cur = gl15_composite(f, a, b, panels);
        const double diff = detail::abs_value(cur - prev);
        const double scale = std::max(detail::abs_value(cur), abs_scale);
        const double tol = cfg.target_rel_error * scale;
        if (level >= min_refinements && diff <= tol &&
            (prev_diff <= 16.0 * tol || diff == 0.0)) {
            return cur;
        }
        prev = cur;
        prev_diff = diff;
    }
    throw non_convergence_error(
        "integral did not stabilize within the refinement budget");
}

// Integrates a function given on an ordered breakpoint partition, one fixed
// 7-point rule per cell. Intended for data already sampled densely enough that
// each cell is smooth; the caller owns that guarantee.
template <typename F>
auto integrate_cells_gl7(F&& f, const std::vector<double>& breaks)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    R total{};
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        const double a = breaks[s];
        const double b = breaks[s + 1];
        if (!(b > a)) continue;
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        R cell{};
        for (int i = 0; i < detail::gl7_size; ++i) {
            cell += detail::gl7_weights[i] * f(mid + half * detail::gl7_nodes[i]);
        }
        total += cell * half;
    }
    return total;
}

}  // namespace hbspace
