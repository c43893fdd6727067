#include "hbspace/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "hbspace/errors.hpp"

namespace hbspace {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 6.28318530717958647692;
constexpr double inv_sqrt_two_pi = 0.39894228040143267794;

using cplx = std::complex<double>;

void validate_grid(const std::vector<double>& grid, std::size_t samples) {
    if (grid.size() < 2) throw domain_error("sampled function needs at least two grid points");
    if (grid.size() != samples) throw domain_error("grid and samples must have equal length");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw domain_error("grid must be strictly increasing");
    }
}

// Piecewise-linear interpolation with a binary search per call.
cplx interp(const std::vector<double>& g, const std::vector<cplx>& v, double x) {
    if (x <= g.front() || x >= g.back()) {
        if (x == g.front()) return v.front();
        if (x == g.back()) return v.back();
        return {};
    }
    const auto it = std::upper_bound(g.begin(), g.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - g.begin()) - 1;
    const double t = (x - g[i]) / (g[i + 1] - g[i]);
    return v[i] + (v[i + 1] - v[i]) * t;
}

// The synthesized function of a piecewise-linear psi has the exact form
//   sqrt(2 pi) f(z) = -P(z)/z + Q(z)/z^2,
//   P(z) = sum_k J_k e^{z xi_k},  Q(z) = sum_k S_k e^{z xi_k},
// where J_k are the value jumps of psi at the knots (nonzero only at the
// support endpoints) and S_k the slope jumps. Near z = 0 the two terms cancel
// to a finite limit, so a Taylor expansion in the exact moments of psi takes
// over there.
struct SynthForm {
    std::vector<double> xi;
    std::vector<cplx> val_jump;
    std::vector<cplx> slope_jump;
    double extent = 0.0;
    cplx moments[8] = {};  // integral psi(xi) xi^m dxi, m = 0..7

    explicit SynthForm(const SpectralFunction& psi) {
        const auto& g = psi.grid;
        const auto& c = psi.samples;
        const std::size_t n = g.size();
        xi = g;
        val_jump.assign(n, cplx{});
        slope_jump.assign(n, cplx{});
        val_jump[0] += c[0];
        val_jump[n - 1] -= c[n - 1];
        cplx prev_slope{};
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const cplx slope = (c[k + 1] - c[k]) / (g[k + 1] - g[k]);
            slope_jump[k] = slope - prev_slope;
            prev_slope = slope;
        }
        slope_jump[n - 1] = -prev_slope;
        extent = g.back() - g.front();
        for (std::size_t k = 0; k + 1 < n; ++k) {
            // alpha + beta xi on the segment
            const cplx beta = (c[k + 1] - c[k]) / (g[k + 1] - g[k]);
            const cplx alpha = c[k] - beta * g[k];
            double p0 = g[k], p1 = g[k + 1];
            double pow0 = p0, pow1 = p1;
            for (int m = 0; m < 8; ++m) {
                // integral (alpha + beta xi) xi^m = alpha xi^{m+1}/(m+1) + beta xi^{m+2}/(m+2)
                const double q0 = pow0 * p0, q1 = pow1 * p1;
                moments[m] += alpha * (pow1 - pow0) / (m + 1.0) + beta * (q1 - q0) / (m + 2.0);
                pow0 = q0;
                pow1 = q1;
            }
        }
    }

    // sqrt(2 pi) f(z)
    cplx F(cplx z) const {
        if (std::abs(z) < 1e-3) {
            cplx acc{};
            cplx zp = 1.0;
            double fact = 1.0;
            for (int m = 0; m < 8; ++m) {
                acc += moments[m] * zp / fact;
                zp *= z;
                fact *= (m + 1.0);
            }
            return acc;
        }
        cplx P{}, Q{};
        for (std::size_t k = 0; k < xi.size(); ++k) {
            const cplx e = std::exp(z * xi[k]);
            P += val_jump[k] * e;
            Q += slope_jump[k] * e;
        }
        return -P / z + Q / (z * z);
    }
};

// Evaluator of sqrt(2 pi) f(x + i y) for fixed x with the x-dependent factors
// folded into the coefficients.
struct LineEvaluator {
    const SynthForm& form;
    double x;
    std::vector<cplx> aJ, aS;

    LineEvaluator(const SynthForm& f, double x_) : form(f), x(x_) {
        const std::size_t n = f.xi.size();
        aJ.resize(n);
        aS.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double e = std::exp(x * f.xi[k]);
            aJ[k] = f.val_jump[k] * e;
            aS[k] = f.slope_jump[k] * e;
        }
    }

    cplx F(double y) const {
        const cplx z(x, y);
        if (std::abs(z) < 1e-3) return form.F(z);
        cplx P{}, Q{};
        for (std::size_t k = 0; k < form.xi.size(); ++k) {
            const double ph = y * form.xi[k];
            const cplx e(std::cos(ph), std::sin(ph));
            P += aJ[k] * e;
            Q += aS[k] * e;
        }
        return -P / z + Q / (z * z);
    }
};

// ---- Oscillatory tail integrals ---------------------------------------------
// cos_tail(m, w) = integral_w^inf cos(u)/u^m du and its sine companion, via
// eight levels of integration by parts for w >= 30 and a quadrature bridge to
// w = 30 below that.

// ic[m] = integral_w^inf cos(u)/u^m du, is[m] the sine companion, m = 2..12.
// One backward integration-by-parts sweep from m = 20; the dropped remainder
// at the top propagates down bounded by 20!/20 * w^{-20} (< 1e-12 relative at
// w = 30). Below w = 30 a fixed-rule bridge covers [w, 30].
struct UnitTails {
    double ic[22];
    double is[22];
};

UnitTails unit_tails_asymptotic(double w) {
    UnitTails t{};
    const double sinw = std::sin(w);
    const double cosw = std::cos(w);
    t.ic[21] = t.is[21] = 0.0;
    for (int m = 20; m >= 2; --m) {
        const double wm = std::pow(w, -m);
        t.ic[m] = -sinw * wm + m * t.is[m + 1];
        t.is[m] = cosw * wm - m * t.ic[m + 1];
    }
    return t;
}

UnitTails unit_tails(double w) {
    constexpr double w_switch = 30.0;
    if (w >= w_switch) return unit_tails_asymptotic(w);
    UnitTails t = unit_tails_asymptotic(w_switch);
    const std::size_t panels = static_cast<std::size_t>((w_switch - w) / 1.5) + 4;
    for (int m = 2; m <= 12; ++m) {
        t.ic[m] += gl15_composite(
            [m](double u) { return std::cos(u) / std::pow(u, m); }, w, w_switch, panels);
        t.is[m] += gl15_composite(
            [m](double u) { return std::sin(u) / std::pow(u, m); }, w, w_switch, panels);
    }
    return t;
}

// CM(m) = integral_Y^inf cos(delta y) / y^m dy, SM likewise with sine.
struct CmSm {
    double cm[13];
    double sm[13];
};

CmSm make_cm_sm(double delta, double Y) {
    CmSm r{};
    if (delta == 0.0) {
        for (int m = 2; m <= 12; ++m) {
            r.cm[m] = std::pow(Y, 1.0 - m) / (m - 1.0);
            r.sm[m] = 0.0;
        }
        return r;
    }
    const double ad = std::fabs(delta);
    const double sgn = delta > 0.0 ? 1.0 : -1.0;
    const UnitTails t = unit_tails(ad * Y);
    double scale = ad;  // |delta|^{m-1} built up incrementally
    for (int m = 2; m <= 12; ++m) {
        r.cm[m] = scale * t.ic[m];
        r.sm[m] = sgn * scale * t.is[m];
        scale *= ad;
    }
    return r;
}

// Tail of integral_{|y|>Y} |sqrt(2pi) f(x+iy)|^2 dy for the truncated
// piecewise-linear synthesis, expanded in powers of (x/y)^2 (five terms).
// The pair (q,p) shares the (p,q) tails up to the sign of the odd part, so
// only p <= q is computed.
double tail_correction(const SynthForm& form, double x, double Y) {
    const std::size_t n = form.xi.size();
    const double x2 = x * x;
    const double x4 = x2 * x2;
    const double x6 = x4 * x2;
    const double x8 = x4 * x4;
    double acc = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p; q < n; ++q) {
            const double delta = form.xi[p] - form.xi[q];
            const CmSm t = make_cm_sm(delta, Y);
            const double U1 = 2.0 * (t.cm[2] - x2 * t.cm[4] + x4 * t.cm[6] -
                                     x6 * t.cm[8] + x8 * t.cm[10]);
            const double U2 = 2.0 * (t.cm[4] - 2.0 * x2 * t.cm[6] + 3.0 * x4 * t.cm[8] -
                                     4.0 * x6 * t.cm[10] + 5.0 * x8 * t.cm[12]);
            const double G = 2.0 * (t.sm[3] - 2.0 * x2 * t.sm[5] + 3.0 * x4 * t.sm[7] -
                                    4.0 * x6 * t.sm[9] + 5.0 * x8 * t.sm[11]);
            const double front = std::exp(x * (form.xi[p] + form.xi[q]));
            const double jj = (form.val_jump[p] * std::conj(form.val_jump[q])).real();
            const double ss = (form.slope_jump[p] * std::conj(form.slope_jump[q])).real();
            if (p == q) {
                const double js = (form.val_jump[p] * std::conj(form.slope_jump[p])).real();
                acc += front * (jj * U1 + ss * U2 - 2.0 * js * x * U2);
            } else {
                const double js_pq = (form.val_jump[p] * std::conj(form.slope_jump[q])).real();
                const double js_qp = (form.val_jump[q] * std::conj(form.slope_jump[p])).real();
                acc += front * (2.0 * jj * U1 + 2.0 * ss * U2 -
                                2.0 * (js_pq * (x * U2 - G) + js_qp * (x * U2 + G)));
            }
        }
    }
    return acc;
}

double line_integral_sq(const SynthForm& form, double x, const QuadratureConfig& q) {
    const LineEvaluator ev(form, x);
    const double Y = q.line_truncation_Y;
    double needed = std::max(8.0, form.extent * Y / 8.0);
    int min_ref = 4;
    while ((1 << min_ref) < needed && min_ref < q.max_refinements - 2) ++min_ref;
    const double bulk = integrate_adaptive(
        [&ev](double y) { return std::norm(ev.F(y)); }, -Y, Y, q, 0.0, min_ref);
    const double tail = (x <= 0.5 * Y) ? tail_correction(form, x, Y) : 0.0;
    return (bulk + tail) / two_pi;
}

// ---- Generic cell-partition integration -------------------------------------
// Below the threshold every cell gets the adaptive engine; above it the data
// is considered dense (cells already shorter than any feature) and one fixed
// 7-point rule per cell is exact to machine precision.

constexpr std::size_t dense_cell_threshold = 512;

template <typename F>
auto integrate_over_cells(F&& f, const std::vector<double>& breaks,
                          const QuadratureConfig& q) -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    if (breaks.size() >= dense_cell_threshold) {
        return integrate_cells_gl7(f, breaks);
    }
    R total{};
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        total += integrate_adaptive(f, breaks[i], breaks[i + 1], q, 0.0, 2);
    }
    return total;
}

// Linear-walk inner product for dense merged grids: cursors replace the
// per-node binary search, one fixed 7-point rule per merged cell.
cplx inner_dense(const SpectralFunction& f1, const SpectralFunction& f2,
                 const std::vector<double>& breaks, const AtomicParams& p) {
    const auto& g1 = f1.grid;
    const auto& g2 = f2.grid;
    std::size_t i1 = 0, i2 = 0;
    const auto lerp_at = [](const std::vector<double>& g, const std::vector<cplx>& v,
                            std::size_t i, double x) {
        return v[i] + (v[i + 1] - v[i]) * ((x - g[i]) / (g[i + 1] - g[i]));
    };
    cplx total{};
    for (std::size_t c = 0; c + 1 < breaks.size(); ++c) {
        const double a = breaks[c], b = breaks[c + 1];
        while (i1 + 2 < g1.size() && g1[i1 + 1] <= a) ++i1;
        while (i2 + 2 < g2.size() && g2[i2 + 1] <= a) ++i2;
        const cplx v1a = lerp_at(g1, f1.samples, i1, a);
        const cplx v1b = lerp_at(g1, f1.samples, i1, b);
        const cplx v2a = lerp_at(g2, f2.samples, i2, a);
        const cplx v2b = lerp_at(g2, f2.samples, i2, b);
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        cplx cell{};
        for (int k = 0; k < detail::gl7_size; ++k) {
            const double t = 0.5 * (1.0 + detail::gl7_nodes[k]);
            const double xi = mid + half * detail::gl7_nodes[k];
            const cplx u1 = v1a + (v1b - v1a) * t;
            const cplx u2 = v2a + (v2b - v2a) * t;
            cell += detail::gl7_weights[k] * (u1 * std::conj(u2)) *
                    std::exp(p.a * std::exp(p.rho * xi));
        }
        total += cell * half;
    }
    return total;
}

std::vector<double> merged_breakpoints(const std::vector<double>& g1,
                                       const std::vector<double>& g2, double lo,
                                       double hi) {
    std::vector<double> out;
    out.reserve(g1.size() + g2.size());
    for (double v : g1)
        if (v >= lo && v <= hi) out.push_back(v);
    for (double v : g2)
        if (v >= lo && v <= hi) out.push_back(v);
    out.push_back(lo);
    out.push_back(hi);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double weight_exp(double a, double rho, double xi) { return std::exp(a * std::exp(rho * xi)); }

}  // namespace

SpectralFunction SpectralFunction::make(std::vector<double> grid,
                                        std::vector<std::complex<double>> samples) {
    validate_grid(grid, samples.size());
    SpectralFunction f;
    f.grid = std::move(grid);
    f.samples = std::move(samples);
    return f;
}

std::complex<double> SpectralFunction::value(double xi) const {
    return interp(grid, samples, xi);
}

HalfLineFunction HalfLineFunction::make(std::vector<double> grid,
                                        std::vector<std::complex<double>> samples) {
    validate_grid(grid, samples.size());
    if (!(grid.front() > 0.0)) {
        throw domain_error("half-line function requires support in (0, inf)");
    }
    HalfLineFunction f;
    f.grid = std::move(grid);
    f.samples = std::move(samples);
    return f;
}

std::complex<double> HalfLineFunction::value(double t) const {
    if (t <= grid.front() || t >= grid.back()) {
        if (t == grid.front()) return samples.front();
        if (t == grid.back()) return samples.back();
        return {};
    }
    const auto it = std::upper_bound(grid.begin(), grid.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - grid.begin()) - 1;
    const double s =
        (std::log(t) - std::log(grid[i])) / (std::log(grid[i + 1]) - std::log(grid[i]));
    return samples[i] + (samples[i + 1] - samples[i]) * s;
}

LineSamples LineSamples::make(std::vector<double> y,
                              std::vector<std::complex<double>> values) {
    validate_grid(y, values.size());
    LineSamples l;
    l.y = std::move(y);
    l.values = std::move(values);
    return l;
}

std::complex<double> pw_synthesize(const SpectralFunction& psi, std::complex<double> z,
                                   const QuadratureConfig& q) {
    if (z.real() < 0.0) throw domain_error("pw_synthesize requires Re z >= 0");
    cplx total{};
    for (std::size_t i = 0; i + 1 < psi.grid.size(); ++i) {
        const double a = psi.grid[i], b = psi.grid[i + 1];
        const cplx va = psi.samples[i], vb = psi.samples[i + 1];
        const double osc = std::fabs(z.imag()) * (b - a);
        int min_ref = 2;
        while ((1 << min_ref) < osc / 6.0 && min_ref < q.max_refinements - 2) ++min_ref;
        total += integrate_adaptive(
            [&](double xi) {
                const cplx v = va + (vb - va) * ((xi - a) / (b - a));
                return v * std::exp(z * xi);
            },
            a, b, q, 0.0, min_ref);
    }
    return inv_sqrt_two_pi * total;
}

std::complex<double> pw_synthesize_closed(const SpectralFunction& psi,
                                          std::complex<double> z) {
    const SynthForm form(psi);
    return inv_sqrt_two_pi * form.F(z);
}

double norm_M_spectral(const SpectralFunction& psi, const AtomicParams& p,
                       const QuadratureConfig& q) {
    const auto f = [&](double xi) {
        return std::norm(interp(psi.grid, psi.samples, xi)) * weight_exp(p.a, p.rho, xi);
    };
    const double sq = integrate_over_cells(f, psi.grid, q);
    return std::sqrt(std::max(0.0, sq));
}

double line_norm_sq(const SpectralFunction& psi, double x, const QuadratureConfig& q) {
    const SynthForm form(psi);
    return line_integral_sq(form, x, q);
}

LineNormDiagnostics norm_M_lines_diag(const SpectralFunction& psi, const AtomicParams& p,
                                      const QuadratureConfig& q) {
    const SynthForm form(psi);
    LineNormDiagnostics diag;
    double sum = 0.0;
    int quiet = 0;
    bool reached_end = true;
    for (int n = 0; n <= q.series_truncation_N; ++n) {
        const double x = p.rho * n / 2.0;
        const double term = atom_weight(n, p) * line_integral_sq(form, x, q);
        sum += term;
        diag.last_term = term;
        diag.terms_used = n + 1;
        if (n >= 1 && term <= 1e-16 * sum) {
            if (++quiet >= 2) {
                reached_end = false;
                break;
            }
        } else {
            quiet = 0;
        }
    }
    if (reached_end && sum > 0.0) {
        diag.truncation_warning = diag.last_term > q.target_rel_error * sum;
    }
    diag.norm = std::sqrt(std::max(0.0, sum));
    return diag;
}

double norm_M_lines(const SpectralFunction& psi, const AtomicParams& p,
                    const QuadratureConfig& q) {
    return norm_M_lines_diag(psi, p, q).norm;
}

std::complex<double> inner_M(const SpectralFunction& psi1, const SpectralFunction& psi2,
                             const AtomicParams& p, const QuadratureConfig& q) {
    const double lo = std::max(psi1.grid.front(), psi2.grid.front());
    const double hi = std::min(psi1.grid.back(), psi2.grid.back());
    if (!(hi > lo)) return {};
    const auto breaks = merged_breakpoints(psi1.grid, psi2.grid, lo, hi);
    if (breaks.size() >= dense_cell_threshold) {
        return inner_dense(psi1, psi2, breaks, p);
    }
    const auto f = [&](double xi) {
        return interp(psi1.grid, psi1.samples, xi) *
               std::conj(interp(psi2.grid, psi2.samples, xi)) * weight_exp(p.a, p.rho, xi);
    };
    return integrate_over_cells(f, breaks, q);
}

double average_function(const SpectralFunction& psi, double x, const QuadratureConfig& q) {
    if (!(x > 0.0)) throw domain_error("average_function requires x > 0");
    const auto f = [&](double xi) {
        return std::norm(interp(psi.grid, psi.samples, xi)) * std::exp(2.0 * x * xi);
    };
    return integrate_over_cells(f, psi.grid, q);
}

std::complex<double> mellin_transform(const HalfLineFunction& phi, std::complex<double> z,
                                      const QuadratureConfig& q) {
    if (!(phi.grid.front() > 0.0)) {
        throw domain_error("mellin_transform requires support bounded away from 0");
    }
    if (!(z.real() > 0.0)) throw domain_error("mellin_transform requires Re z > 0");
    const auto f = [&](double t) { return phi.value(t) * std::exp((z - 1.0) * std::log(t)); };
    return inv_sqrt_two_pi * integrate_over_cells(f, phi.grid, q);
}

SpectralFunction mellin_to_spectral(const HalfLineFunction& phi) {
    std::vector<double> grid(phi.grid.size());
    for (std::size_t i = 0; i < phi.grid.size(); ++i) grid[i] = std::log(phi.grid[i]);
    return SpectralFunction::make(std::move(grid), phi.samples);
}

double norm_halfline_weighted(const HalfLineFunction& phi, const AtomicParams& p,
                              const QuadratureConfig& q) {
    const auto f = [&](double t) {
        return std::norm(phi.value(t)) * std::exp(p.a * std::pow(t, p.rho)) / t;
    };
    const double sq = integrate_over_cells(f, phi.grid, q);
    return std::sqrt(std::max(0.0, sq));
}

std::complex<double> mellin_inverse_line(const LineSamples& f_line, double c, double xi,
                                         const QuadratureConfig& q) {
    if (!(xi > 0.0)) throw domain_error("mellin_inverse_line requires xi > 0");
    double peak = 0.0;
    for (const auto& v : f_line.values) peak = std::max(peak, std::abs(v));
    if (peak > 0.0) {
        const double edge =
            std::max(std::abs(f_line.values.front()), std::abs(f_line.values.back()));
        if (edge >= mellin_line_decay_threshold * peak) {
            throw decay_error("line samples have not decayed at the window edges");
        }
    }
    const double L = std::log(xi);
    const auto f = [&](double y) {
        const cplx val = interp(f_line.y, f_line.values, y);
        return val * std::exp(cplx(-c * L, -y * L));
    };
    return inv_sqrt_two_pi * integrate_over_cells(f, f_line.y, q);
}

std::complex<double> zen_synthesize(const SpectralFunction& phi, std::complex<double> z,
                                    const QuadratureConfig& q) {
    if (!(z.real() > 0.0)) throw domain_error("zen_synthesize requires Re z > 0");
    if (phi.grid.back() > 0.0) {
        throw domain_error("zen_synthesize requires support in (-inf, 0]");
    }
    return pw_synthesize(phi, z, q);
}

double norm_zen(const SpectralFunction& phi, const BoundaryMeasure& m,
                const QuadratureConfig& q) {
    if (phi.grid.back() > 0.0) {
        throw domain_error("norm_zen requires support in (-inf, 0]");
    }
    const auto f = [&](double xi) {
        return std::norm(interp(phi.grid, phi.samples, xi)) * zen_weight_v(xi, m);
    };
    const double sq = integrate_over_cells(f, phi.grid, q);
    return std::sqrt(std::max(0.0, sq));
}

}  // namespace hbspace
