#include "hbspace/measures.hpp"

#include <algorithm>
#include <cmath>

#include "hbspace/errors.hpp"

namespace hbspace {

namespace {

// phi1(u) = (e^u - 1)/u and phi2(u) = (e^u (u-1) + 1)/u^2, the stable kernels
// of the exponential-times-linear segment integral.
double phi1(double u) {
    if (std::fabs(u) < 1e-8) return 1.0 + u / 2.0 + u * u / 6.0;
    return std::expm1(u) / u;
}

double phi2(double u) {
    if (std::fabs(u) < 1e-3) {
        return 0.5 + u / 3.0 + u * u / 8.0 + u * u * u / 30.0;
    }
    return (std::exp(u) * (u - 1.0) + 1.0) / (u * u);
}

// Exact integral of e^{c x} * (linear density) over [x0, x1], where the
// density takes values v0, v1 at the endpoints.
double exp_linear_segment(double c, double x0, double x1, double v0, double v1) {
    const double d = x1 - x0;
    const double u = c * d;
    const double front = std::exp(c * x0);
    const double slope = (v1 - v0) / d;
    return front * d * (v0 * phi1(u) + slope * d * phi2(u));
}

// Integral of the piecewise-linear density over [x0, t] within one segment.
double linear_partial_mass(double x0, double x1, double v0, double v1, double t) {
    const double vt = v0 + (v1 - v0) * (t - x0) / (x1 - x0);
    return 0.5 * (t - x0) * (v0 + vt);
}

}  // namespace

AtomicParams::AtomicParams(double a_, double rho_) : a(a_), rho(rho_) {
    if (!(a > 0.0) || !(rho > 0.0)) {
        throw domain_error("AtomicParams requires a > 0 and rho > 0");
    }
}

BoundaryMeasure BoundaryMeasure::point_mass_at_zero(double mass) {
    return make({{0.0, mass}}, {}, {});
}

BoundaryMeasure BoundaryMeasure::lebesgue_truncated(double upper, double scale) {
    return make({}, {0.0, upper}, {scale, scale});
}

BoundaryMeasure BoundaryMeasure::make(std::vector<Atom> atoms, std::vector<double> grid,
                                      std::vector<double> values) {
    if (grid.size() != values.size()) {
        throw domain_error("density grid and values must have equal length");
    }
    if (!grid.empty() && grid.size() < 2) {
        throw domain_error("density grid needs at least two points");
    }
    for (const auto& at : atoms) {
        if (at.location < 0.0 || !(at.mass > 0.0)) {
            throw domain_error("atoms require location >= 0 and mass > 0");
        }
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& l, const Atom& r) { return l.location < r.location; });
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0.0) throw domain_error("density grid must be >= 0");
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw domain_error("density grid must be strictly increasing");
        }
        if (values[i] < 0.0) throw domain_error("density values must be >= 0");
    }
    BoundaryMeasure m;
    m.atoms = std::move(atoms);
    m.density_grid = std::move(grid);
    m.density_values = std::move(values);
    return m;
}

double atom_weight(int n, const AtomicParams& params) {
    if (n < 0) throw domain_error("atom_weight requires n >= 0");
    if (n <= 30) {
        double w = 1.0;
        for (int k = 1; k <= n; ++k) w *= params.a / k;
        return w;
    }
    double log_w = n * std::log(params.a) - std::lgamma(n + 1.0);
    return std::exp(log_w);
}

double measure_mass(const BoundaryMeasure& m, double t) {
    if (!(t > 0.0)) throw domain_error("measure_mass requires t > 0");
    double mass = 0.0;
    for (const auto& at : m.atoms) {
        if (at.location < t) mass += at.mass;
    }
    const auto& g = m.density_grid;
    const auto& v = m.density_values;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        if (g[i] >= t) break;
        if (g[i + 1] <= t) {
            mass += 0.5 * (g[i + 1] - g[i]) * (v[i] + v[i + 1]);
        } else {
            mass += linear_partial_mass(g[i], g[i + 1], v[i], v[i + 1], t);
        }
    }
    return mass;
}

DoublingReport check_doubling(const BoundaryMeasure& m,
                              const std::vector<double>& t_grid, double R) {
    if (t_grid.empty()) throw domain_error("check_doubling requires a non-empty grid");
    DoublingReport report;
    report.sup_estimate = 0.0;
    for (double t : t_grid) {
        const double lower = measure_mass(m, t);
        if (!(lower > 0.0)) {
            throw domain_error("doubling ratio undefined: measure of [0,t) is zero");
        }
        const double ratio = measure_mass(m, 2.0 * t) / lower;
        report.ratio_samples.emplace_back(t, ratio);
        report.sup_estimate = std::max(report.sup_estimate, ratio);
    }
    report.pass = report.sup_estimate <= R;
    return report;
}

double zen_weight_v(double xi, const BoundaryMeasure& m) {
    if (!(xi < 0.0)) throw domain_error("zen_weight_v requires xi < 0");
    double v = 0.0;
    for (const auto& at : m.atoms) {
        v += at.mass * std::exp(2.0 * xi * at.location);
    }
    const auto& g = m.density_grid;
    const auto& d = m.density_values;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        v += exp_linear_segment(2.0 * xi, g[i], g[i + 1], d[i], d[i + 1]);
    }
    return v;
}

}  // namespace hbspace
