#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace hbspace {

// Parameters of the atomic boundary measure with mass a^n/n! at x = rho*n/2.
struct AtomicParams {
    double a;
    double rho;

    AtomicParams(double a_, double rho_);
};

// A finite boundary measure on [0, inf): a sorted list of atoms plus an
// optional piecewise-linear density supported on its grid (zero beyond it).
struct BoundaryMeasure {
    struct Atom {
        double location;  // >= 0
        double mass;      // > 0
    };

    std::vector<Atom> atoms;
    std::vector<double> density_grid;    // strictly increasing, >= 0
    std::vector<double> density_values;  // >= 0, same length as grid

    static BoundaryMeasure point_mass_at_zero(double mass = 1.0);
    static BoundaryMeasure lebesgue_truncated(double upper, double scale = 1.0);
    static BoundaryMeasure make(std::vector<Atom> atoms, std::vector<double> grid,
                                std::vector<double> values);

    bool has_density() const { return !density_grid.empty(); }
};

struct DoublingReport {
    std::vector<std::pair<double, double>> ratio_samples;  // (t, mass[0,2t)/mass[0,t))
    double sup_estimate;
    bool pass;
};

// a^n/n!, evaluated in log-space for n > 30 to avoid overflow in the factors.
double atom_weight(int n, const AtomicParams& params);

// Mass of [0, t): atoms with location strictly below t plus the density
// integral over [0, t). An atom sitting exactly at t is excluded.
double measure_mass(const BoundaryMeasure& m, double t);

// Samples the doubling ratio mass[0,2t)/mass[0,t) on t_grid; pass iff the
// sampled supremum is <= R. Throws domain_error when some mass[0,t) is zero.
DoublingReport check_doubling(const BoundaryMeasure& m,
                              const std::vector<double>& t_grid, double R);

// v(xi) = sum_atoms mass * e^{2 xi x} + integral e^{2 xi x} density(x) dx for
// xi < 0. The density part is integrated exactly segment by segment.
double zen_weight_v(double xi, const BoundaryMeasure& m);

}  // namespace hbspace
