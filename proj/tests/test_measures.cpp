#include <doctest.h>

#include <cmath>
#include <vector>

#include "hbspace/errors.hpp"
#include "hbspace/measures.hpp"
#include "support.hpp"

using hbspace::AtomicParams;
using hbspace::atom_weight;
using hbspace::BoundaryMeasure;
using hbspace::check_doubling;
using hbspace::measure_mass;
using hbspace::zen_weight_v;
using testsupport::rel_diff;

TEST_CASE("atomic parameters are constructor-validated") {
    CHECK_THROWS_AS(AtomicParams(0.0, 1.0), hbspace::domain_error);
    CHECK_THROWS_AS(AtomicParams(2.0, -1.0), hbspace::domain_error);
    CHECK_NOTHROW(AtomicParams(0.5, 2.0));
}

TEST_CASE("atom weights a^n/n! including the log-space branch") {
    const AtomicParams p(2.0, 1.0);
    CHECK(atom_weight(0, p) == 1.0);
    CHECK(rel_diff(atom_weight(3, p), 8.0 / 6.0) <= 1e-14);
    // n = 50 goes through the log-space evaluation; reference via lgamma.
    const double expected50 = std::exp(50.0 * std::log(2.0) - std::lgamma(51.0));
    CHECK(rel_diff(atom_weight(50, p), expected50) <= 1e-12);
    CHECK_THROWS_AS((void)atom_weight(-1, p), hbspace::domain_error);
}

TEST_CASE("atom weight ratio a/(n+1) links consecutive weights") {
    const AtomicParams p(2.0, 1.0);
    for (int n = 0; n <= 40; ++n) {
        const double ratio = atom_weight(n + 1, p) / atom_weight(n, p);
        CHECK(rel_diff(ratio, 2.0 / (n + 1)) <= 1e-12);
    }
}

TEST_CASE("measure mass of [0, t): atoms below t plus trapezoid density") {
    const auto delta0 = BoundaryMeasure::point_mass_at_zero();
    CHECK(measure_mass(delta0, 1.0) == 1.0);

    const auto leb10 = BoundaryMeasure::lebesgue_truncated(10.0);
    CHECK(rel_diff(measure_mass(leb10, 3.0), 3.0) <= 1e-14);

    // Atomic measure with base 2, spacing 1/2, truncated to n <= 10: atoms at
    // 0, 0.5, 1.0, ... with masses 2^n/n!; [0, 1.1) captures n = 0, 1, 2.
    std::vector<BoundaryMeasure::Atom> atoms;
    const AtomicParams p21(2.0, 1.0);
    for (int n = 0; n <= 10; ++n) atoms.push_back({0.5 * n, atom_weight(n, p21)});
    const auto nu21 = BoundaryMeasure::make(atoms, {}, {});
    CHECK(rel_diff(measure_mass(nu21, 1.1), 5.0) <= 1e-14);

    // Half-open convention: an atom exactly at t is not in [0, t).
    const auto at_one = BoundaryMeasure::make({{1.0, 3.0}}, {}, {});
    CHECK(measure_mass(at_one, 1.0) == 0.0);
    CHECK(measure_mass(at_one, 1.0 + 1e-12) == 3.0);

    // Partial trapezoid segment: density x on [0, 1], mass of [0, 0.5) = 1/8.
    const auto linear = BoundaryMeasure::make({}, {0.0, 1.0}, {0.0, 1.0});
    CHECK(rel_diff(measure_mass(linear, 0.5), 0.125) <= 1e-14);

    CHECK_THROWS_AS((void)measure_mass(delta0, 0.0), hbspace::domain_error);
}

TEST_CASE("measure mass is nondecreasing in t") {
    const auto m = BoundaryMeasure::make({{0.3, 1.0}, {1.7, 0.5}}, {0.0, 2.0}, {0.4, 1.2});
    double prev = 0.0;
    for (double t = 0.1; t <= 3.0; t += 0.1) {
        const double cur = measure_mass(m, t);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("doubling check trivially passes for the point mass and Lebesgue") {
    const std::vector<double> grid = {0.5, 1.0, 2.0};
    const auto d0 = check_doubling(BoundaryMeasure::point_mass_at_zero(), grid, 2.0);
    for (const auto& [t, ratio] : d0.ratio_samples) CHECK(ratio == 1.0);
    CHECK(d0.sup_estimate == 1.0);
    CHECK(d0.pass);

    const auto leb = check_doubling(BoundaryMeasure::lebesgue_truncated(10.0), grid, 2.0);
    for (const auto& [t, ratio] : leb.ratio_samples) CHECK(rel_diff(ratio, 2.0) <= 1e-12);
    CHECK(leb.pass);
    CHECK_FALSE(check_doubling(BoundaryMeasure::lebesgue_truncated(10.0), grid, 1.5).pass);
}

TEST_CASE("doubling check reports zero-mass intervals as domain errors") {
    const auto at_one = BoundaryMeasure::make({{1.0, 1.0}}, {}, {});
    CHECK_THROWS_AS((void)check_doubling(at_one, {0.9}, 2.0), hbspace::domain_error);
    CHECK_THROWS_AS((void)check_doubling(at_one, {}, 2.0), hbspace::domain_error);
}

TEST_CASE("doubling sup estimate is the max sampled ratio") {
    // Atom at 0 plus one at 0.8: doubling jumps when [0,2t) first captures it.
    const auto m = BoundaryMeasure::make({{0.0, 1.0}, {0.8, 3.0}}, {}, {});
    const auto rep = check_doubling(m, {0.2, 0.5, 1.0}, 10.0);
    CHECK(rel_diff(rep.ratio_samples[1].second, 4.0) <= 1e-14);  // t=0.5: (1+3)/1
    CHECK(rel_diff(rep.sup_estimate, 4.0) <= 1e-14);
    CHECK(rep.pass);
}

TEST_CASE("zen weight v against closed forms") {
    const auto d0 = BoundaryMeasure::point_mass_at_zero();
    CHECK(zen_weight_v(-1.0, d0) == 1.0);
    CHECK(zen_weight_v(-7.3, d0) == 1.0);

    // Truncated Lebesgue: v(xi) = (1 - e^{2 xi X}) / (2 |xi|); at X = 50 the
    // correction e^{-100} is far below double precision of the 1/2 target.
    const auto leb = BoundaryMeasure::lebesgue_truncated(50.0);
    CHECK(rel_diff(zen_weight_v(-1.0, leb), 0.5) <= 1e-12);
    const auto leb5 = BoundaryMeasure::lebesgue_truncated(5.0);
    CHECK(rel_diff(zen_weight_v(-1.0, leb5), (1.0 - std::exp(-10.0)) / 2.0) <= 1e-12);

    // Point mass at 0 plus Lebesgue: v(-0.5) = 1 + 1.
    const auto mixed = BoundaryMeasure::make({{0.0, 1.0}}, {0.0, 50.0}, {1.0, 1.0});
    CHECK(rel_diff(zen_weight_v(-0.5, mixed), 2.0) <= 1e-12);

    // Atom off the origin scales exponentially.
    const auto at_one = BoundaryMeasure::make({{1.0, 3.0}}, {}, {});
    CHECK(rel_diff(zen_weight_v(-2.0, at_one), 3.0 * std::exp(-4.0)) <= 1e-13);

    // Exact per-segment integration of a linear density: v(-1) for density x
    // on [0,1] is 1/4 - (3/4) e^{-2}.
    const auto linear = BoundaryMeasure::make({}, {0.0, 1.0}, {0.0, 1.0});
    CHECK(rel_diff(zen_weight_v(-1.0, linear), 0.25 - 0.75 * std::exp(-2.0)) <= 1e-12);

    CHECK_THROWS_AS((void)zen_weight_v(0.0, d0), hbspace::domain_error);
    CHECK_THROWS_AS((void)zen_weight_v(1.0, d0), hbspace::domain_error);
}

TEST_CASE("zen weight v is positive and nondecreasing toward xi = 0") {
    const auto m = BoundaryMeasure::make({{0.2, 1.0}, {1.5, 2.0}}, {0.0, 3.0}, {1.0, 0.5});
    double prev = 0.0;
    for (double xi = -8.0; xi < -0.05; xi += 0.25) {
        const double v = zen_weight_v(xi, m);
        CHECK(v > 0.0);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("boundary measure construction rejects malformed input") {
    CHECK_THROWS_AS((void)BoundaryMeasure::make({{-0.5, 1.0}}, {}, {}),
                    hbspace::domain_error);
    CHECK_THROWS_AS((void)BoundaryMeasure::make({{0.5, 0.0}}, {}, {}),
                    hbspace::domain_error);
    CHECK_THROWS_AS((void)BoundaryMeasure::make({}, {0.0, 1.0}, {1.0}),
                    hbspace::domain_error);
    CHECK_THROWS_AS((void)BoundaryMeasure::make({}, {1.0, 0.5}, {1.0, 1.0}),
                    hbspace::domain_error);
    CHECK_THROWS_AS((void)BoundaryMeasure::make({}, {0.0, 1.0}, {1.0, -1.0}),
                    hbspace::domain_error);
    // Atoms arrive unsorted and are sorted by the constructor.
    const auto m = BoundaryMeasure::make({{2.0, 1.0}, {0.5, 1.0}}, {}, {});
    CHECK(m.atoms.front().location == 0.5);
}
