#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <arcspline/optimize.hpp>

#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace arcspline;
using oracles::abs_close;
using oracles::rel_close;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
const double kInvRatio = (std::sqrt(5.0) - 1.0) / 2.0;

double deg(double d) { return d * kPi / 180.0; }

// reference implementation: the recursive formulation, word for word
double gss_recursive(const std::function<double(double)>& fn, double lo,
                     double up, double tol, int* depth = nullptr,
                     std::vector<double>* widths = nullptr) {
    const double delta = up - lo;
    if (widths)
        widths->push_back(delta);
    if (delta > tol) {
        if (depth)
            ++*depth;
        const double probe_lo = up - delta * kInvRatio;
        const double probe_up = lo + delta * kInvRatio;
        return fn(probe_lo) < fn(probe_up)
                   ? gss_recursive(fn, lo, probe_up, tol, depth, widths)
                   : gss_recursive(fn, probe_lo, up, tol, depth, widths);
    }
    return (up + lo) / 2;
}

GssConfig wide_bracket() {
    return {deg(-344.0), deg(344.0), deg(0.6), 200};
}

SplineFamily collinear_family() {
    return SplineFamily::from_polygon({{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                                      false);
}

SplineFamily tent_family() {
    return SplineFamily::from_polygon({{0, 0}, {1, 1}, {2, 0}}, false);
}

struct GridMin {
    double arg = 0.0;
    double value = std::numeric_limits<double>::infinity();
};

GridMin dense_grid_min(const SplineFamily& fam, Objective obj,
                       double step_deg, double ei = 1.0) {
    GridMin best;
    for (double d = -344.0; d <= 344.0 + 1e-9; d += step_deg) {
        const double v = objective_value(fam, deg(d), obj, ei);
        if (v < best.value) {
            best.value = v;
            best.arg = deg(d);
        }
    }
    return best;
}

// smooth() result is acceptable if it is no worse than the dense-grid
// minimum (allowing the objective's variation over one tolerance width)
// or if it is a certified local minimum of its own basin.
bool optimum_acceptable(const SplineFamily& fam, Objective obj,
                        const SmoothResult& res, double step_deg,
                        double tol) {
    const double fstar = objective_value(fam, res.theta0, obj);
    const GridMin grid = dense_grid_min(fam, obj, step_deg);
    double lo = grid.value, up = grid.value;
    for (double d = -tol; d <= tol; d += deg(step_deg)) {
        const double v = objective_value(fam, grid.arg + d, obj);
        lo = std::min(lo, v);
        up = std::max(up, v);
    }
    if (fstar <= grid.value + (up - lo) + 1e-9 * std::abs(grid.value))
        return true;
    return objective_value(fam, res.theta0 - tol, obj) > fstar &&
           objective_value(fam, res.theta0 + tol, obj) > fstar;
}

} // namespace

TEST_CASE("gss on scalar functions") {
    SUBCASE("unimodal quadratic") {
        const double x = gss([](double t) { return (t - 2.0) * (t - 2.0); },
                             {-10.0, 10.0, 1e-6, 200});
        CHECK(abs_close(x, 2.0, 1e-6));
    }

    SUBCASE("monotone function finds the boundary") {
        const double x = gss([](double t) { return t; }, {0.0, 1.0, 1e-3, 200});
        CHECK(x >= 0.0);
        CHECK(x <= 1e-3);
    }

    SUBCASE("wide default bracket closes in exactly 15 reductions") {
        const auto res = gss_with_stats(
            [](double t) { return std::cos(t); }, wide_bracket());
        CHECK(res.reductions == 15);
        CHECK(res.evaluations == 30);
        // the contraction arithmetic pins the count independently of f
        const double w0 = deg(688.0);
        const double tol = deg(0.6);
        CHECK(w0 * std::pow(kInvRatio, 15) <= tol);
        CHECK(w0 * std::pow(kInvRatio, 14) > tol);
    }

    SUBCASE("bracket width contracts by the inverse golden ratio") {
        const GssConfig cfg = wide_bracket();
        std::vector<double> widths;
        int depth = 0;
        gss_recursive([](double t) { return std::cos(t); }, cfg.lo, cfg.up,
                      cfg.tol, &depth, &widths);
        CHECK(depth == 15);
        const double w0 = cfg.up - cfg.lo;
        for (std::size_t k = 0; k < widths.size(); ++k)
            CHECK(rel_close(widths[k], w0 * std::pow(kInvRatio, double(k)),
                            1e-12));
    }

    SUBCASE("iterative search equals the recursive formulation") {
        const std::vector<std::function<double(double)>> fns = {
            [](double t) { return (t - 2.0) * (t - 2.0); },
            [](double t) { return std::sin(3.0 * t) + 0.1 * t; },
            [](double t) { return std::abs(t - 0.123); },
            [](double t) { return std::cos(t) * std::exp(0.01 * t); },
        };
        oracles::Rng rng(51);
        for (const auto& fn : fns) {
            for (int i = 0; i < 20; ++i) {
                const double lo = rng.uniform(-20.0, 0.0);
                const double up = rng.uniform(0.1, 20.0);
                const double tol = rng.log_uniform(1e-8, 1e-2);
                const double it = gss(fn, {lo, up, tol, 200});
                const double rec = gss_recursive(fn, lo, up, tol);
                CHECK(abs_close(it, rec, 1e-12));
            }
        }
    }

    SUBCASE("iteration limit") {
        CHECK_THROWS_AS(gss([](double t) { return t * t; },
                            {0.0, 1.0, 1e-30, 50}),
                        IterationLimitError);
    }

    SUBCASE("configuration validation") {
        const auto f = [](double t) { return t; };
        CHECK_THROWS_AS(gss(f, {1.0, 0.0, 1e-3, 100}), std::invalid_argument);
        CHECK_THROWS_AS(gss(f, {0.0, 1.0, 0.0, 100}), std::invalid_argument);
        CHECK_THROWS_AS(gss(f, {0.0, 1.0, 1e-3, 0}), std::invalid_argument);
    }

    SUBCASE("defaults") {
        const GssConfig cfg;
        CHECK(rel_close(cfg.lo, deg(-344.0), 1e-15));
        CHECK(rel_close(cfg.up, deg(344.0), 1e-15));
        CHECK(rel_close(cfg.tol, deg(0.6), 1e-15));
        CHECK(cfg.max_iter == 200);
    }
}

TEST_CASE("objective_value") {
    SUBCASE("collinear polygon at theta0 = 0") {
        const auto fam = collinear_family();
        CHECK(objective_value(fam, 0.0, Objective::Length) == 3.0);
        CHECK(objective_value(fam, 0.0, Objective::Area) == 0.0);
        CHECK(objective_value(fam, 0.0, Objective::Energy) == 0.0);
    }

    SUBCASE("right angle at theta0 = pi/4") {
        const auto fam =
            SplineFamily::from_polygon({{0, 0}, {1, 0}, {1, 1}}, false);
        // theta1 = -pi/4 + 2*(pi/2) = 3*pi/4, no complement involved
        const double want =
            arc_length(1.0, kPi / 4, 1.0) + arc_length(1.0, 3.0 * kPi / 4, 1.0);
        CHECK(rel_close(objective_value(fam, kPi / 4, Objective::Length), want,
                        1e-14));
        const double cs =
            oracles::chord_sum_length(Vec2{1, 0}, kPi / 4, 100000) +
            oracles::chord_sum_length(Vec2{0, 1}, 3.0 * kPi / 4, 100000);
        CHECK(rel_close(objective_value(fam, kPi / 4, Objective::Length), cs,
                        1e-8));
    }

    SUBCASE("parameters outside the principal interval are complements") {
        const auto fam = tent_family();
        for (const auto obj :
             {Objective::Length, Objective::Area, Objective::Energy}) {
            const double inside = objective_value(fam, 7.0 - 2.0 * kTwoPi, obj);
            CHECK(objective_value(fam, 7.0, obj) == inside);
        }
    }

    SUBCASE("degenerate angles give an infinite sentinel") {
        // gamma = pi: theta0 = 0 propagates onto the excluded +-2*pi
        const auto fam =
            SplineFamily::from_polygon({{0, 0}, {1, 0}, {0, 0}}, false);
        CHECK(objective_value(fam, 0.0, Objective::Length) ==
              std::numeric_limits<double>::infinity());
        CHECK(std::isfinite(objective_value(fam, 0.3, Objective::Length)));
    }
}

TEST_CASE("smooth") {
    SUBCASE("collinear polygons smooth to straight lines") {
        const auto fam = collinear_family();
        for (const auto obj :
             {Objective::Length, Objective::Area, Objective::Energy}) {
            const auto res = smooth(fam, obj);
            CHECK(std::abs(res.theta0) <= deg(0.6));
            CHECK(res.reductions == 15);
            CHECK(res.evaluations == 30);
        }
    }

    SUBCASE("report matches the returned spline") {
        const auto fam = tent_family();
        const auto res = smooth(fam, Objective::Energy);
        const Polyarc again = propagate(fam, res.theta0);
        REQUIRE(again.thetas.size() == res.spline.thetas.size());
        for (std::size_t i = 0; i < again.thetas.size(); ++i)
            CHECK(again.thetas[i] == res.spline.thetas[i]);
        CHECK(res.length == total_length(res.spline));
        CHECK(res.area == total_abs_area(res.spline));
        CHECK(res.energy == total_energy(res.spline, 1.0));
    }

    SUBCASE("tent polyline against a fine brute-force scan") {
        const auto fam = tent_family();
        for (const auto obj :
             {Objective::Length, Objective::Area, Objective::Energy}) {
            const auto res = smooth(fam, obj);
            const GridMin grid = dense_grid_min(fam, obj, 0.01);
            const double fstar = objective_value(fam, res.theta0, obj);
            // within the f-variation the 0.6 degree tolerance allows
            CHECK(fstar <= grid.value +
                               std::abs(objective_value(
                                            fam, grid.arg + deg(0.6), obj) -
                                        grid.value) +
                               std::abs(objective_value(
                                            fam, grid.arg - deg(0.6), obj) -
                                        grid.value));
        }
    }

    SUBCASE("dense-grid oracle on random polylines") {
        oracles::Rng rng(52);
        for (int i = 0; i < 20; ++i) {
            const auto fam = SplineFamily::from_polygon(
                rng.polyline(3 + int(rng.uniform(0.0, 4.99))), false);
            for (const auto obj :
                 {Objective::Length, Objective::Area, Objective::Energy}) {
                const auto res = smooth(fam, obj);
                CHECK(optimum_acceptable(fam, obj, res, 0.1, deg(0.6)));
            }
        }
    }

    SUBCASE("each optimized spline wins its own criterion") {
        oracles::Rng rng(53);
        for (int i = 0; i < 10; ++i) {
            const auto fam = SplineFamily::from_polygon(
                rng.gentle_polyline(4 + int(rng.uniform(0.0, 3.99)),
                                    deg(60.0)),
                false);
            const auto by_len = smooth(fam, Objective::Length);
            const auto by_area = smooth(fam, Objective::Area);
            const auto by_energy = smooth(fam, Objective::Energy);
            const double slack = 1e-9;
            CHECK(by_len.length <=
                  std::min(by_area.length, by_energy.length) +
                      slack * (1.0 + by_len.length));
            CHECK(by_area.area <= std::min(by_len.area, by_energy.area) +
                                      slack * (1.0 + by_area.area));
            CHECK(by_energy.energy <=
                  std::min(by_len.energy, by_area.energy) +
                      slack * (1.0 + by_energy.energy));
        }
    }
}
