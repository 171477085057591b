#include <arcspline/optimize.hpp>

#include <cmath>
#include <limits>

namespace arcspline {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvRatio = (std::sqrt(5.0) - 1.0) / 2.0; // inverse golden ratio

void check_config(const GssConfig& cfg) {
    if (!(cfg.lo < cfg.up))
        throw std::invalid_argument("arcspline: gss: need lo < up");
    if (!(cfg.tol > 0.0))
        throw std::invalid_argument("arcspline: gss: need tol > 0");
    if (cfg.max_iter <= 0)
        throw std::invalid_argument("arcspline: gss: need max_iter > 0");
}

// Reduce an angle into [-2pi, 2pi] by whole +-4pi complements; values
// already inside (-2pi, 2pi) come back unchanged.
double reduce_angle(double theta) { return std::remainder(theta, 2.0 * kTwoPi); }

} // namespace

GssResult gss_with_stats(const std::function<double(double)>& f,
                         const GssConfig& cfg) {
    check_config(cfg);
    double lo = cfg.lo;
    double up = cfg.up;
    GssResult res;
    while (up - lo > cfg.tol) {
        if (res.reductions >= cfg.max_iter)
            throw IterationLimitError(
                "arcspline: gss: bracket failed to close within max_iter "
                "reductions");
        const double delta = up - lo;
        const double probe_lo = up - delta * kInvRatio;
        const double probe_up = lo + delta * kInvRatio;
        if (f(probe_lo) < f(probe_up))
            up = probe_up;
        else
            lo = probe_lo; // ties keep the upper sub-interval
        ++res.reductions;
        res.evaluations += 2;
    }
    res.x = 0.5 * (up + lo);
    return res;
}

double gss(const std::function<double(double)>& f, const GssConfig& cfg) {
    return gss_with_stats(f, cfg).x;
}

double objective_value(const SplineFamily& family, double theta0,
                       Objective obj, double ei) {
    const double th = reduce_angle(theta0);
    if (!(std::abs(th) < kTwoPi))
        return std::numeric_limits<double>::infinity();
    Polyarc spline;
    try {
        spline = propagate(family, th);
    } catch (const std::domain_error&) {
        return std::numeric_limits<double>::infinity();
    }
    switch (obj) {
    case Objective::Length:
        return total_length(spline);
    case Objective::Area:
        return total_abs_area(spline);
    case Objective::Energy:
        return total_energy(spline, ei);
    }
    return std::numeric_limits<double>::infinity();
}

SmoothResult smooth(const SplineFamily& family, Objective obj,
                    const GssConfig& cfg, double ei) {
    const GssResult found = gss_with_stats(
        [&](double t) { return objective_value(family, t, obj, ei); }, cfg);
    SmoothResult res;
    res.theta0 = found.x;
    res.reductions = found.reductions;
    res.evaluations = found.evaluations;
    res.spline = propagate(family, reduce_angle(found.x));
    res.length = total_length(res.spline);
    res.area = total_abs_area(res.spline);
    res.energy = total_energy(res.spline, ei);
    return res;
}

} // namespace arcspline
