#pragma once
/**
 * @file optimize.hpp
 * @brief Arc-spline smoothing: golden-section search over theta0.
 *
 * The family parameter theta0 is chosen by minimizing one of three curve
 * properties: total length, summed unsigned segment area (areal deviation
 * from the polygon), or total bending energy. The scalar minimizer is a
 * golden-section search that shrinks the bracket by (sqrt(5)-1)/2 per
 * step until it is no wider than the tolerance, then returns the bracket
 * midpoint.
 */

#include <arcspline/polyarc.hpp>

#include <functional>
#include <numbers>
#include <stdexcept>

namespace arcspline {

/// Smoothing criterion.
enum class Objective { Length, Area, Energy };

/// Bracket and stopping rule for the golden-section search. Defaults
/// follow the library-wide convention of a generous +-344 degree bracket
/// with 0.6 degree tolerance, which closes in 15 reductions.
struct GssConfig {
    double lo = -344.0 * std::numbers::pi / 180.0;
    double up = 344.0 * std::numbers::pi / 180.0;
    double tol = 0.6 * std::numbers::pi / 180.0;
    int max_iter = 200;
};

/// The bracket failed to close within max_iter reductions.
struct IterationLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimizer plus search effort counters.
struct GssResult {
    double x = 0.0;      ///< bracket midpoint after the final reduction
    int reductions = 0;  ///< interval reductions performed
    int evaluations = 0; ///< objective evaluations (two per reduction)
};

/// Golden-section search for a minimum of f on [cfg.lo, cfg.up]. Probes
/// up - delta*invratio and lo + delta*invratio each step and keeps the
/// sub-interval whose probe is smaller (ties keep the upper one). For a
/// unimodal f the result is within cfg.tol of the minimizer.
GssResult gss_with_stats(const std::function<double(double)>& f,
                         const GssConfig& cfg);

/// Like gss_with_stats but returns just the minimizer.
double gss(const std::function<double(double)>& f, const GssConfig& cfg);

/// Objective of the family member at theta0. theta0 may lie outside
/// (-2pi, 2pi); it is reduced by +-4pi first, like any propagated angle.
/// Degenerate parameters (an angle landing exactly on +-2pi) yield
/// +infinity so searches simply avoid them.
double objective_value(const SplineFamily& family, double theta0,
                       Objective obj, double ei = 1.0);

/// Optimal family member for one objective.
struct SmoothResult {
    double theta0 = 0.0; ///< minimizer (in bracket coordinates)
    Polyarc spline;      ///< the family member at theta0
    double length = 0.0; ///< total length of the spline
    double area = 0.0;   ///< summed unsigned segment areas
    double energy = 0.0; ///< total bending energy at rigidity ei
    int reductions = 0;
    int evaluations = 0;
};

/// Minimize the chosen objective over theta0 and return the winning
/// spline together with all three aggregate properties.
SmoothResult smooth(const SplineFamily& family, Objective obj,
                    const GssConfig& cfg = {}, double ei = 1.0);

} // namespace arcspline
