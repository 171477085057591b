#pragma once
/**
 * @file svg.hpp
 * @brief SVG rendering of polyarcs.
 *
 * Every curve becomes one path element. Arc segments map to circular
 * `A` commands (rx = ry = |R|, large-arc flag set for |theta| > pi, sweep
 * flag picked so the drawn arc passes through the true arc midpoint);
 * near-straight segments (|theta| < 1e-6) become `L` commands, and
 * near-full circles (|theta| > 2pi - 0.01) are split into two half arcs
 * to keep the arc flags well conditioned. The drawing is wrapped in a
 * y-flip group so the document renders in mathematical y-up orientation.
 */

#include <arcspline/polyarc.hpp>

#include <string>
#include <vector>

namespace arcspline {

struct RenderOptions {
    /// Stroke width in drawing units; non-positive picks 0.75% of the
    /// larger bounding-box side.
    double stroke_width = 0.0;
    /// Padding around the geometry in drawing units; negative picks 5%
    /// of the larger bounding-box side.
    double padding = -1.0;
    /// Sample points per segment used to estimate the bounding box.
    int samples_per_segment = 64;
};

/// Render one curve.
std::string render_svg(const Polyarc& pa, const RenderOptions& opts = {});

/// Render several curves into one document, one path element each, in
/// the given order.
std::string render_svg(const std::vector<Polyarc>& curves,
                       const RenderOptions& opts = {});

} // namespace arcspline
