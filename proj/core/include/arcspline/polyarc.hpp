#pragma once
/**
 * @file polyarc.hpp
 * @brief Piecewise circular curves: polyarcs and G1 arc splines.
 *
 * A polyarc is an ordered vertex list with one angular range per segment;
 * segment i is the arc from vertex i to vertex i+1 (the last segment of a
 * closed curve runs back to vertex 0). Plain polyarcs are only G0; an arc
 * spline is a polyarc whose adjacent arcs share the tangent at each join.
 *
 * Over a fixed polygon the arc splines form a one-parameter family: the
 * first angle theta0 determines every following one through the exterior
 * angles, theta_i = -theta_{i-1} + 2 gamma_i, reduced by +-4pi whenever
 * the recurrence leaves (-2pi, 2pi). SplineFamily precomputes the gammas;
 * propagate() evaluates a family member.
 */

#include <arcspline/arc.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace arcspline {

/// A structural rule of a polyarc or document was violated; the message
/// names the offending vertex and rule.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Piecewise circular curve as (vertex, theta) data.
struct Polyarc {
    std::vector<Vec2> vertices;
    std::vector<double> thetas; ///< one per segment
    bool closed = false;

    std::size_t segment_count() const { return thetas.size(); }

    /// First vertex of segment i.
    Vec2 vertex_at(std::size_t i) const { return vertices[i]; }

    /// Second vertex of segment i (vertex 0 for the closing segment).
    Vec2 vertex_after(std::size_t i) const {
        return vertices[(i + 1) % vertices.size()];
    }

    Vec2 chord(std::size_t i) const { return vertex_after(i) - vertices[i]; }

    ArcSeg segment(std::size_t i) const {
        return {vertices[i], vertex_after(i), thetas[i]};
    }
};

/// Check the structural rules: non-empty, finite components, theta count
/// matching the vertex count and closed flag, every theta in (-2pi, 2pi),
/// and no zero-length segment with a nonzero theta. Throws
/// ValidationError naming the first violation.
void validate(const Polyarc& pa);

/// Exact total length: sum of the segment arc lengths.
double total_length(const Polyarc& pa);

/// Signed enclosed area: shoelace sum over the vertex polygon plus all
/// signed segment areas. Counterclockwise positive. Open curves are
/// implicitly closed by the chord from the last vertex back to the first;
/// orientation and self-intersection are not restricted, so interpret the
/// sign accordingly.
double total_area(const Polyarc& pa);

/// Sum of the unsigned segment areas (the areal deviation of the arcs
/// from the vertex polygon).
double total_abs_area(const Polyarc& pa);

/// Total bending energy: sum of the segment energies at rigidity ei.
/// Straight segments contribute nothing.
double total_energy(const Polyarc& pa, double ei = 1.0);

/// Exterior (turning) angle between consecutive edge vectors,
/// atan2(skew(c_prev, c_next), dot(c_prev, c_next)) in (-pi, pi]; an
/// exact reversal maps to +pi.
double exterior_angle(Vec2 c_prev, Vec2 c_next);

/// The one-parameter arc-spline family over a polygon: vertices plus the
/// precomputed exterior angles at the interior vertices.
struct SplineFamily {
    std::vector<Vec2> polygon;
    bool closed = false;
    std::vector<Vec2> chords;   ///< one per segment
    std::vector<double> gammas; ///< one per interior vertex

    std::size_t segment_count() const { return chords.size(); }

    /// Build from a vertex list; thetas play no role. Requires at least
    /// two vertices and no repeated consecutive vertices (including the
    /// wrap pair of closed polygons).
    static SplineFamily from_polygon(std::vector<Vec2> vertices, bool closed);
};

/// Evaluate the family member with first angle theta0 in (-2pi, 2pi):
/// propagates theta_i = -theta_{i-1} + 2 gamma_i with the +-4pi reduction.
/// The result is G1 at every interior join; for closed polygons the
/// closing segment participates but G1 at the final join is generally not
/// achieved. Throws std::domain_error when a propagated angle lands
/// exactly on +-2pi (degenerate full circle).
Polyarc propagate(const SplineFamily& family, double theta0);

/// Largest tangent mismatch |end_tangent(i) - start_tangent(i+1)| over
/// the interior joins; 0 for arc splines and for fewer than two segments.
/// The final join of a closed curve is excluded (see g1_closing_defect).
double g1_defect(const Polyarc& pa);

/// Tangent mismatch at the final join of a closed polyarc (last segment
/// against the first); 0 for open curves.
double g1_closing_defect(const Polyarc& pa);

/// Sample every segment at points_per_segment (>= 2) uniform u values and
/// concatenate, emitting shared join vertices once. The first point is
/// the first vertex; the last is the final segment's end vertex (the
/// first vertex again for closed curves).
std::vector<Vec2> sample(const Polyarc& pa, int points_per_segment);

} // namespace arcspline
