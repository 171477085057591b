#pragma once
/**
 * @file arc.hpp
 * @brief Single circular arcs in endpoint parameterization.
 *
 * An arc is described by its start point A, end point B and the signed
 * angular range theta in (-2pi, 2pi). Positive theta sweeps the radius
 * vector counterclockwise; theta and the signed radius R always share
 * their sign, coupled by R sin(theta/2) = c/2 over the chord length c.
 * theta = 0 degenerates to the straight segment from A to B.
 *
 * The chord-relative operations below take the chord vector c = B - A
 * (or just its length) instead of absolute endpoints; results are
 * relative to the start point where applicable.
 *
 * Functions throw std::domain_error on arguments outside their stated
 * domain (theta = 0 where a finite radius is required, |theta| >= 2pi,
 * non-positive chord where a circle must exist, u outside [0, 1]).
 */

#include <arcspline/vec2.hpp>

namespace arcspline {

/// One endpoint-parameterized arc segment.
struct ArcSeg {
    Vec2 a;               ///< start point
    Vec2 b;               ///< end point
    double theta = 0.0;   ///< signed angular range, in (-2pi, 2pi)

    Vec2 chord() const { return b - a; }
    double chord_length() const { return norm(b - a); }
};

/// Center-based parameter set of the same arc.
///
/// Points on the arc are center + radius * (cos(theta0 + v theta),
/// sin(theta0 + v theta)) for v in [0, 1]; v = 0 reproduces the start
/// point, v = 1 the end point.
struct CenterParams {
    Vec2 center;
    double radius = 0.0;  ///< always positive
    double theta0 = 0.0;  ///< angle of the center->start vector from +x axis
    double theta = 0.0;   ///< angular range, as in ArcSeg
};

/// Signed radius R = c / (2 sin(theta/2)); sign(R) = sign(theta),
/// |R| >= c/2.
double radius(double c_len, double theta);

/// Inverse of radius(): the angular range for a given signed radius.
/// The minor branch returns theta in (-pi, pi]; the major branch the
/// complementary arc sign(r) * (2pi - |theta_minor|). Requires
/// |r| >= c_len / 2.
double theta_from_radius(double c_len, double r, bool major);

/// Radius vector r0 from the arc's center to its start point,
/// -(sin(theta/2) c + cos(theta/2) tilde(c)) / (2 sin(theta/2)).
/// The center lies at A - r0.
Vec2 center_offset(Vec2 c, double theta);

/// Point on the arc at normalized parameter u in [0, 1], relative to the
/// start point. r(0) = (0,0), r(1) = c; theta = 0 yields u * c.
Vec2 point_at(Vec2 c, double theta, double u);

/// Arc length from the start point to parameter u:
/// u c theta / (2 sin(theta/2)), or u c for theta = 0. The
/// parameterization is arc-length uniform in u. Never negative.
double arc_length(double c_len, double theta, double u);

/// Signed area between the arc and its chord,
/// (c^2/4) (theta - sin theta) / (1 - cos theta); sign follows theta,
/// zero at theta = 0.
double segment_area(double c_len, double theta);

/// Elastic strain energy of the arc bent from a straight beam of
/// rigidity ei: ei * theta * sin(theta/2) / c. Even in theta, zero only
/// at theta = 0.
double bending_energy(double c_len, double theta, double ei = 1.0);

/// Unit tangent at the start point: the unit chord rotated by -theta/2.
Vec2 start_tangent(Vec2 c, double theta);

/// Unit tangent at the end point: the unit chord rotated by +theta/2.
Vec2 end_tangent(Vec2 c, double theta);

/// Angular range from a start tangent and the chord:
/// 2 atan2(skew(t, c), dot(t, c)). Scale-invariant in both arguments;
/// inverse of start_tangent.
double theta_from_tangent(Vec2 t, Vec2 c);

/// Convert to the center-based parameter set. Requires theta != 0
/// (a line has no finite center).
CenterParams to_center_params(const ArcSeg& arc);

/// Evaluate the center-based form at v in [0, 1] (absolute point).
Vec2 point_at(const CenterParams& cp, double v);

} // namespace arcspline
