#include <arcspline/arc.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace arcspline {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this magnitude the closed-form expressions switch to their
// theta -> 0 limit forms.
constexpr double kThetaLimitEps = 1e-7;

// Below this magnitude (theta - sin theta) / (1 - cos theta) is evaluated
// by series; direct evaluation cancels catastrophically near the limit
// branch while the series is exact to double precision here.
constexpr double kThetaSeriesEps = 1e-2;

[[noreturn]] void fail(const char* fn, const char* what) {
    throw std::domain_error(std::string("arcspline: ") + fn + ": " + what);
}

void check_theta(double theta, const char* fn) {
    if (!(std::abs(theta) < kTwoPi))
        fail(fn, "|theta| must be less than 2*pi");
}

void check_theta_nonzero(double theta, const char* fn) {
    check_theta(theta, fn);
    if (theta == 0.0)
        fail(fn, "theta must be nonzero (no finite radius for a line)");
}

void check_u(double u, const char* fn) {
    if (!(u >= 0.0 && u <= 1.0))
        fail(fn, "u must lie in [0, 1]");
}

} // namespace

double radius(double c_len, double theta) {
    check_theta_nonzero(theta, "radius");
    if (!(c_len > 0.0))
        fail("radius", "chord length must be positive");
    return c_len / (2.0 * std::sin(0.5 * theta));
}

double theta_from_radius(double c_len, double r, bool major) {
    if (!(c_len > 0.0))
        fail("theta_from_radius", "chord length must be positive");
    if (!(std::abs(r) >= 0.5 * c_len))
        fail("theta_from_radius", "no circle exists: |r| < c/2");
    // |c / (2r)| <= 1 holds as doubles once the check above passes.
    const double minor = 2.0 * std::asin(c_len / (2.0 * r));
    if (!major)
        return minor;
    return std::copysign(kTwoPi - std::abs(minor), r);
}

Vec2 center_offset(Vec2 c, double theta) {
    check_theta_nonzero(theta, "center_offset");
    if (!(norm(c) > 0.0))
        fail("center_offset", "chord must be nonzero");
    const double s = std::sin(0.5 * theta);
    const double co = std::cos(0.5 * theta);
    return (-1.0 / (2.0 * s)) * (s * c + co * tilde(c));
}

Vec2 point_at(Vec2 c, double theta, double u) {
    check_theta(theta, "point_at");
    check_u(u, "point_at");
    if (std::abs(theta) < kThetaLimitEps) {
        // small-angle form u (c - (1-u) theta / 2 tilde(c)); exact u c at 0
        return u * (c - (0.5 * (1.0 - u) * theta) * tilde(c));
    }
    const double ratio = std::sin(0.5 * u * theta) / std::sin(0.5 * theta);
    const double rest = 0.5 * (1.0 - u) * theta;
    return ratio * (std::cos(rest) * c - std::sin(rest) * tilde(c));
}

double arc_length(double c_len, double theta, double u) {
    check_theta(theta, "arc_length");
    check_u(u, "arc_length");
    if (!(c_len >= 0.0))
        fail("arc_length", "chord length must be non-negative");
    if (std::abs(theta) < kThetaLimitEps)
        return u * c_len;
    return u * c_len * theta / (2.0 * std::sin(0.5 * theta));
}

double segment_area(double c_len, double theta) {
    check_theta(theta, "segment_area");
    if (!(c_len >= 0.0))
        fail("segment_area", "chord length must be non-negative");
    const double q = 0.25 * c_len * c_len;
    const double t2 = theta * theta;
    if (std::abs(theta) < kThetaLimitEps)
        return q * theta / 3.0;
    if (std::abs(theta) < kThetaSeriesEps)
        return q * (theta / 3.0) * (1.0 + t2 / 30.0 + t2 * t2 / 840.0);
    return q * (theta - std::sin(theta)) / (1.0 - std::cos(theta));
}

double bending_energy(double c_len, double theta, double ei) {
    check_theta(theta, "bending_energy");
    if (!(c_len > 0.0))
        fail("bending_energy", "chord length must be positive");
    if (!(ei > 0.0))
        fail("bending_energy", "bending rigidity must be positive");
    return ei * theta * std::sin(0.5 * theta) / c_len;
}

Vec2 start_tangent(Vec2 c, double theta) {
    check_theta(theta, "start_tangent");
    const double len = norm(c);
    if (!(len > 0.0))
        fail("start_tangent", "chord must be nonzero");
    const double s = std::sin(0.5 * theta);
    const double co = std::cos(0.5 * theta);
    return (co * c - s * tilde(c)) / len;
}

Vec2 end_tangent(Vec2 c, double theta) {
    check_theta(theta, "end_tangent");
    const double len = norm(c);
    if (!(len > 0.0))
        fail("end_tangent", "chord must be nonzero");
    const double s = std::sin(0.5 * theta);
    const double co = std::cos(0.5 * theta);
    return (co * c + s * tilde(c)) / len;
}

double theta_from_tangent(Vec2 t, Vec2 c) {
    if (!(norm(t) > 0.0))
        fail("theta_from_tangent", "tangent must be nonzero");
    if (!(norm(c) > 0.0))
        fail("theta_from_tangent", "chord must be nonzero");
    return 2.0 * std::atan2(skew(t, c), dot(t, c));
}

CenterParams to_center_params(const ArcSeg& arc) {
    const Vec2 c = arc.chord();
    const Vec2 r0 = center_offset(c, arc.theta); // validates theta and chord
    CenterParams cp;
    cp.center = arc.a - r0;
    cp.radius = std::abs(radius(norm(c), arc.theta));
    cp.theta0 = std::atan2(r0.y, r0.x);
    cp.theta = arc.theta;
    return cp;
}

Vec2 point_at(const CenterParams& cp, double v) {
    const double ang = cp.theta0 + v * cp.theta;
    return cp.center + cp.radius * Vec2{std::cos(ang), std::sin(ang)};
}

} // namespace arcspline
