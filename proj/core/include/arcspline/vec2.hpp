#pragma once
/**
 * @file vec2.hpp
 * @brief Planar vector algebra with the skew-orthogonal operator.
 *
 * A minimal double-precision 2D vector plus the four products the rest of
 * the library is built on: the standard scalar product, the skew-scalar
 * product (signed parallelogram area), the tilde operator (rotation by
 * +pi/2) and plane rotation expressed through it.
 *
 * All functions are pure; angles are radians throughout.
 */

#include <cmath>

namespace arcspline {

/// Planar vector / point with double components.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }

/// Skew-orthogonal complement: rotates a by +pi/2, (x, y) -> (-y, x).
/// Applying it twice negates the vector.
constexpr Vec2 tilde(Vec2 a) { return {-a.y, a.x}; }

/// Standard scalar product.
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Skew-scalar product dot(tilde(a), b): the signed area of the
/// parallelogram spanned by a and b. Antisymmetric.
constexpr double skew(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Rotate a by alpha radians: cos(alpha) a + sin(alpha) tilde(a).
inline Vec2 rotate(Vec2 a, double alpha) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    return c * a + s * tilde(a);
}

/// Euclidean length sqrt(dot(a, a)).
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

} // namespace arcspline
