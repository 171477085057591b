#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <arcspline/vec2.hpp>

#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace arcspline;
using oracles::rel_close;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("tilde rotates by a quarter turn") {
    CHECK(tilde(Vec2{1, 0}).x == 0.0);
    CHECK(tilde(Vec2{1, 0}).y == 1.0);
    CHECK(tilde(Vec2{0, 0}).x == 0.0);
    CHECK(tilde(Vec2{0, 0}).y == 0.0);
    CHECK(tilde(Vec2{3, -2}).x == 2.0);
    CHECK(tilde(Vec2{3, -2}).y == 3.0);
}

TEST_CASE("dot product") {
    CHECK(dot(Vec2{1, 0}, Vec2{0, 1}) == 0.0);
    CHECK(dot(Vec2{2, 3}, Vec2{2, 3}) == 13.0);
    CHECK(dot(Vec2{1, 2}, Vec2{3, 4}) == 11.0);
}

TEST_CASE("skew product is the signed parallelogram area") {
    CHECK(skew(Vec2{1, 0}, Vec2{0, 1}) == 1.0);
    CHECK(skew(Vec2{2, 0}, Vec2{1, 3}) == 6.0);
    oracles::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const Vec2 a = rng.chord(1e-3, 1e3);
        CHECK(skew(a, a) == 0.0);
        CHECK(skew(a, Vec2{-2.0 * a.x, -2.0 * a.y}) == 0.0);
    }
}

TEST_CASE("rotate matches the rotation matrix") {
    const Vec2 q = rotate(Vec2{1, 0}, kPi / 2);
    CHECK(std::abs(q.x) < 1e-15);
    CHECK(std::abs(q.y - 1.0) < 1e-15);

    const Vec2 h = rotate(Vec2{1, 0}, kPi);
    CHECK(std::abs(h.x + 1.0) < 1e-15);
    CHECK(std::abs(h.y) < 1e-15);

    const Vec2 d = rotate(Vec2{1, 1}, -kPi / 4);
    CHECK(std::abs(d.x - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(d.y) < 1e-15);

    // full rotation-matrix product as oracle
    oracles::Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const Vec2 a = rng.chord(1e-3, 1e3);
        const double al = rng.uniform(-4.0 * kPi, 4.0 * kPi);
        const Vec2 r = rotate(a, al);
        const double mx = std::cos(al) * a.x - std::sin(al) * a.y;
        const double my = std::sin(al) * a.x + std::cos(al) * a.y;
        CHECK(std::abs(r.x - mx) <= 1e-12 * norm(a));
        CHECK(std::abs(r.y - my) <= 1e-12 * norm(a));
    }
}

TEST_CASE("norm") {
    CHECK(norm(Vec2{3, 4}) == 5.0);
    CHECK(norm(Vec2{0, 0}) == 0.0);
    CHECK(rel_close(norm(Vec2{1, 1}), std::sqrt(2.0), 1e-15));
}

TEST_CASE("exact algebraic identities") {
    oracles::Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 a = rng.chord(1e-6, 1e6);
        const Vec2 b = rng.chord(1e-6, 1e6);
        // involution sign: applying tilde twice negates
        const Vec2 tt = tilde(tilde(a));
        CHECK(tt.x == -a.x);
        CHECK(tt.y == -a.y);
        // orthogonality and antisymmetry are exact in floating point
        CHECK(dot(tilde(a), a) == 0.0);
        CHECK(skew(a, b) == -skew(b, a));
        CHECK(skew(a, b) == dot(tilde(a), b));
    }
}

TEST_CASE("rotation is an isometry and composes additively") {
    oracles::Rng rng(14);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 a = rng.chord(1e-6, 1e6);
        const double al = rng.uniform(-4.0 * kPi, 4.0 * kPi);
        const double be = rng.uniform(-4.0 * kPi, 4.0 * kPi);
        CHECK(rel_close(norm(rotate(a, al)), norm(a), 1e-12));
        const Vec2 two = rotate(rotate(a, al), be);
        const Vec2 one = rotate(a, al + be);
        CHECK(norm(two - one) <= 1e-12 * norm(a));
        const Vec2 same = rotate(a, 0.0);
        CHECK(same.x == a.x);
        CHECK(same.y == a.y);
    }
}
