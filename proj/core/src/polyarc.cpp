#include <arcspline/polyarc.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace arcspline {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void invalid(std::size_t index, const std::string& rule) {
    throw ValidationError("arcspline: polyarc: vertex " +
                          std::to_string(index) + ": " + rule);
}

bool same_point(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

} // namespace

void validate(const Polyarc& pa) {
    if (pa.vertices.empty())
        throw ValidationError("arcspline: polyarc: vertex list is empty");
    const std::size_t want =
        pa.closed ? pa.vertices.size() : pa.vertices.size() - 1;
    if (pa.thetas.size() != want)
        throw ValidationError(
            "arcspline: polyarc: expected " + std::to_string(want) +
            " thetas for " + std::to_string(pa.vertices.size()) +
            (pa.closed ? " vertices (closed), got " : " vertices (open), got ") +
            std::to_string(pa.thetas.size()));
    for (std::size_t i = 0; i < pa.vertices.size(); ++i) {
        if (!std::isfinite(pa.vertices[i].x) || !std::isfinite(pa.vertices[i].y))
            invalid(i, "coordinates must be finite");
    }
    for (std::size_t i = 0; i < pa.thetas.size(); ++i) {
        const double th = pa.thetas[i];
        if (!std::isfinite(th))
            invalid(i, "theta must be finite");
        if (!(std::abs(th) < kTwoPi))
            invalid(i, "theta outside (-2*pi, 2*pi)");
        if (th != 0.0 && same_point(pa.vertices[i], pa.vertex_after(i)))
            invalid(i, "coincident segment endpoints with nonzero theta");
    }
}

double total_length(const Polyarc& pa) {
    validate(pa);
    double sum = 0.0;
    for (std::size_t i = 0; i < pa.segment_count(); ++i)
        sum += arc_length(norm(pa.chord(i)), pa.thetas[i], 1.0);
    return sum;
}

double total_area(const Polyarc& pa) {
    validate(pa);
    // Shoelace over the vertex polygon; open curves wrap through the
    // implicit closing chord back to the first vertex.
    double shoelace = 0.0;
    const std::size_t m = pa.vertices.size();
    for (std::size_t i = 0; i < m; ++i)
        shoelace += skew(pa.vertices[i], pa.vertices[(i + 1) % m]);
    double segs = 0.0;
    for (std::size_t i = 0; i < pa.segment_count(); ++i)
        segs += segment_area(norm(pa.chord(i)), pa.thetas[i]);
    return 0.5 * shoelace + segs;
}

double total_abs_area(const Polyarc& pa) {
    validate(pa);
    double sum = 0.0;
    for (std::size_t i = 0; i < pa.segment_count(); ++i)
        sum += std::abs(segment_area(norm(pa.chord(i)), pa.thetas[i]));
    return sum;
}

double total_energy(const Polyarc& pa, double ei) {
    validate(pa);
    double sum = 0.0;
    for (std::size_t i = 0; i < pa.segment_count(); ++i) {
        if (pa.thetas[i] == 0.0)
            continue; // straight (possibly zero-length) segment
        sum += bending_energy(norm(pa.chord(i)), pa.thetas[i], ei);
    }
    return sum;
}

double exterior_angle(Vec2 c_prev, Vec2 c_next) {
    if (!(norm(c_prev) > 0.0) || !(norm(c_next) > 0.0))
        throw std::domain_error(
            "arcspline: exterior_angle: edge vectors must be nonzero");
    const double g = std::atan2(skew(c_prev, c_next), dot(c_prev, c_next));
    // range (-pi, pi]: an exact reversal lands on +pi
    return g == -std::numbers::pi ? std::numbers::pi : g;
}

SplineFamily SplineFamily::from_polygon(std::vector<Vec2> vertices,
                                        bool closed) {
    if (vertices.size() < 2)
        throw ValidationError(
            "arcspline: spline family: need at least 2 vertices");
    const std::size_t nseg = closed ? vertices.size() : vertices.size() - 1;
    SplineFamily fam;
    fam.closed = closed;
    fam.chords.reserve(nseg);
    for (std::size_t i = 0; i < nseg; ++i) {
        const Vec2 c = vertices[(i + 1) % vertices.size()] - vertices[i];
        if (!(norm(c) > 0.0) || !std::isfinite(c.x) || !std::isfinite(c.y))
            invalid(i, "repeated or non-finite consecutive vertices");
        fam.chords.push_back(c);
    }
    fam.gammas.reserve(nseg - 1);
    for (std::size_t i = 1; i < nseg; ++i)
        fam.gammas.push_back(exterior_angle(fam.chords[i - 1], fam.chords[i]));
    fam.polygon = std::move(vertices);
    return fam;
}

Polyarc propagate(const SplineFamily& family, double theta0) {
    if (!(std::abs(theta0) < kTwoPi))
        throw std::domain_error(
            "arcspline: propagate: theta0 outside (-2*pi, 2*pi)");
    Polyarc pa;
    pa.vertices = family.polygon;
    pa.closed = family.closed;
    pa.thetas.reserve(family.segment_count());
    pa.thetas.push_back(theta0);
    for (double gamma : family.gammas) {
        double th = -pa.thetas.back() + 2.0 * gamma;
        // raw value lies in (-4pi, 4pi); one +-4pi reduction suffices
        if (th >= kTwoPi)
            th -= 2.0 * kTwoPi;
        else if (th <= -kTwoPi)
            th += 2.0 * kTwoPi;
        if (!(std::abs(th) < kTwoPi))
            throw std::domain_error(
                "arcspline: propagate: angle lands exactly on +-2*pi "
                "(degenerate full-circle segment)");
        pa.thetas.push_back(th);
    }
    return pa;
}

namespace {

double join_defect(const Polyarc& pa, std::size_t i, std::size_t j) {
    const Vec2 te = end_tangent(pa.chord(i), pa.thetas[i]);
    const Vec2 ts = start_tangent(pa.chord(j), pa.thetas[j]);
    return norm(te - ts);
}

} // namespace

double g1_defect(const Polyarc& pa) {
    validate(pa);
    const std::size_t n = pa.segment_count();
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        worst = std::max(worst, join_defect(pa, i, i + 1));
    return worst;
}

double g1_closing_defect(const Polyarc& pa) {
    validate(pa);
    const std::size_t n = pa.segment_count();
    if (!pa.closed || n < 2)
        return 0.0;
    return join_defect(pa, n - 1, 0);
}

std::vector<Vec2> sample(const Polyarc& pa, int points_per_segment) {
    validate(pa);
    if (points_per_segment < 2)
        throw std::domain_error(
            "arcspline: sample: points_per_segment must be >= 2");
    std::vector<Vec2> pts;
    pts.reserve(1 + pa.segment_count() * (points_per_segment - 1));
    pts.push_back(pa.vertices.front());
    for (std::size_t i = 0; i < pa.segment_count(); ++i) {
        const Vec2 p = pa.vertices[i];
        const Vec2 c = pa.chord(i);
        for (int k = 1; k < points_per_segment - 1; ++k) {
            const double u = double(k) / (points_per_segment - 1);
            pts.push_back(p + point_at(c, pa.thetas[i], u));
        }
        pts.push_back(pa.vertex_after(i));
    }
    return pts;
}

} // namespace arcspline
