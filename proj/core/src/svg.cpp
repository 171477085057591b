#include <arcspline/svg.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace arcspline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kLineEps = 1e-6;        // below this an arc is drawn as a line
constexpr double kSplitEps = kTwoPi - 0.01; // above this an arc is split in two

void append_num(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    out += buf;
}

// Center of the circular SVG arc described by endpoints, radius and the
// two flags (endpoint-to-center conversion, circle case).
Vec2 svg_arc_center(Vec2 p1, Vec2 p2, double r, bool large_arc, bool sweep) {
    const Vec2 d = 0.5 * (p1 - p2);
    const double l2 = dot(d, d);
    const double k2 = (r * r - l2) / l2;
    const double k = std::sqrt(std::max(k2, 0.0));
    const double sign = (large_arc != sweep) ? k : -k;
    return 0.5 * (p1 + p2) + sign * Vec2{d.y, -d.x};
}

double wrap_positive(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

// Whether the SVG arc (p1, p2, r, flags) passes through q.
bool svg_arc_contains(Vec2 p1, Vec2 p2, double r, bool large_arc, bool sweep,
                      Vec2 q) {
    const Vec2 c = svg_arc_center(p1, p2, r, large_arc, sweep);
    if (std::abs(norm(q - c) - r) > 1e-6 * r)
        return false;
    const double a1 = std::atan2(p1.y - c.y, p1.x - c.x);
    const double a2 = std::atan2(p2.y - c.y, p2.x - c.x);
    const double aq = std::atan2(q.y - c.y, q.x - c.x);
    const double span = sweep ? wrap_positive(a2 - a1) : wrap_positive(a1 - a2);
    const double reach = sweep ? wrap_positive(aq - a1) : wrap_positive(a1 - aq);
    return reach <= span + 1e-9;
}

// One A command from p1 to p2 with angular range theta; the sweep flag is
// picked by testing which candidate arc passes through the true midpoint.
void append_arc_command(std::string& out, Vec2 p1, Vec2 p2, double theta) {
    const Vec2 c = p2 - p1;
    const double r = std::abs(radius(norm(c), theta));
    const bool large_arc = std::abs(theta) > kPi;
    const Vec2 mid = p1 + point_at(c, theta, 0.5);
    const bool sweep = svg_arc_contains(p1, p2, r, large_arc, true, mid)
                           ? true
                           : false;
    out += "A ";
    append_num(out, r);
    out += ' ';
    append_num(out, r);
    out += " 0 ";
    out += large_arc ? '1' : '0';
    out += ' ';
    out += sweep ? '1' : '0';
    out += ' ';
    append_num(out, p2.x);
    out += ' ';
    append_num(out, p2.y);
}

void append_segment(std::string& out, Vec2 p1, Vec2 p2, double theta) {
    if (std::abs(theta) < kLineEps) {
        out += "L ";
        append_num(out, p2.x);
        out += ' ';
        append_num(out, p2.y);
        return;
    }
    if (std::abs(theta) > kSplitEps) {
        const Vec2 mid = p1 + point_at(p2 - p1, theta, 0.5);
        append_arc_command(out, p1, mid, 0.5 * theta);
        out += ' ';
        append_arc_command(out, mid, p2, 0.5 * theta);
        return;
    }
    append_arc_command(out, p1, p2, theta);
}

std::string path_data(const Polyarc& pa) {
    std::string d = "M ";
    append_num(d, pa.vertices.front().x);
    d += ' ';
    append_num(d, pa.vertices.front().y);
    for (std::size_t i = 0; i < pa.segment_count(); ++i) {
        d += ' ';
        append_segment(d, pa.vertex_at(i), pa.vertex_after(i), pa.thetas[i]);
    }
    if (pa.closed)
        d += " Z";
    return d;
}

struct Bounds {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
};

Bounds bounds_of(const std::vector<Polyarc>& curves, int samples) {
    Bounds b;
    bool first = true;
    for (const Polyarc& pa : curves) {
        for (const Vec2& p : sample(pa, samples)) {
            if (first) {
                b = {p.x, p.x, p.y, p.y};
                first = false;
            } else {
                b.xmin = std::min(b.xmin, p.x);
                b.xmax = std::max(b.xmax, p.x);
                b.ymin = std::min(b.ymin, p.y);
                b.ymax = std::max(b.ymax, p.y);
            }
        }
    }
    return b;
}

} // namespace

std::string render_svg(const std::vector<Polyarc>& curves,
                       const RenderOptions& opts) {
    if (curves.empty())
        throw std::domain_error("arcspline: render_svg: no curves");
    for (const Polyarc& pa : curves)
        validate(pa);
    const int samples = std::max(opts.samples_per_segment, 2);
    Bounds b = bounds_of(curves, samples);
    const double side =
        std::max({b.xmax - b.xmin, b.ymax - b.ymin, 1e-9});
    const double pad = opts.padding >= 0.0 ? opts.padding : 0.05 * side;
    b.xmin -= pad;
    b.xmax += pad;
    b.ymin -= pad;
    b.ymax += pad;
    const double stroke =
        opts.stroke_width > 0.0 ? opts.stroke_width : 0.0075 * side;

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    append_num(out, b.xmin);
    out += ' ';
    append_num(out, b.ymin);
    out += ' ';
    append_num(out, b.xmax - b.xmin);
    out += ' ';
    append_num(out, b.ymax - b.ymin);
    out += "\">\n";
    // flip into mathematical y-up orientation
    out += "  <g transform=\"translate(0 ";
    append_num(out, b.ymin + b.ymax);
    out += ") scale(1 -1)\" fill=\"none\" stroke=\"black\" stroke-width=\"";
    append_num(out, stroke);
    out += "\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
    for (const Polyarc& pa : curves) {
        out += "    <path d=\"";
        out += path_data(pa);
        out += "\"/>\n";
    }
    out += "  </g>\n</svg>\n";
    return out;
}

std::string render_svg(const Polyarc& pa, const RenderOptions& opts) {
    return render_svg(std::vector<Polyarc>{pa}, opts);
}

} // namespace arcspline
