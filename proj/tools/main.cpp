// arcspline command line tool: inspect polyarc documents, build arc
// splines over polygons, render one-parameter families and smooth them.

#include <arcspline/io.hpp>
#include <arcspline/optimize.hpp>
#include <arcspline/polyarc.hpp>
#include <arcspline/svg.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace arcspline;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

struct GlobalOpts {
    bool degrees = false;
    bool force_closed = false;
    std::string out_path;
};

double to_rad(double v, const GlobalOpts& g) {
    return g.degrees ? v * kPi / 180.0 : v;
}

double from_rad(double v, const GlobalOpts& g) {
    return g.degrees ? v * 180.0 / kPi : v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("arcspline: cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Polyarc load_polyarc(const std::string& path, const GlobalOpts& g) {
    PolyarcDocument doc = parse_document(read_file(path));
    if (g.force_closed)
        doc.closed = true;
    if (!doc.angle_unit_given && g.degrees)
        doc.angle_unit = AngleUnit::Degrees;
    std::vector<std::string> warnings;
    const Polyarc pa = to_polyarc(doc, &warnings);
    for (const std::string& w : warnings)
        std::cerr << "warning: " << w << "\n";
    return pa;
}

void write_output(const std::string& text, const GlobalOpts& g) {
    if (g.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out)
        throw ValidationError("arcspline: cannot write \"" + g.out_path +
                              "\"");
    out << text;
}

AngleUnit out_unit(const GlobalOpts& g) {
    return g.degrees ? AngleUnit::Degrees : AngleUnit::Radians;
}

// reduce a user angle into [-2pi, 2pi] by +-4pi complements
double reduce_angle(double theta) { return std::remainder(theta, 2.0 * kTwoPi); }

int cmd_info(const std::string& path, const GlobalOpts& g) {
    const Polyarc pa = load_polyarc(path, g);
    std::printf("vertices:     %zu (%s)\n", pa.vertices.size(),
                pa.closed ? "closed" : "open");
    std::printf("segments:     %zu\n", pa.segment_count());
    std::printf("total_length: %.12g\n", total_length(pa));
    std::printf("total_area:   %.12g\n", total_area(pa));
    std::printf("sum_abs_area: %.12g\n", total_abs_area(pa));
    std::printf("total_energy: %.12g (ei = 1)\n", total_energy(pa, 1.0));
    if (pa.segment_count() == 0)
        return 0;
    std::printf("%4s %14s %14s %14s %14s %14s %14s\n", "i", "c",
                g.degrees ? "theta[deg]" : "theta[rad]", "R", "L_i", "A_i",
                "U_i");
    for (std::size_t i = 0; i < pa.segment_count(); ++i) {
        const double c = norm(pa.chord(i));
        const double th = pa.thetas[i];
        const double r = th != 0.0 && c > 0.0
                             ? radius(c, th)
                             : std::numeric_limits<double>::infinity();
        const double li = arc_length(c, th, 1.0);
        const double ai = segment_area(c, th);
        const double ui =
            th != 0.0 ? bending_energy(c, th, 1.0) : 0.0;
        std::printf("%4zu %14.6g %14.6g %14.6g %14.6g %14.6g %14.6g\n", i, c,
                    from_rad(th, g), r, li, ai, ui);
    }
    return 0;
}

int cmd_spline(const std::string& path, double theta0_in,
               const GlobalOpts& g) {
    const Polyarc base = load_polyarc(path, g);
    const auto family = SplineFamily::from_polygon(base.vertices, base.closed);
    const double theta0 = reduce_angle(to_rad(theta0_in, g));
    if (!(std::abs(theta0) < kTwoPi))
        throw std::domain_error(
            "arcspline: spline: theta0 reduces to the degenerate +-2*pi");
    const Polyarc spline = propagate(family, theta0);
    const std::string doc = emit_polyarc(spline, out_unit(g));
    write_output(doc, g);
    // keep stdout parseable when the document goes there
    std::ostream& rep = g.out_path.empty() ? std::cerr : std::cout;
    char line[64];
    std::snprintf(line, sizeof line, "g1_defect: %.6g\n", g1_defect(spline));
    rep << line;
    if (spline.closed) {
        std::snprintf(line, sizeof line, "g1_closing_defect: %.6g\n",
                      g1_closing_defect(spline));
        rep << line;
    }
    return 0;
}

int cmd_family(const std::string& path, double from, double to, double step,
               const GlobalOpts& g) {
    if (!(step > 0.0))
        throw std::invalid_argument("arcspline: family: step must be > 0");
    if (!(from <= to))
        throw std::invalid_argument("arcspline: family: need from <= to");
    const Polyarc base = load_polyarc(path, g);
    const auto family = SplineFamily::from_polygon(base.vertices, base.closed);
    std::vector<Polyarc> curves;
    const double slack = step * 1e-9;
    for (double v = from; v <= to + slack; v += step) {
        const double theta0 = reduce_angle(to_rad(v, g));
        if (!(std::abs(theta0) < kTwoPi)) {
            std::cerr << "warning: skipping degenerate theta0 = " << v << "\n";
            continue;
        }
        try {
            curves.push_back(propagate(family, theta0));
        } catch (const std::domain_error&) {
            std::cerr << "warning: skipping degenerate theta0 = " << v << "\n";
        }
    }
    if (curves.empty())
        throw std::domain_error("arcspline: family: no valid members in range");
    write_output(render_svg(curves), g);
    return 0;
}

int cmd_smooth(const std::string& path, const std::string& objective,
               double lo, double up, double tol, double ei,
               const std::string& svg_path, const GlobalOpts& g) {
    const Polyarc base = load_polyarc(path, g);
    const auto family = SplineFamily::from_polygon(base.vertices, base.closed);
    Objective obj = Objective::Length;
    if (objective == "area")
        obj = Objective::Area;
    else if (objective == "energy")
        obj = Objective::Energy;
    const GssConfig cfg{to_rad(lo, g), to_rad(up, g), to_rad(tol, g), 200};
    const SmoothResult res = smooth(family, obj, cfg, ei);
    std::printf("%-10s %14s %14s %14s %14s\n", "objective",
                g.degrees ? "theta0[deg]" : "theta0[rad]", "L", "A", "U");
    std::printf("%-10s %14.6g %14.6g %14.6g %14.6g\n", objective.c_str(),
                from_rad(res.theta0, g), res.length, res.area, res.energy);
    std::printf("gss: %d reductions, %d evaluations\n", res.reductions,
                res.evaluations);
    if (!g.out_path.empty())
        write_output(emit_polyarc(res.spline, out_unit(g)), g);
    if (!svg_path.empty()) {
        std::ofstream out(svg_path, std::ios::binary);
        if (!out)
            throw ValidationError("arcspline: cannot write \"" + svg_path +
                                  "\"");
        out << render_svg(res.spline);
    }
    return 0;
}

int cmd_sample(const std::string& path, int per_segment, const GlobalOpts& g) {
    const Polyarc pa = load_polyarc(path, g);
    std::string out;
    char line[80];
    for (const Vec2& p : sample(pa, per_segment)) {
        std::snprintf(line, sizeof line, "%.17g %.17g\n", p.x, p.y);
        out += line;
    }
    write_output(out, g);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar polyarcs and G1 arc splines"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_flag("--degrees", g.degrees,
                 "angles in arguments and files are degrees");
    app.add_flag("--closed", g.force_closed,
                 "treat the input curve as closed");
    app.add_option("-o,--output", g.out_path, "write output to this file");

    std::string file;
    double theta0 = 0.0, from = 0.0, to = 0.0, step = 0.0;
    double lo = -344.0, up = 344.0, tol = 0.6, ei = 1.0;
    std::string objective, svg_path;
    int per_segment = 16;

    auto* info = app.add_subcommand(
        "info", "print lengths, areas and energies of a polyarc");
    info->add_option("file", file)->required();

    auto* spline = app.add_subcommand(
        "spline", "build the arc spline over the vertices of a document");
    spline->add_option("file", file)->required();
    spline->add_option("--theta0", theta0, "first arc angle")->required();

    auto* family = app.add_subcommand(
        "family", "render a range of family members into one SVG");
    family->add_option("file", file)->required();
    family->add_option("--from", from)->required();
    family->add_option("--to", to)->required();
    family->add_option("--step", step)->required();

    auto* smooth_cmd = app.add_subcommand(
        "smooth", "pick theta0 by minimizing a curve property");
    smooth_cmd->add_option("file", file)->required();
    smooth_cmd->add_option("--objective", objective)
        ->required()
        ->check(CLI::IsMember({"length", "area", "energy"}));
    smooth_cmd->add_option("--lo", lo, "bracket start (default -344 deg)");
    smooth_cmd->add_option("--up", up, "bracket end (default 344 deg)");
    smooth_cmd->add_option("--tol", tol, "bracket tolerance (default 0.6 deg)");
    smooth_cmd->add_option("--ei", ei, "bending rigidity");
    smooth_cmd->add_option("--svg", svg_path, "also render the result");

    auto* sample_cmd =
        app.add_subcommand("sample", "print points along the curve");
    sample_cmd->add_option("file", file)->required();
    sample_cmd->add_option("-n", per_segment, "points per segment");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (info->parsed())
            return cmd_info(file, g);
        if (spline->parsed())
            return cmd_spline(file, theta0, g);
        if (family->parsed())
            return cmd_family(file, from, to, step, g);
        if (smooth_cmd->parsed()) {
            // bracket defaults are degree-valued; convert when radians
            if (!g.degrees) {
                if (smooth_cmd->count("--lo") == 0)
                    lo = -344.0 * kPi / 180.0;
                if (smooth_cmd->count("--up") == 0)
                    up = 344.0 * kPi / 180.0;
                if (smooth_cmd->count("--tol") == 0)
                    tol = 0.6 * kPi / 180.0;
            }
            return cmd_smooth(file, objective, lo, up, tol, ei, svg_path, g);
        }
        if (sample_cmd->parsed())
            return cmd_sample(file, per_segment, g);
    } catch (const IterationLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
