#include <arcspline/io.hpp>

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>

namespace arcspline {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad_point(std::size_t index, const std::string& rule) {
    throw ValidationError("arcspline: document: point " +
                          std::to_string(index) + ": " + rule);
}

double number_field(const json& obj, const char* key, std::size_t index) {
    const auto it = obj.find(key);
    if (it == obj.end())
        bad_point(index, std::string("missing \"") + key + "\"");
    if (!it->is_number())
        bad_point(index, std::string("\"") + key + "\" must be a number");
    return it->get<double>();
}

std::vector<DocumentPoint> read_points(const json& arr) {
    if (!arr.is_array())
        throw ValidationError("arcspline: document: \"points\" must be an array");
    std::vector<DocumentPoint> points;
    points.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& p = arr[i];
        if (!p.is_object())
            bad_point(i, "must be an object with x, y and optional theta");
        DocumentPoint dp;
        dp.x = number_field(p, "x", i);
        dp.y = number_field(p, "y", i);
        if (const auto it = p.find("theta"); it != p.end()) {
            if (!it->is_number())
                bad_point(i, "\"theta\" must be a number");
            dp.theta = it->get<double>();
            dp.theta_given = true;
        }
        points.push_back(dp);
    }
    return points;
}

} // namespace

PolyarcDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("arcspline: ") + e.what());
    }

    PolyarcDocument doc;
    if (root.is_array()) {
        doc.points = read_points(root);
        return doc;
    }
    if (!root.is_object())
        throw ValidationError(
            "arcspline: document: top level must be an object or an array "
            "of points");

    if (const auto it = root.find("closed"); it != root.end()) {
        if (!it->is_boolean())
            throw ValidationError("arcspline: document: \"closed\" must be a boolean");
        doc.closed = it->get<bool>();
    }
    if (const auto it = root.find("angle_unit"); it != root.end()) {
        const std::string unit = it->is_string() ? it->get<std::string>() : "";
        if (unit == "radians")
            doc.angle_unit = AngleUnit::Radians;
        else if (unit == "degrees")
            doc.angle_unit = AngleUnit::Degrees;
        else
            throw ValidationError(
                "arcspline: document: \"angle_unit\" must be \"radians\" or "
                "\"degrees\"");
        doc.angle_unit_given = true;
    }
    if (const auto it = root.find("units"); it != root.end()) {
        if (!it->is_string())
            throw ValidationError("arcspline: document: \"units\" must be a string");
        doc.units = it->get<std::string>();
    }
    const auto pts = root.find("points");
    if (pts == root.end())
        throw ValidationError("arcspline: document: missing \"points\" array");
    doc.points = read_points(*pts);
    return doc;
}

Polyarc to_polyarc(const PolyarcDocument& doc,
                   std::vector<std::string>* warnings) {
    if (doc.points.empty())
        throw ValidationError("arcspline: document: \"points\" must not be empty");
    const double scale = doc.angle_unit == AngleUnit::Degrees
                             ? std::numbers::pi / 180.0
                             : 1.0;
    Polyarc pa;
    pa.closed = doc.closed;
    pa.vertices.reserve(doc.points.size());
    for (const DocumentPoint& p : doc.points)
        pa.vertices.push_back({p.x, p.y});
    const std::size_t nseg =
        doc.closed ? doc.points.size() : doc.points.size() - 1;
    pa.thetas.reserve(nseg);
    for (std::size_t i = 0; i < nseg; ++i)
        pa.thetas.push_back(doc.points[i].theta * scale);
    if (!doc.closed) {
        const DocumentPoint& last = doc.points.back();
        if (last.theta_given && last.theta != 0.0 && warnings)
            warnings->push_back(
                "point " + std::to_string(doc.points.size() - 1) +
                ": trailing theta of an open curve has no segment; ignored");
    }
    validate(pa);
    return pa;
}

Polyarc parse_polyarc(const std::string& text,
                      std::vector<std::string>* warnings) {
    return to_polyarc(parse_document(text), warnings);
}

PolyarcDocument make_document(const Polyarc& pa, AngleUnit unit) {
    validate(pa);
    const double scale =
        unit == AngleUnit::Degrees ? 180.0 / std::numbers::pi : 1.0;
    PolyarcDocument doc;
    doc.closed = pa.closed;
    doc.angle_unit = unit;
    doc.points.reserve(pa.vertices.size());
    for (std::size_t i = 0; i < pa.vertices.size(); ++i) {
        DocumentPoint p;
        p.x = pa.vertices[i].x;
        p.y = pa.vertices[i].y;
        p.theta = i < pa.thetas.size() ? pa.thetas[i] * scale : 0.0;
        p.theta_given = true;
        doc.points.push_back(p);
    }
    return doc;
}

std::string emit_document(const PolyarcDocument& doc) {
    ordered_json root;
    root["closed"] = doc.closed;
    root["angle_unit"] =
        doc.angle_unit == AngleUnit::Degrees ? "degrees" : "radians";
    if (!doc.units.empty())
        root["units"] = doc.units;
    ordered_json pts = ordered_json::array();
    for (const DocumentPoint& p : doc.points) {
        ordered_json jp;
        jp["x"] = p.x;
        jp["y"] = p.y;
        jp["theta"] = p.theta;
        pts.push_back(std::move(jp));
    }
    root["points"] = std::move(pts);
    return root.dump(2) + "\n";
}

std::string emit_polyarc(const Polyarc& pa, AngleUnit unit) {
    return emit_document(make_document(pa, unit));
}

} // namespace arcspline
