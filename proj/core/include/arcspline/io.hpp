#pragma once
/**
 * @file io.hpp
 * @brief JSON polyarc documents.
 *
 * The on-disk format is a sequence of (x, y, theta) triples:
 *
 *     {
 *       "closed": false,
 *       "angle_unit": "radians",
 *       "points": [
 *         {"x": 0.0, "y": 0.0, "theta": 1.5707963267948966},
 *         {"x": 1.0, "y": 0.0, "theta": 0.0}
 *       ]
 *     }
 *
 * A bare top-level array of point objects is also accepted and treated
 * as an open curve with radian angles. theta defaults to 0 when absent
 * (a polygonal curve is a polyarc with all thetas zero); point i's theta
 * belongs to the segment leaving point i, so the last theta of an open
 * document has no segment and is ignored (with a warning if nonzero).
 * An optional "units" string is carried as metadata.
 */

#include <arcspline/polyarc.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace arcspline {

/// Unit of the theta values in a document.
enum class AngleUnit { Radians, Degrees };

/// The input was not well-formed JSON; the message carries the position.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DocumentPoint {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;      ///< in the document's angle unit
    bool theta_given = false;
};

/// Parsed document, before validation and unit conversion.
struct PolyarcDocument {
    std::vector<DocumentPoint> points;
    bool closed = false;
    AngleUnit angle_unit = AngleUnit::Radians;
    bool angle_unit_given = false; ///< document declared its unit itself
    std::string units; ///< optional length-unit metadata, empty if absent
};

/// Parse JSON text into a document. Throws ParseError on malformed JSON
/// and ValidationError on wrong shapes/types (naming the point index).
PolyarcDocument parse_document(const std::string& text);

/// Convert a document into a validated Polyarc (angles in radians).
/// Non-fatal findings (a nonzero trailing theta on an open curve) are
/// appended to *warnings when given.
Polyarc to_polyarc(const PolyarcDocument& doc,
                   std::vector<std::string>* warnings = nullptr);

/// parse_document followed by to_polyarc.
Polyarc parse_polyarc(const std::string& text,
                      std::vector<std::string>* warnings = nullptr);

/// Build a document from a polyarc, converting thetas into the requested
/// unit. Open curves get a trailing theta of 0 so every point carries the
/// full triple.
PolyarcDocument make_document(const Polyarc& pa,
                              AngleUnit unit = AngleUnit::Radians);

/// Serialize a document as JSON text (stable key order, round-trip-exact
/// numbers, trailing newline).
std::string emit_document(const PolyarcDocument& doc);

/// make_document followed by emit_document. parse_polyarc(emit_polyarc(x))
/// reproduces x exactly in radians mode and within rounding in degrees
/// mode.
std::string emit_polyarc(const Polyarc& pa,
                         AngleUnit unit = AngleUnit::Radians);

} // namespace arcspline
