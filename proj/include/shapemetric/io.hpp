#pragma once

// Body ingestion from JSON, field dumps (CSV), SVG boundary frames and
// JSON serialization of reports and verdicts.

#include <iosfwd>
#include <string>

#include "shapemetric/body.hpp"
#include "shapemetric/field.hpp"
#include "shapemetric/shape.hpp"
#include "shapemetric/validity.hpp"

namespace shapemetric {

// Throws std::invalid_argument naming the offending field on schema
// violations and carrying the parser position on malformed JSON.
BodyDescriptor parse_body_json(const std::string& text);
BodyDescriptor load_body_file(const std::string& path);

// CSV: `theta,value,grad` on circle grids, tangential scalar derivative
// in the grad column; `polar,azimuth,weight,value,gradx,grady,gradz` on
// sphere grids.
void write_field_csv(const SupportField& f, std::ostream& os);

// Closed boundary curve (h cos - h' sin, h sin + h' cos) of a 2D field,
// recentered and scaled to unit intrinsic area when possible, drawn
// stroke-only in the fixed viewport [-2,2]^2.
void write_frame_svg(const SupportField& f, std::ostream& os);

std::string report_to_json(const ShapeDistanceReport& r);
std::string validity_to_json(const ValidityVerdict& v);
std::string terminal_to_json(const TerminalInterval& t);

}  // namespace shapemetric
