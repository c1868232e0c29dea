#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kummerlab/weierstrass.hpp"

namespace kummerlab {

// Bad user input (unreadable file, schema violation, singular curve).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CurveRecord {
  std::string id;
  std::string source;  // where the equation comes from, free text
  NumberRing ring;
  WeierstrassModel model;
  nlohmann::json expected;  // optional expected facts (null when absent)
};

// {"field": {"kind": "quadratic", "m": -3}, "curve": {"a2": [1, 1], ...}}
// Rational ring: bare integers. Quadratic: [x, y] = x + y t. Tower
// ({"kind": "tower", "a": 2}): [[x0, y0], [x1, y1], [x2, y2]] over Z[w].
// Integers may also be decimal strings. Missing coefficients are 0.
CurveRecord parse_curve_json(const nlohmann::json& doc, const std::string& fallback_id = "curve");
CurveRecord parse_curve_file(const std::string& path);

NumberRing parse_field(const nlohmann::json& field);
Element parse_element(const NumberRing& R, const nlohmann::json& v, const std::string& what);
nlohmann::json element_to_json(const Element& x);
nlohmann::json field_to_json(const NumberRing& R);

}  // namespace kummerlab
