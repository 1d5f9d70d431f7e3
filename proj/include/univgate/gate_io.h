#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "univgate/engine.h"
#include "univgate/gate.h"
#include "univgate/rational.h"
#include "univgate/su2.h"

namespace univgate {

inline constexpr const char* kReportSchemaVersion = "1";

/// A parsed gate-set file:
///   {"group": "SU"|"SO", "dim": d,
///    "gates": [ [[[re, im], ...], ...] | {"phi": "2/3 pi", "axis": [x, y, z]} ]}
/// SO entries may be plain numbers. Axis-angle gates need SU with d = 2 or SO
/// with d = 3.
struct GateSetDocument {
  Group group = Group::kSU;
  int dim = 2;
  std::vector<GateMatrix> gates;
  /// Axis-angle form when the gate was given that way.
  std::vector<std::optional<AxisAngleGate>> axis_angle;
};

/// "p/q pi", "pi", "-pi/4", "p pi" or a plain number (radians).
/// exact is set for the π-multiple forms. Throws kParse.
struct ParsedAngle {
  double radians = 0.0;
  std::optional<Rational> exact;  ///< in units of π
};
ParsedAngle parse_angle(const std::string& text);

/// Throws Error(kParse) with "source:line:col: message" for syntax and shape
/// problems, and the validation errors of validate_gate otherwise (also
/// prefixed with the gate's position).
GateSetDocument parse_gate_set(const std::string& text,
                               const std::string& source = "<input>",
                               const Tolerances& tol = {});
GateSetDocument load_gate_set(const std::string& path, const Tolerances& tol = {});

/// 1-based line and column of a byte offset.
std::pair<int, int> line_column(const std::string& text, std::size_t offset);

/// Byte offset of the value at a JSON pointer such as "/gates/1/0", or
/// nullopt if the text does not contain it.
std::optional<std::size_t> locate_pointer(const std::string& text,
                                          const std::string& pointer);

nlohmann::json verdict_to_json(const UniversalityVerdict& v);
/// Inverse of verdict_to_json (closed sets are not serialized).
/// Throws kParse.
UniversalityVerdict verdict_from_json(const nlohmann::json& j);

/// {"schema_version": "1", "kind": kind, ...body}.
nlohmann::json make_report(const std::string& kind, nlohmann::json body);

/// Parses and validates a report emitted by make_report. Throws kParse on a
/// schema mismatch or missing fields.
nlohmann::json parse_report(const std::string& text);

}  // namespace univgate
