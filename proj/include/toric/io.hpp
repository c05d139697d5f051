#pragma once

#include <istream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "toric/fan.hpp"
#include "toric/rational_matrix.hpp"

namespace toric {

struct FanDocument {
  std::vector<LatticeVector> rays;
  std::optional<std::string> name;

  friend bool operator==(const FanDocument&, const FanDocument&) = default;
};

struct PolygonDocument {
  std::vector<LatticeVector> vertices;
  std::optional<std::string> name;

  friend bool operator==(const PolygonDocument&, const PolygonDocument&) = default;
};

using InputDocument = std::variant<FanDocument, PolygonDocument>;

/// JSON document with exactly one of "rays" / "vertices", each a list of
/// [int, int]. Non-integer numbers are rejected.
InputDocument parse_json_document(const std::string& text);

/// Whitespace-separated integers, read in pairs. An optional leading word
/// "rays" or "vertices" selects the kind; rays is the default. '#' starts a
/// comment that runs to the end of the line.
InputDocument parse_plain_document(const std::string& text);

/// Reads `path` ("-" is stdin) and dispatches on `plain`.
InputDocument parse_input(const std::string& path, bool plain, std::istream& stdin_stream);

/// Validated fan for either kind of document.
Fan to_fan(const InputDocument& doc);

/// JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json integer_json(const Integer& z);
nlohmann::json to_json(const FanDocument& doc);
nlohmann::json to_json(const LatticeVector& v);
nlohmann::json to_json(const RationalMatrix& m);

enum class OutputFormat { Table, Json, Latex };

/// Right-aligned columns, one row per line.
std::string render_table(const RationalMatrix& m);
/// \begin{pmatrix} ... \end{pmatrix} with \frac for non-integers.
std::string render_latex(const RationalMatrix& m);

}  // namespace toric
