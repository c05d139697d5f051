#include "toric/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

using nlohmann::json;

bool is_integer_literal(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

Integer json_integer(const json& value, const std::string& where) {
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw Error(ErrorCode::ParseError,
                  where + ": integer outside the 64-bit range; write it as a string");
    }
    return Integer(static_cast<long>(u));
  }
  if (value.is_number_integer()) return Integer(static_cast<long>(value.get<std::int64_t>()));
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (is_integer_literal(s)) return Integer(s);
  }
  throw Error(ErrorCode::ParseError, where + ": expected an integer, got " + value.dump());
}

std::vector<LatticeVector> json_pairs(const json& list, const std::string& key) {
  if (!list.is_array()) {
    throw Error(ErrorCode::ParseError, "\"" + key + "\" must be a list of [int, int] pairs");
  }
  std::vector<LatticeVector> out;
  out.reserve(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = key + "[" + std::to_string(k) + "]";
    const json& pair = list[k];
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::ParseError, where + ": expected [int, int], got " + pair.dump());
    }
    out.emplace_back(json_integer(pair[0], where), json_integer(pair[1], where));
  }
  return out;
}

}  // namespace

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

InputDocument parse_json_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top-level value must be an object");
  const bool has_rays = doc.contains("rays");
  const bool has_vertices = doc.contains("vertices");
  if (has_rays && has_vertices) {
    throw Error(ErrorCode::AmbiguousDocument,
                "document has both \"rays\" and \"vertices\"; give exactly one");
  }
  if (!has_rays && !has_vertices) {
    throw Error(ErrorCode::ParseError, "document needs a \"rays\" or a \"vertices\" list");
  }
  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorCode::ParseError, "\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  if (has_rays) return FanDocument{json_pairs(doc["rays"], "rays"), name};
  return PolygonDocument{json_pairs(doc["vertices"], "vertices"), name};
}

InputDocument parse_plain_document(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  bool polygon = false;
  bool first = true;
  std::vector<Integer> values;
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      if (first && (token == "rays" || token == "vertices")) {
        polygon = token == "vertices";
        first = false;
        continue;
      }
      first = false;
      if (!is_integer_literal(token)) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": expected an integer, got '" + token + "'");
      }
      values.emplace_back(token);
    }
  }
  if (values.size() % 2 != 0) {
    throw Error(ErrorCode::ParseError, "odd number of integers; coordinates come in pairs");
  }
  std::vector<LatticeVector> pairs;
  for (std::size_t k = 0; k < values.size(); k += 2) pairs.emplace_back(values[k], values[k + 1]);
  if (polygon) return PolygonDocument{std::move(pairs), std::nullopt};
  return FanDocument{std::move(pairs), std::nullopt};
}

InputDocument parse_input(const std::string& path, bool plain, std::istream& stdin_stream) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << stdin_stream.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return plain ? parse_plain_document(text) : parse_json_document(text);
}

Fan to_fan(const InputDocument& doc) {
  if (const auto* fan = std::get_if<FanDocument>(&doc)) return validate_fan(fan->rays);
  return normal_fan(Polygon{std::get<PolygonDocument>(doc).vertices});
}

nlohmann::json to_json(const LatticeVector& v) {
  return json::array({integer_json(v.a), integer_json(v.b)});
}

nlohmann::json to_json(const FanDocument& doc) {
  json out;
  json rays = json::array();
  for (const auto& r : doc.rays) rays.push_back(to_json(r));
  out["rays"] = std::move(rays);
  if (doc.name) out["name"] = *doc.name;
  return out;
}

nlohmann::json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table(const RationalMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& q : m.entries()) {
    cells.push_back(to_string(q));
    width = std::max(width, cells.back().size());
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& cell = cells[i * m.cols() + j];
      if (j > 0) out += "  ";
      out.append(width - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

std::string render_latex(const RationalMatrix& m) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (j > 0) out += " & ";
      if (is_integer(q)) {
        out += q.get_num().get_str();
      } else {
        if (sgn(q) < 0) out += '-';
        out += "\\frac{" + Integer(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
      }
    }
    out += i + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  out += "\\end{pmatrix}\n";
  return out;
}

}  // namespace toric
