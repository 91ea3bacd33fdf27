#include "document.hpp"

#include <sstream>

#include "appell/errors.hpp"

namespace appell::cli {

namespace {

using json = nlohmann::ordered_json;

json vector_to_json(const RatVector& v) {
  json out = json::array();
  for (const Rat& r : v) out.push_back(r.str());
  return out;
}

RatVector vector_from_json(const json& j) {
  if (!j.is_array()) throw AppellError(ErrorKind::ParseError, "expected an array of rationals");
  RatVector out;
  for (const auto& e : j) {
    if (!e.is_string()) throw AppellError(ErrorKind::ParseError, "rationals must be strings");
    out.push_back(Rat::parse(e.get<std::string>()));
  }
  return out;
}

std::string csv_line(std::span<const Rat> values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += values[i].str();
  }
  return line;
}

RatVector parse_csv_line(std::string_view line) {
  RatVector out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(Rat::parse(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string_view> nonempty_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace

std::string to_json(const OutputDocument& doc) {
  json j;
  j["family"] = doc.family;
  j["m"] = doc.m;
  j["params"] = doc.params;
  j["kind"] = doc.kind;
  if (const auto* v = std::get_if<RatVector>(&doc.data)) {
    j["data"] = vector_to_json(*v);
  } else {
    json rows = json::array();
    for (const RatVector& r : std::get<LTMatrix>(doc.data).rows()) rows.push_back(vector_to_json(r));
    j["data"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

OutputDocument from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw AppellError(ErrorKind::ParseError, e.what());
  }
  for (const char* key : {"family", "m", "params", "kind", "data"}) {
    if (!j.contains(key)) throw AppellError(ErrorKind::ParseError, std::string("missing key ") + key);
  }
  OutputDocument doc;
  try {
    doc.family = j.at("family").get<std::string>();
    doc.m = j.at("m").get<std::size_t>();
    doc.kind = j.at("kind").get<std::string>();
  } catch (const json::exception& e) {
    throw AppellError(ErrorKind::ParseError, e.what());
  }
  doc.params = j.at("params");
  const json& data = j.at("data");
  if (!data.empty() && data.front().is_array()) {
    std::vector<RatVector> rows;
    for (const auto& r : data) rows.push_back(vector_from_json(r));
    doc.data = LTMatrix::from_rows(rows);
  } else {
    doc.data = vector_from_json(data);
  }
  return doc;
}

std::string to_csv(const OutputDocument& doc) {
  std::string out;
  if (const auto* v = std::get_if<RatVector>(&doc.data)) {
    out = csv_line(*v) + "\n";
  } else {
    const LTMatrix& m = std::get<LTMatrix>(doc.data);
    for (std::size_t i = 0; i < m.order(); ++i) out += csv_line(m.row_span(i)) + "\n";
  }
  return out;
}

LTMatrix matrix_from_csv(std::string_view text) {
  std::vector<RatVector> rows;
  for (std::string_view line : nonempty_lines(text)) rows.push_back(parse_csv_line(line));
  if (rows.empty()) throw AppellError(ErrorKind::ParseError, "empty matrix");
  return LTMatrix::from_rows(rows);
}

RatVector vector_from_csv(std::string_view text) {
  const auto lines = nonempty_lines(text);
  if (lines.size() != 1) throw AppellError(ErrorKind::ParseError, "expected one CSV line");
  return parse_csv_line(lines.front());
}

std::string serialize(const OutputDocument& doc, Format format) {
  return format == Format::Json ? to_json(doc) : to_csv(doc);
}

}  // namespace appell::cli
