#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "appell/matrix.hpp"
#include "appell/rat.hpp"

namespace appell::cli {

enum class Format { Json, Csv };

/// One command result. JSON keys are fixed: family, m, params, kind, data.
/// Rationals are always canonical "p/q" strings.
struct OutputDocument {
  std::string family;
  std::size_t m = 0;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string kind;
  std::variant<RatVector, LTMatrix> data;

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

std::string to_json(const OutputDocument& doc);
/// Throws AppellError(ParseError) on malformed input.
OutputDocument from_json(std::string_view text);

/// Data only: one line per matrix row (full width, zeros included), or a
/// single line for a vector.
std::string to_csv(const OutputDocument& doc);
LTMatrix matrix_from_csv(std::string_view text);
RatVector vector_from_csv(std::string_view text);

std::string serialize(const OutputDocument& doc, Format format);

}  // namespace appell::cli
