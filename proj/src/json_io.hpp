#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "conepit/error.hpp"
#include "conepit/field.hpp"
#include "json.hpp"

namespace conepit::detail {

using json = nlohmann::json;

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

template <typename T>
T require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) raise(ErrorKind::ParseError, where + ": missing '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    raise(ErrorKind::ParseError, where + ": field '" + key + "' has the wrong type");
  }
}

/// Decimal string (or JSON integer) as a field element.
inline Scalar json_scalar(const json& v, const Field& field, const std::string& where) {
  if (v.is_string()) return field.parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return field.from_int(v.get<std::int64_t>());
  raise(ErrorKind::ParseError, where + ": scalars must be decimal strings");
}

inline Scalar scalar_field(const json& obj, const char* key, const Field& field, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) raise(ErrorKind::ParseError, where + ": missing '" + key + "'");
  return json_scalar(obj.at(key), field, where + " '" + key + "'");
}

inline const json& require_array(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_array())
    raise(ErrorKind::ParseError, where + ": '" + key + "' must be an array");
  return obj.at(key);
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorKind::ParseError, "malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

}  // namespace conepit::detail
