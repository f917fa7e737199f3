#pragma once

#include <string>

namespace sexroot::detail {

// RFC 4180 quoting for fields that contain separators or quotes.
inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace sexroot::detail
