#include "cmlab/format.hpp"

#include <charconv>

#include "cmlab/error.hpp"

namespace cmlab {

std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc{} || result.ptr != last) {
    throw Error(Errc::IoFailure, "cannot parse '" + text + "' as a number");
  }
  return value;
}

}  // namespace cmlab
