#include "numsg/format.hpp"

#include <charconv>

namespace numsg {
namespace {

template <typename T>
std::string join_impl(std::span<const T> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string join(std::span<const Int> values) { return join_impl(values); }
std::string join(std::span<const int> values) { return join_impl(values); }

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    Int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec == std::errc::invalid_argument || ptr != last) {
      throw ValidationError("malformed integer list '" + std::string(text) + "'");
    }
    if (ec == std::errc::result_out_of_range) {
      throw ValidationError("integer '" + std::string(token) + "' does not fit in 64 bits");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

PositionVector parse_position_vector(std::string_view text) {
  return PositionVector(parse_int_list(text));
}

std::string to_text(const NumericalSet& set) {
  std::string out = "{";
  for (Int s : set.sporadic()) out += std::to_string(s) + ",";
  out += std::to_string(set.conductor()) + "→}";
  return out;
}

std::string to_text(const AperySet& apery) {
  return std::to_string(apery.modulus()) + ":{" + join(apery.elements()) + "}";
}

}  // namespace numsg
