#include "upn/natural.hpp"

#include <limits>
#include <stdexcept>

#include "upn/errors.hpp"

namespace upn {

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  Natural value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal number: " + std::string(text));
    value *= 10u;
    value += static_cast<unsigned>(c - '0');
  }
  return value;
}

std::string to_string(const Natural& value) { return value.str(); }

std::uint64_t clamp_to_u64(const Natural& value) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (value > kMax) return kMax;
  return value.convert_to<std::uint64_t>();
}

namespace {
std::string join_diagnostics(const std::vector<std::string>& diags) {
  std::string out = "validation failed";
  for (const auto& d : diags) out += "\n  " + d;
  return out;
}
}  // namespace

ValidationError::ValidationError(std::vector<std::string> diags)
    : Error(join_diagnostics(diags)), diagnostics(std::move(diags)) {}

}  // namespace upn
