#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace upn {

// Unbounded integer used for token counts, weights and tape codes. Boost
// has no unbounded unsigned cpp_int, so nonnegativity is kept by the
// callers: parsers reject signs and the engine only subtracts from places
// it has checked.
using Natural = boost::multiprecision::cpp_int;

// Per-firing token deltas.
using Integer = boost::multiprecision::cpp_int;

// Parses an unsigned decimal literal; throws std::invalid_argument otherwise.
Natural parse_natural(std::string_view text);

std::string to_string(const Natural& value);

// Saturating conversion, used when a batch count is clamped to a run budget.
std::uint64_t clamp_to_u64(const Natural& value);

}  // namespace upn
