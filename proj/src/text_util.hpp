#pragma once

// Shared helpers for the line-oriented text formats.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace upn::text {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens, dropping '#' comments and blank lines.
std::vector<Line> tokenize(std::string_view text);

// Parses "<prefix><digits>" such as "p12"; nullopt on mismatch or index 0.
std::optional<std::size_t> parse_indexed(std::string_view token, char prefix);

std::string join(const std::vector<std::string>& parts, std::string_view sep = " ");

}  // namespace upn::text
