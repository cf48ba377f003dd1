#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace xbow {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_number(double value);

/// Parses a full token (surrounding blanks allowed) as a double.
std::optional<double> parse_number(std::string_view text);

/// Parses a full token as a non-negative integer.
std::optional<std::size_t> parse_count(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace xbow
