#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pslens/exact.hpp"

namespace pslens::detail {

std::string_view trim(std::string_view text);

/// Parses "H(a,b,...)" with exactly `arity` integer arguments.
std::vector<Integer> parse_call(std::string_view text, std::string_view head, std::size_t arity);

/// Splits on a separator character, trimming each piece.
std::vector<std::string_view> split(std::string_view text, char separator);

}  // namespace pslens::detail
