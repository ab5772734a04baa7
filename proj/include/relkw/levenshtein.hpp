#pragma once

#include <cstddef>
#include <string_view>

namespace relkw {

// Unit-cost edit distance over codepoints, case-insensitive.
std::size_t levenshtein(std::string_view a, std::string_view b);

} // namespace relkw
