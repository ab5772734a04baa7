#pragma once

#include "relkw/lang.hpp"

#include <string>
#include <string_view>

namespace relkw {

// Porter's 1980 suffix-stripping algorithm. Expects a lowercase word.
std::string porter_stem(std::string_view word);

// Snowball German stemmer. Expects a lowercase UTF-8 word; the result has
// umlauts removed (per the algorithm's final step).
std::string german_stem(std::string_view word);

// Lowercases and dispatches to the stemmer for the given language.
// Lang::unknown falls back to lowercasing only.
std::string stem(std::string_view surface, Lang lang);

} // namespace relkw
