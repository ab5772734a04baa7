#pragma once

#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 handling, sufficient for English and German text.
// Classification and case mapping cover ASCII, Latin-1 Supplement and
// Latin Extended-A; everything else passes through unchanged.

namespace relkw::utf8 {

// Decodes the codepoint starting at byte offset i and advances i past it.
// Malformed bytes decode as U+FFFD and advance by one byte.
char32_t decode(std::string_view s, std::size_t& i);

void encode(char32_t cp, std::string& out);

std::u32string decode_all(std::string_view s);
std::string encode_all(std::u32string_view s);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_space(char32_t cp);
bool is_upper(char32_t cp);

char32_t to_lower(char32_t cp);
std::string to_lower_copy(std::string_view s);

// Number of codepoints.
std::size_t length(std::string_view s);

} // namespace relkw::utf8
