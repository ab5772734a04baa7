#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace relkw {

// RFC 1321 MD5, lowercase hex digest.
std::string md5_hex(std::string_view data);

struct HashedKeyword {
    std::string digest; // 32 lowercase hex chars
};

// Lowercases and collapses whitespace runs to a single space before hashing.
// MD5 is used as a fixed anonymisation step for exports, not as encryption.
std::string canonicalize_keyword(std::string_view display);

// Throws std::invalid_argument on empty input.
HashedKeyword hash_keyword(std::string_view display);

} // namespace relkw
