#include "relkw/privacy.hpp"

#include "relkw/utf8.hpp"

#include <cstring>
#include <stdexcept>

namespace relkw {

namespace {

struct Md5State {
    std::uint32_t a = 0x67452301u;
    std::uint32_t b = 0xefcdab89u;
    std::uint32_t c = 0x98badcfeu;
    std::uint32_t d = 0x10325476u;
};

constexpr std::uint32_t kSines[64] = {
    0xd76aa478, 0xe8c7b756, 0x242070db, 0xc1bdceee, 0xf57c0faf, 0x4787c62a, 0xa8304613,
    0xfd469501, 0x698098d8, 0x8b44f7af, 0xffff5bb1, 0x895cd7be, 0x6b901122, 0xfd987193,
    0xa679438e, 0x49b40821, 0xf61e2562, 0xc040b340, 0x265e5a51, 0xe9b6c7aa, 0xd62f105d,
    0x02441453, 0xd8a1e681, 0xe7d3fbc8, 0x21e1cde6, 0xc33707d6, 0xf4d50d87, 0x455a14ed,
    0xa9e3e905, 0xfcefa3f8, 0x676f02d9, 0x8d2a4c8a, 0xfffa3942, 0x8771f681, 0x6d9d6122,
    0xfde5380c, 0xa4beea44, 0x4bdecfa9, 0xf6bb4b60, 0xbebfbc70, 0x289b7ec6, 0xeaa127fa,
    0xd4ef3085, 0x04881d05, 0xd9d4d039, 0xe6db99e5, 0x1fa27cf8, 0xc4ac5665, 0xf4292244,
    0x432aff97, 0xab9423a7, 0xfc93a039, 0x655b59c3, 0x8f0ccc92, 0xffeff47d, 0x85845dd1,
    0x6fa87e4f, 0xfe2ce6e0, 0xa3014314, 0x4e0811a1, 0xf7537e82, 0xbd3af235, 0x2ad7d2bb,
    0xeb86d391};

constexpr int kShifts[64] = {7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
                             5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20,
                             4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
                             6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21};

std::uint32_t rotl(std::uint32_t x, int n) { return (x << n) | (x >> (32 - n)); }

void md5_block(Md5State& st, const unsigned char* block) {
    std::uint32_t m[16];
    for (int i = 0; i < 16; ++i) {
        m[i] = std::uint32_t(block[4 * i]) | (std::uint32_t(block[4 * i + 1]) << 8) |
               (std::uint32_t(block[4 * i + 2]) << 16) | (std::uint32_t(block[4 * i + 3]) << 24);
    }
    std::uint32_t a = st.a, b = st.b, c = st.c, d = st.d;
    for (int i = 0; i < 64; ++i) {
        std::uint32_t f;
        int g;
        if (i < 16) {
            f = (b & c) | (~b & d);
            g = i;
        } else if (i < 32) {
            f = (d & b) | (~d & c);
            g = (5 * i + 1) % 16;
        } else if (i < 48) {
            f = b ^ c ^ d;
            g = (3 * i + 5) % 16;
        } else {
            f = c ^ (b | ~d);
            g = (7 * i) % 16;
        }
        std::uint32_t tmp = d;
        d = c;
        c = b;
        b = b + rotl(a + f + kSines[i] + m[g], kShifts[i]);
        a = tmp;
    }
    st.a += a;
    st.b += b;
    st.c += c;
    st.d += d;
}

} // namespace

std::string md5_hex(std::string_view data) {
    Md5State st;
    std::size_t i = 0;
    for (; i + 64 <= data.size(); i += 64)
        md5_block(st, reinterpret_cast<const unsigned char*>(data.data()) + i);

    unsigned char tail[128] = {};
    std::size_t rem = data.size() - i;
    std::memcpy(tail, data.data() + i, rem);
    tail[rem] = 0x80;
    std::size_t tail_len = rem + 1 <= 56 ? 64 : 128;
    std::uint64_t bits = std::uint64_t(data.size()) * 8;
    for (int k = 0; k < 8; ++k) tail[tail_len - 8 + k] = static_cast<unsigned char>(bits >> (8 * k));
    md5_block(st, tail);
    if (tail_len == 128) md5_block(st, tail + 64);

    const std::uint32_t words[4] = {st.a, st.b, st.c, st.d};
    static const char* hexdig = "0123456789abcdef";
    std::string out;
    out.reserve(32);
    for (std::uint32_t w : words) {
        for (int k = 0; k < 4; ++k) {
            unsigned char byte = static_cast<unsigned char>(w >> (8 * k));
            out.push_back(hexdig[byte >> 4]);
            out.push_back(hexdig[byte & 0xF]);
        }
    }
    return out;
}

std::string canonicalize_keyword(std::string_view display) {
    std::string lowered = utf8::to_lower_copy(display);
    std::string out;
    out.reserve(lowered.size());
    bool in_space = true; // also trims leading whitespace
    std::size_t i = 0;
    while (i < lowered.size()) {
        std::size_t before = i;
        char32_t cp = utf8::decode(lowered, i);
        if (utf8::is_space(cp)) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.append(lowered, before, i - before);
    }
    return out;
}

HashedKeyword hash_keyword(std::string_view display) {
    if (display.empty()) throw std::invalid_argument("hash_keyword: empty keyword");
    return HashedKeyword{md5_hex(canonicalize_keyword(display))};
}

} // namespace relkw
