// Snowball German stemmer (snowballstem.org "german" algorithm).

#include "relkw/stem.hpp"

#include "relkw/utf8.hpp"

#include <algorithm>

namespace relkw {

namespace {

constexpr char32_t kAuml = U'ä', kOuml = U'ö', kUuml = U'ü';
constexpr char32_t kSharpS = U'ß';

bool is_vowel(char32_t c) {
    return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u' || c == U'y' ||
           c == kAuml || c == kOuml || c == kUuml;
}

bool valid_s_ending(char32_t c) {
    return c == U'b' || c == U'd' || c == U'f' || c == U'g' || c == U'h' || c == U'k' ||
           c == U'l' || c == U'm' || c == U'n' || c == U'r' || c == U't';
}

bool valid_st_ending(char32_t c) { return valid_s_ending(c) && c != U'r'; }

bool ends_with(const std::u32string& w, std::u32string_view suf) {
    return w.size() >= suf.size() &&
           w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

// Start of the region after the first non-vowel following a vowel.
std::size_t region_after(const std::u32string& w, std::size_t from) {
    for (std::size_t i = from + 1; i < w.size(); ++i) {
        if (!is_vowel(w[i]) && is_vowel(w[i - 1])) return i + 1;
    }
    return w.size();
}

struct Regions {
    std::size_t r1, r2;
};

Regions compute_regions(const std::u32string& w) {
    std::size_t r1 = region_after(w, 0);
    std::size_t r2 = r1 >= w.size() ? w.size() : region_after(w, r1);
    // the region before R1 must contain at least 3 letters
    r1 = std::max<std::size_t>(r1, std::min<std::size_t>(3, w.size()));
    return {r1, r2};
}

// The longest matching suffix decides the rule; a failed region check does
// not fall back to shorter suffixes.
void step_1(std::u32string& w, const Regions& reg) {
    const auto in_r1 = [&](std::size_t suffix_len) { return w.size() - suffix_len >= reg.r1; };

    if (ends_with(w, U"ern")) {
        if (in_r1(3)) w.resize(w.size() - 3);
        return;
    }
    if (ends_with(w, U"em") || ends_with(w, U"er")) {
        if (in_r1(2)) w.resize(w.size() - 2);
        return;
    }
    if (ends_with(w, U"en") || ends_with(w, U"es")) {
        if (in_r1(2)) {
            w.resize(w.size() - 2);
            if (ends_with(w, U"niss")) w.pop_back();
        }
        return;
    }
    if (ends_with(w, U"e")) {
        if (in_r1(1)) {
            w.pop_back();
            if (ends_with(w, U"niss")) w.pop_back();
        }
        return;
    }
    if (ends_with(w, U"s") && w.size() >= 2 && valid_s_ending(w[w.size() - 2])) {
        if (in_r1(1)) w.pop_back();
    }
}

void step_2(std::u32string& w, const Regions& reg) {
    const auto in_r1 = [&](std::size_t suffix_len) { return w.size() - suffix_len >= reg.r1; };

    if (ends_with(w, U"est")) {
        if (in_r1(3)) w.resize(w.size() - 3);
        return;
    }
    if (ends_with(w, U"en") || ends_with(w, U"er")) {
        if (in_r1(2)) w.resize(w.size() - 2);
        return;
    }
    if (ends_with(w, U"st") && w.size() >= 6 && valid_st_ending(w[w.size() - 3])) {
        // the st-ending letter must itself be preceded by at least 3 letters
        if (in_r1(2)) w.resize(w.size() - 2);
    }
}

void step_3(std::u32string& w, const Regions& reg) {
    const auto in_r1 = [&](std::size_t len) { return w.size() - len >= reg.r1; };
    const auto in_r2 = [&](std::size_t len) { return w.size() - len >= reg.r2; };

    if (ends_with(w, U"end") || ends_with(w, U"ung")) {
        if (in_r2(3)) {
            w.resize(w.size() - 3);
            if (ends_with(w, U"ig") && in_r2(2) &&
                !(w.size() >= 3 && w[w.size() - 3] == U'e'))
                w.resize(w.size() - 2);
        }
        return;
    }
    if (ends_with(w, U"isch")) {
        if (in_r2(4) && !(w.size() >= 5 && w[w.size() - 5] == U'e')) w.resize(w.size() - 4);
        return;
    }
    if (ends_with(w, U"ig") || ends_with(w, U"ik")) {
        if (in_r2(2) && !(w.size() >= 3 && w[w.size() - 3] == U'e')) w.resize(w.size() - 2);
        return;
    }
    if (ends_with(w, U"lich") || ends_with(w, U"heit")) {
        if (in_r2(4)) {
            w.resize(w.size() - 4);
            if ((ends_with(w, U"er") || ends_with(w, U"en")) && in_r1(2))
                w.resize(w.size() - 2);
        }
        return;
    }
    if (ends_with(w, U"keit")) {
        if (in_r2(4)) {
            w.resize(w.size() - 4);
            if (ends_with(w, U"lich") && in_r2(4))
                w.resize(w.size() - 4);
            else if (ends_with(w, U"ig") && in_r2(2))
                w.resize(w.size() - 2);
        }
        return;
    }
}

} // namespace

std::string german_stem(std::string_view word) {
    std::u32string w = utf8::decode_all(word);

    // ß -> ss
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == kSharpS) {
            w[i] = U's';
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, U's');
        }
    }
    // protect u and y between vowels from being treated as vowels
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        if ((w[i] == U'u' || w[i] == U'y') && is_vowel(w[i - 1]) && is_vowel(w[i + 1]))
            w[i] = w[i] == U'u' ? U'U' : U'Y';
    }

    Regions reg = compute_regions(w);
    step_1(w, reg);
    step_2(w, reg);
    step_3(w, reg);

    for (auto& c : w) {
        if (c == U'U') c = U'u';
        else if (c == U'Y') c = U'y';
        else if (c == kAuml) c = U'a';
        else if (c == kOuml) c = U'o';
        else if (c == kUuml) c = U'u';
    }
    return utf8::encode_all(w);
}

std::string stem(std::string_view surface, Lang lang) {
    std::string lowered = utf8::to_lower_copy(surface);
    switch (lang) {
    case Lang::en: return porter_stem(lowered);
    case Lang::de: return german_stem(lowered);
    default: return lowered;
    }
}

} // namespace relkw
