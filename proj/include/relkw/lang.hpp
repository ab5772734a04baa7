#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace relkw {

enum class Lang { en, de, unknown };

inline std::string to_string(Lang lang) {
    switch (lang) {
    case Lang::en: return "en";
    case Lang::de: return "de";
    default: return "unknown";
    }
}

inline std::optional<Lang> lang_from_string(std::string_view s) {
    if (s == "en") return Lang::en;
    if (s == "de") return Lang::de;
    if (s == "unknown") return Lang::unknown;
    return std::nullopt;
}

} // namespace relkw
