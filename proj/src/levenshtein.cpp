#include "relkw/levenshtein.hpp"

#include "relkw/utf8.hpp"

#include <algorithm>
#include <vector>

namespace relkw {

std::size_t levenshtein(std::string_view a, std::string_view b) {
    std::u32string ua = utf8::decode_all(a);
    std::u32string ub = utf8::decode_all(b);
    for (auto& c : ua) c = utf8::to_lower(c);
    for (auto& c : ub) c = utf8::to_lower(c);
    if (ua.size() < ub.size()) std::swap(ua, ub);

    // two-row DP over the shorter string
    std::vector<std::size_t> prev(ub.size() + 1), cur(ub.size() + 1);
    for (std::size_t j = 0; j <= ub.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= ua.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= ub.size(); ++j) {
            std::size_t sub = prev[j - 1] + (ua[i - 1] == ub[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[ub.size()];
}

} // namespace relkw
