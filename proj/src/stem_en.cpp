// Porter's stemming algorithm, as published in Program 14(3), 1980.

#include "relkw/stem.hpp"

#include <array>
#include <cstddef>

namespace relkw {

namespace {

bool is_consonant(const std::string& w, std::size_t i) {
    char c = w[i];
    switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
    case 'y':
        return i == 0 ? true : !is_consonant(w, i - 1);
    default:
        return true;
    }
}

// m = number of VC sequences in the [C](VC)^m[V] decomposition of w[0..len).
int measure(const std::string& w, std::size_t len) {
    int m = 0;
    std::size_t i = 0;
    while (i < len && is_consonant(w, i)) ++i;
    while (i < len) {
        while (i < len && !is_consonant(w, i)) ++i;
        if (i == len) break;
        ++m;
        while (i < len && is_consonant(w, i)) ++i;
    }
    return m;
}

bool has_vowel(const std::string& w, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

bool double_consonant(const std::string& w, std::size_t len) {
    return len >= 2 && w[len - 1] == w[len - 2] && is_consonant(w, len - 1);
}

// *o: stem ends cvc where the final consonant is not w, x or y.
bool ends_cvc(const std::string& w, std::size_t len) {
    if (len < 3) return false;
    if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) || !is_consonant(w, len - 1))
        return false;
    char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
    std::string_view from;
    std::string_view to;
};

// Applies the longest-matching rule whose stem satisfies m > min_measure.
// Per the paper, a failed condition does not fall through to shorter suffixes.
void apply_rules(std::string& w, const Rule* rules, std::size_t n, int min_measure) {
    const Rule* best = nullptr;
    for (std::size_t i = 0; i < n; ++i) {
        if (ends_with(w, rules[i].from) && (!best || rules[i].from.size() > best->from.size()))
            best = &rules[i];
    }
    if (!best) return;
    std::size_t stem_len = w.size() - best->from.size();
    if (measure(w, stem_len) > min_measure) {
        w.resize(stem_len);
        w.append(best->to);
    }
}

void step_1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ies")) {
        w.resize(w.size() - 2);
    } else if (!ends_with(w, "ss") && ends_with(w, "s")) {
        w.resize(w.size() - 1);
    }
}

void step_1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
        return;
    }
    bool stripped = false;
    if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
        w.resize(w.size() - 2);
        stripped = true;
    } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
        w.resize(w.size() - 3);
        stripped = true;
    }
    if (!stripped) return;

    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (double_consonant(w, w.size())) {
        char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
        w.push_back('e');
    }
}

void step_1c(std::string& w) {
    if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

constexpr std::array<Rule, 20> kStep2 = {{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
    {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
    {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
    {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
}};

constexpr std::array<Rule, 7> kStep3 = {{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
}};

constexpr std::array<Rule, 18> kStep4 = {{
    {"al", ""},  {"ance", ""}, {"ence", ""}, {"er", ""},    {"ic", ""},  {"able", ""},
    {"ible", ""}, {"ant", ""}, {"ement", ""}, {"ment", ""}, {"ent", ""}, {"ou", ""},
    {"ism", ""}, {"ate", ""},  {"iti", ""},  {"ous", ""},   {"ive", ""}, {"ize", ""},
}};

void step_4(std::string& w) {
    // "ion" only counts with a stem ending in s or t; handled apart from the table.
    const Rule* best = nullptr;
    for (const Rule& r : kStep4) {
        if (ends_with(w, r.from) && (!best || r.from.size() > best->from.size())) best = &r;
    }
    bool ion = ends_with(w, "ion") && w.size() >= 4 &&
               (w[w.size() - 4] == 's' || w[w.size() - 4] == 't');
    if (ion && (!best || best->from.size() < 3)) {
        if (measure(w, w.size() - 3) > 1) w.resize(w.size() - 3);
        return;
    }
    if (!best) return;
    std::size_t stem_len = w.size() - best->from.size();
    if (measure(w, stem_len) > 1) w.resize(stem_len);
}

void step_5(std::string& w) {
    if (ends_with(w, "e")) {
        int m = measure(w, w.size() - 1);
        if (m > 1 || (m == 1 && !ends_cvc(w, w.size() - 1))) w.pop_back();
    }
    if (w.size() >= 2 && double_consonant(w, w.size()) && w.back() == 'l' &&
        measure(w, w.size() - 1) > 1)
        w.pop_back();
}

} // namespace

std::string porter_stem(std::string_view word) {
    std::string w(word);
    if (w.size() <= 2) return w;
    step_1a(w);
    step_1b(w);
    step_1c(w);
    apply_rules(w, kStep2.data(), kStep2.size(), 0);
    apply_rules(w, kStep3.data(), kStep3.size(), 0);
    step_4(w);
    step_5(w);
    return w;
}

} // namespace relkw
