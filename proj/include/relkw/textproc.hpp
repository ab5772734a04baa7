#pragma once

#include "relkw/lang.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace relkw {

enum class PosTag { noun, adj, other };

inline std::string to_string(PosTag t) {
    switch (t) {
    case PosTag::noun: return "NOUN";
    case PosTag::adj: return "ADJ";
    default: return "OTHER";
    }
}

struct Token {
    std::string surface;
    std::size_t position = 0; // index in the enclosing token sequence
    std::string message_id;
    PosTag pos = PosTag::other;
    bool is_word = false; // false for punctuation runs
};

// Word identity for the whole pipeline: two words are equal iff their stems
// and coarse PoS tags are equal. Surface forms are kept only for display.
struct WordKey {
    std::string stem;
    PosTag pos = PosTag::other;

    auto operator<=>(const WordKey&) const = default;
};

// Splits into word tokens (letters/digits, with punctuation bound inside a
// word when flanked by word characters, e.g. "10:30" or "a@b.de") and
// punctuation-run tokens. Whitespace separates; positions are local indices.
std::vector<Token> tokenize(std::string_view body);

using TaggerFn =
    std::function<std::vector<PosTag>(const std::vector<Token>&, Lang)>;

// Lexicon lookup with suffix-rule fallback. Unknown words default to OTHER,
// except capitalized mid-sentence German words, which default to NOUN.
class BaselineTagger {
public:
    static BaselineTagger from_files(const std::string& lexicon_en,
                                     const std::string& lexicon_de);

    void add_entry(Lang lang, std::string surface, PosTag tag);

    std::vector<PosTag> operator()(const std::vector<Token>& tokens, Lang lang) const;

    TaggerFn as_fn() const;

private:
    std::unordered_map<std::string, PosTag> lexicon_en_;
    std::unordered_map<std::string, PosTag> lexicon_de_;
};

// Assigns a tag to every token in place. Throws on Lang::unknown.
void tag(std::vector<Token>& tokens, Lang lang, const TaggerFn& tagger);

} // namespace relkw
