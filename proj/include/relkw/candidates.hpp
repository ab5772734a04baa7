#pragma once

#include "relkw/corpus.hpp"
#include "relkw/textproc.hpp"

#include <regex>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace relkw {

// Plain stopwords plus whole-token regular expressions (for elongated words
// and digit-substituted spellings like "l0l").
struct StopwordRules {
    std::unordered_set<std::string> plain;
    std::vector<std::regex> patterns;
    std::vector<std::string> pattern_sources;

    void add_plain(std::string_view word);
    void add_pattern(const std::string& pattern); // throws on a bad expression

    // True if the lowercased surface is a plain stopword or fully matches a
    // pattern (patterns are anchored to the whole token).
    bool matches(std::string_view surface) const;

    // One entry per line; lines starting with "re:" are regex patterns,
    // '#' starts a comment. Later files extend earlier ones.
    static StopwordRules load(const std::vector<std::string>& paths);
};

struct HeuristicConfig {
    std::size_t max_word_length = 30;        // removal at >= this many codepoints
    double max_length_unique_ratio = 3.0;    // removal when strictly exceeded
    std::u32string emoticon_chars = U":;=8()[]<>/\\|*^";
};

std::vector<Token> pos_filter(const std::vector<Token>& tokens);
std::vector<Token> stopword_filter(const std::vector<Token>& tokens,
                                   const StopwordRules& rules);
std::vector<Token> heuristic_filter(const std::vector<Token>& tokens,
                                    const HeuristicConfig& config = {});

struct Occurrence {
    std::string thread_id;
    std::string message_id;
    std::size_t position = 0; // index in the per-thread token sequence
    std::string surface;
};

struct CandidateWord {
    WordKey key;
    std::vector<Occurrence> occurrences;
};

// One surviving token in thread order, with its original position.
struct CandidateToken {
    WordKey key;
    std::string message_id;
    std::size_t position = 0;
    std::size_t message_index = 0; // index of the message within its thread
    std::string surface;
};

struct ThreadStream {
    std::string thread_id;
    std::vector<CandidateToken> tokens;
};

struct CandidateSet {
    std::vector<CandidateWord> words;   // sorted by key
    std::vector<ThreadStream> streams;  // per-thread surviving tokens, in order

    const CandidateWord* find(const WordKey& key) const;
};

struct CandidateConfig {
    StopwordRules stopwords_en;
    StopwordRules stopwords_de;
    TaggerFn tagger;
    HeuristicConfig heuristics;

    const StopwordRules& stopwords_for(Lang lang) const {
        return lang == Lang::de ? stopwords_de : stopwords_en;
    }
};

// Runs tokenize -> tag -> pos filter -> stopword filter -> heuristics -> stem
// over every message whose language is in `languages`, grouping survivors by
// WordKey. Token positions index the per-thread sequence of processed
// messages, so co-occurrence can span message boundaries.
CandidateSet collect_candidates(const std::vector<Thread>& threads,
                                const std::vector<Lang>& languages,
                                const CandidateConfig& config);

} // namespace relkw
