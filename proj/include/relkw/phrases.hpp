#pragma once

#include "relkw/candidates.hpp"
#include "relkw/scoring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace relkw {

struct PhraseOccurrence {
    std::string thread_id;
    std::string message_id;
    std::size_t start_position = 0;
    std::vector<std::string> surfaces; // original forms, in order
};

struct Keyphrase {
    std::vector<WordKey> keys; // length >= 1
    double score = 0.0;
    bool maximal = false;      // not a proper subsequence of another compiled sequence
    std::size_t qualified_count = 0; // constituents that passed the idf discount
    std::vector<PhraseOccurrence> occurrences;
};

// Compiles every sequence of candidate words that occurs in the messages:
// maximal runs of candidates at consecutive original token positions within
// one message, plus all their contiguous subsequences, deduplicated by key
// sequence.
std::vector<Keyphrase> enumerate_sequences(const CandidateSet& candidates);

// Harmonic mean over the constituents that passed the idf filter; phrases
// with no qualified constituent score 0.
void score_phrase(Keyphrase& phrase, const std::vector<ScoredWord>& scored);

struct KeywordEntry {
    std::string display;
    std::vector<WordKey> keys;
    double score = 0.0;
    bool from_fallback = false;
    std::vector<PosTag> tags() const {
        std::vector<PosTag> t;
        t.reserve(keys.size());
        for (const auto& k : keys) t.push_back(k.pos);
        return t;
    }
};

struct KeywordSet {
    std::pair<std::string, std::string> relationship; // lexicographically ordered
    std::string method;
    std::size_t k = 0;
    std::vector<KeywordEntry> entries;

    bool empty() const { return entries.empty(); }
};

// Fills from the primary pool (single words and maximal phrases with at
// least two qualified constituents) by score, then from the fallback pool
// (everything else). Standalone words subsumed by a selected phrase are
// suppressed. A threshold drops entries scoring below it.
KeywordSet select_top_k(const std::vector<ScoredWord>& words,
                        const std::vector<Keyphrase>& phrases, std::size_t k,
                        std::optional<double> threshold = std::nullopt);

// The surface form with the smallest edit distance to the stem; ties break
// lexicographically.
std::string display_form(const WordKey& key, const std::vector<Occurrence>& occurrences);

// Resolves entry displays: single words via display_form, phrases from their
// first occurrence in the original messages.
void resolve_displays(KeywordSet& set, const CandidateSet& candidates,
                      const std::vector<Keyphrase>& phrases);

} // namespace relkw
