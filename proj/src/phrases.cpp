#include "relkw/phrases.hpp"

#include "relkw/levenshtein.hpp"
#include "relkw/utf8.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace relkw {

namespace {

bool contiguous_subsequence(const std::vector<WordKey>& needle,
                            const std::vector<WordKey>& haystack) {
    if (needle.size() > haystack.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        if (std::equal(needle.begin(), needle.end(), haystack.begin() + i)) return true;
    }
    return false;
}

} // namespace

std::vector<Keyphrase> enumerate_sequences(const CandidateSet& candidates) {
    std::map<std::vector<WordKey>, Keyphrase> compiled;

    for (const ThreadStream& stream : candidates.streams) {
        std::size_t i = 0;
        while (i < stream.tokens.size()) {
            // maximal run: same message, consecutive original positions
            std::size_t j = i + 1;
            while (j < stream.tokens.size() &&
                   stream.tokens[j].message_id == stream.tokens[i].message_id &&
                   stream.tokens[j].position == stream.tokens[j - 1].position + 1)
                ++j;

            for (std::size_t begin = i; begin < j; ++begin) {
                for (std::size_t end = begin + 1; end <= j; ++end) {
                    std::vector<WordKey> keys;
                    keys.reserve(end - begin);
                    PhraseOccurrence occ;
                    occ.thread_id = stream.thread_id;
                    occ.message_id = stream.tokens[begin].message_id;
                    occ.start_position = stream.tokens[begin].position;
                    for (std::size_t t = begin; t < end; ++t) {
                        keys.push_back(stream.tokens[t].key);
                        occ.surfaces.push_back(stream.tokens[t].surface);
                    }
                    Keyphrase& phrase = compiled[keys];
                    phrase.keys = keys;
                    phrase.occurrences.push_back(std::move(occ));
                }
            }
            i = j;
        }
    }

    std::vector<Keyphrase> out;
    out.reserve(compiled.size());
    for (auto& [keys, phrase] : compiled) out.push_back(std::move(phrase));

    // a sequence is maximal unless it occurs inside another compiled sequence
    for (Keyphrase& p : out) {
        p.maximal = std::none_of(out.begin(), out.end(), [&](const Keyphrase& q) {
            return q.keys.size() > p.keys.size() && contiguous_subsequence(p.keys, q.keys);
        });
    }
    return out;
}

void score_phrase(Keyphrase& phrase, const std::vector<ScoredWord>& scored) {
    double reciprocal_sum = 0.0;
    std::size_t qualified = 0;
    for (const WordKey& key : phrase.keys) {
        auto it = std::find_if(scored.begin(), scored.end(),
                               [&](const ScoredWord& w) { return w.key == key; });
        if (it == scored.end())
            throw std::invalid_argument("score_phrase: constituent not scored");
        if (!it->idf_passed) continue;
        ++qualified;
        reciprocal_sum += 1.0 / it->score;
    }
    phrase.qualified_count = qualified;
    phrase.score = qualified == 0 ? 0.0 : static_cast<double>(qualified) / reciprocal_sum;
}

namespace {

struct PoolEntry {
    KeywordEntry entry;
    bool is_phrase = false;
};

bool pool_before(const PoolEntry& a, const PoolEntry& b) {
    if (a.entry.score != b.entry.score) return a.entry.score > b.entry.score;
    return a.entry.keys < b.entry.keys;
}

bool word_in_phrase(const std::vector<WordKey>& word_keys, const KeywordEntry& phrase) {
    return std::find(phrase.keys.begin(), phrase.keys.end(), word_keys.front()) !=
           phrase.keys.end();
}

} // namespace

KeywordSet select_top_k(const std::vector<ScoredWord>& words,
                        const std::vector<Keyphrase>& phrases, std::size_t k,
                        std::optional<double> threshold) {
    if (k < 1) throw std::invalid_argument("select_top_k: k must be >= 1");

    std::vector<PoolEntry> primary, fallback;
    for (const ScoredWord& w : words) {
        PoolEntry e;
        e.entry.keys = {w.key};
        e.entry.score = w.score;
        primary.push_back(std::move(e));
    }
    // multi-word phrases only: a length-1 sequence duplicates its single word
    for (const Keyphrase& p : phrases) {
        if (p.keys.size() < 2) continue;
        PoolEntry e;
        e.entry.keys = p.keys;
        e.entry.score = p.score;
        e.is_phrase = true;
        if (p.maximal && p.qualified_count >= 2) {
            primary.push_back(std::move(e));
        } else {
            e.entry.from_fallback = true;
            fallback.push_back(std::move(e));
        }
    }
    std::sort(primary.begin(), primary.end(), pool_before);
    std::sort(fallback.begin(), fallback.end(), pool_before);

    std::vector<PoolEntry> pool = std::move(primary);
    pool.insert(pool.end(), fallback.begin(), fallback.end());

    KeywordSet set;
    set.k = k;
    std::vector<KeywordEntry>& selected = set.entries;
    for (PoolEntry& e : pool) {
        if (selected.size() >= k) break;
        if (threshold && e.entry.score < *threshold) continue;
        if (!e.is_phrase) {
            bool subsumed = std::any_of(selected.begin(), selected.end(),
                                        [&](const KeywordEntry& s) {
                                            return s.keys.size() > 1 &&
                                                   word_in_phrase(e.entry.keys, s);
                                        });
            if (subsumed) continue;
        } else {
            // a selected phrase suppresses its standalone constituents
            selected.erase(std::remove_if(selected.begin(), selected.end(),
                                          [&](const KeywordEntry& s) {
                                              return s.keys.size() == 1 &&
                                                     word_in_phrase(s.keys, e.entry);
                                          }),
                           selected.end());
        }
        selected.push_back(std::move(e.entry));
    }
    return set;
}

std::string display_form(const WordKey& key, const std::vector<Occurrence>& occurrences) {
    if (occurrences.empty())
        throw std::invalid_argument("display_form: no occurrences");
    std::string best;
    std::size_t best_distance = 0;
    for (const Occurrence& occ : occurrences) {
        std::size_t distance = levenshtein(occ.surface, key.stem);
        if (best.empty() || distance < best_distance ||
            (distance == best_distance && occ.surface < best)) {
            best = occ.surface;
            best_distance = distance;
        }
    }
    return best;
}

void resolve_displays(KeywordSet& set, const CandidateSet& candidates,
                      const std::vector<Keyphrase>& phrases) {
    for (KeywordEntry& entry : set.entries) {
        if (entry.keys.size() == 1) {
            const CandidateWord* word = candidates.find(entry.keys.front());
            if (!word) throw std::runtime_error("resolve_displays: unknown word key");
            entry.display = display_form(word->key, word->occurrences);
            continue;
        }
        auto it = std::find_if(phrases.begin(), phrases.end(), [&](const Keyphrase& p) {
            return p.keys == entry.keys;
        });
        if (it == phrases.end() || it->occurrences.empty())
            throw std::runtime_error("resolve_displays: unknown phrase");
        // phrases are rendered as they occur in the original message
        const PhraseOccurrence& first = it->occurrences.front();
        std::string display;
        for (std::size_t i = 0; i < first.surfaces.size(); ++i) {
            if (i) display.push_back(' ');
            display += first.surfaces[i];
        }
        entry.display = display;
    }
}

} // namespace relkw
