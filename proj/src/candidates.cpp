#include "relkw/candidates.hpp"

#include "relkw/stem.hpp"
#include "relkw/utf8.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

namespace relkw {

void StopwordRules::add_plain(std::string_view word) {
    plain.insert(utf8::to_lower_copy(word));
}

void StopwordRules::add_pattern(const std::string& pattern) {
    patterns.emplace_back(pattern, std::regex::ECMAScript | std::regex::optimize);
    pattern_sources.push_back(pattern);
}

bool StopwordRules::matches(std::string_view surface) const {
    std::string lowered = utf8::to_lower_copy(surface);
    if (plain.count(lowered)) return true;
    for (const std::regex& re : patterns) {
        // regex_match anchors to the whole token; match on the raw surface
        // since patterns may distinguish case (e.g. "(l|L)+...").
        if (std::regex_match(surface.begin(), surface.end(), re)) return true;
    }
    return false;
}

StopwordRules StopwordRules::load(const std::vector<std::string>& paths) {
    StopwordRules rules;
    for (const std::string& path : paths) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open stopword file: " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            if (line.rfind("re:", 0) == 0) {
                rules.add_pattern(line.substr(3));
            } else {
                rules.add_plain(line);
            }
        }
    }
    return rules;
}

std::vector<Token> pos_filter(const std::vector<Token>& tokens) {
    std::vector<Token> out;
    for (const Token& t : tokens)
        if (t.pos == PosTag::noun || t.pos == PosTag::adj) out.push_back(t);
    return out;
}

std::vector<Token> stopword_filter(const std::vector<Token>& tokens,
                                   const StopwordRules& rules) {
    std::vector<Token> out;
    for (const Token& t : tokens)
        if (!rules.matches(t.surface)) out.push_back(t);
    return out;
}

namespace {

bool survives_heuristics(const Token& t, const HeuristicConfig& config) {
    std::u32string cps = utf8::decode_all(t.surface);
    if (cps.size() >= config.max_word_length) return false;

    std::size_t letters = 0;
    std::set<char32_t> distinct;
    for (char32_t cp : cps) {
        if (config.emoticon_chars.find(cp) != std::u32string::npos) return false;
        if (utf8::is_letter(cp)) {
            ++letters;
            distinct.insert(utf8::to_lower(cp));
        }
    }
    if (!distinct.empty()) {
        double ratio = static_cast<double>(letters) / static_cast<double>(distinct.size());
        if (ratio > config.max_length_unique_ratio) return false;
    }
    return true;
}

} // namespace

std::vector<Token> heuristic_filter(const std::vector<Token>& tokens,
                                    const HeuristicConfig& config) {
    std::vector<Token> out;
    for (const Token& t : tokens)
        if (survives_heuristics(t, config)) out.push_back(t);
    return out;
}

const CandidateWord* CandidateSet::find(const WordKey& key) const {
    auto it = std::lower_bound(words.begin(), words.end(), key,
                               [](const CandidateWord& w, const WordKey& k) { return w.key < k; });
    if (it != words.end() && it->key == key) return &*it;
    return nullptr;
}

CandidateSet collect_candidates(const std::vector<Thread>& threads,
                                const std::vector<Lang>& languages,
                                const CandidateConfig& config) {
    CandidateSet set;
    std::map<WordKey, std::vector<Occurrence>> grouped;

    for (const Thread& thread : threads) {
        ThreadStream stream;
        stream.thread_id = thread.thread_id;
        std::size_t next_position = 0;

        for (std::size_t msg_index = 0; msg_index < thread.messages.size(); ++msg_index) {
            const Message& msg = thread.messages[msg_index];
            if (std::find(languages.begin(), languages.end(), msg.lang) == languages.end())
                continue;

            std::vector<Token> tokens = tokenize(msg.body);
            for (Token& t : tokens) {
                t.message_id = msg.id;
                t.position = next_position++;
            }
            tag(tokens, msg.lang, config.tagger);

            std::vector<Token> kept = pos_filter(tokens);
            kept = stopword_filter(kept, config.stopwords_for(msg.lang));
            kept = heuristic_filter(kept, config.heuristics);

            for (const Token& t : kept) {
                WordKey key{stem(t.surface, msg.lang), t.pos};
                grouped[key].push_back(
                    Occurrence{thread.thread_id, t.message_id, t.position, t.surface});
                stream.tokens.push_back(
                    CandidateToken{key, t.message_id, t.position, msg_index, t.surface});
            }
        }
        if (!stream.tokens.empty()) set.streams.push_back(std::move(stream));
    }

    set.words.reserve(grouped.size());
    for (auto& [key, occurrences] : grouped)
        set.words.push_back(CandidateWord{key, std::move(occurrences)});
    return set;
}

} // namespace relkw
