#include "relkw/pipeline.hpp"

#include "relkw/analytics.hpp"
#include "relkw/privacy.hpp"
#include "relkw/utf8.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace relkw {

DataPaths DataPaths::under(const std::string& dir) {
    DataPaths p;
    p.stopwords_en = dir + "/stopwords/en.txt";
    p.stopwords_de = dir + "/stopwords/de.txt";
    p.stopwords_extra = dir + "/stopwords/extra.txt";
    p.lexicon_en = dir + "/lexicon/en.tsv";
    p.lexicon_de = dir + "/lexicon/de.tsv";
    p.langid_train_en = dir + "/langid/train_en.txt";
    p.langid_train_de = dir + "/langid/train_de.txt";
    return p;
}

ExtractResources load_resources(const DataPaths& paths) {
    ExtractResources res;

    res.candidates.stopwords_en = StopwordRules::load({paths.stopwords_en, paths.stopwords_extra});
    res.candidates.stopwords_de = StopwordRules::load({paths.stopwords_de, paths.stopwords_extra});

    auto tagger = std::make_shared<BaselineTagger>(
        BaselineTagger::from_files(paths.lexicon_en, paths.lexicon_de));
    res.candidates.tagger = [tagger](const std::vector<Token>& tokens, Lang lang) {
        return (*tagger)(tokens, lang);
    };

    auto stopword_set = [](const StopwordRules& rules) {
        return rules.plain;
    };
    res.profiles.push_back(train_profile(load_lines(paths.langid_train_en), Lang::en,
                                         stopword_set(res.candidates.stopwords_en)));
    res.profiles.push_back(train_profile(load_lines(paths.langid_train_de), Lang::de,
                                         stopword_set(res.candidates.stopwords_de)));
    return res;
}

std::size_t usable_message_count(const Relationship& rel,
                                 const std::vector<Lang>& languages) {
    std::size_t n = 0;
    for (const Thread& t : rel.threads)
        for (const Message& m : t.messages)
            if (std::find(languages.begin(), languages.end(), m.lang) != languages.end()) ++n;
    return n;
}

ExtractOutcome extract_keywords(const Relationship& rel,
                                const std::vector<Thread>& reference,
                                const ExtractOptions& options,
                                const ExtractResources& resources) {
    ExtractOutcome outcome;
    outcome.set.relationship = {rel.a, rel.b};
    outcome.set.method = options.method;
    outcome.set.k = options.k;

    if (usable_message_count(rel, options.languages) < options.min_messages) {
        outcome.skipped = true;
        outcome.skip_reason = "insufficient messages";
        return outcome;
    }

    CandidateSet candidates =
        collect_candidates(rel.threads, options.languages, resources.candidates);
    if (candidates.words.empty()) {
        outcome.skipped = true;
        outcome.skip_reason = "no candidate words";
        return outcome;
    }

    IdfTable idf = build_idf(reference, options.languages);

    std::vector<ScoredWord> scored;
    if (options.method == "tfidf") {
        scored = score_tfidf(candidates, idf);
    } else if (options.method == "textrank") {
        scored = score_textrank(candidates, /*directed=*/false, options.pagerank);
    } else if (options.method == "textrank-directed") {
        scored = score_textrank(candidates, /*directed=*/true, options.pagerank);
    } else {
        throw std::invalid_argument("unknown method: " + options.method);
    }
    scored = idf_discount(std::move(scored), idf, options.discount);

    std::vector<Keyphrase> phrases = enumerate_sequences(candidates);
    for (Keyphrase& p : phrases) score_phrase(p, scored);

    outcome.set = select_top_k(scored, phrases, options.k, options.threshold);
    outcome.set.relationship = {rel.a, rel.b};
    outcome.set.method = options.method;
    resolve_displays(outcome.set, candidates, phrases);
    return outcome;
}

nlohmann::json keyword_set_json(const KeywordSet& set, bool hash_keywords) {
    nlohmann::json j;
    j["relationship"] = {set.relationship.first, set.relationship.second};
    j["method"] = set.method;
    j["k"] = set.k;
    nlohmann::json entries = nlohmann::json::array();
    for (const KeywordEntry& e : set.entries) {
        nlohmann::json je;
        je["display"] = hash_keywords ? hash_keyword(e.display).digest : e.display;
        je["score"] = e.score;
        je["pos_pattern"] = pos_pattern(e.tags());
        entries.push_back(std::move(je));
    }
    j["keywords"] = std::move(entries);
    return j;
}

std::string relationship_slug(const Relationship& rel) {
    auto sanitize = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '-' || c == '.';
            out.push_back(safe ? c : '_');
        }
        return out;
    };
    return sanitize(rel.a) + "__" + sanitize(rel.b);
}

} // namespace relkw
