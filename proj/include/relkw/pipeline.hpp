#pragma once

#include "relkw/candidates.hpp"
#include "relkw/corpus.hpp"
#include "relkw/langid.hpp"
#include "relkw/network.hpp"
#include "relkw/phrases.hpp"
#include "relkw/scoring.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace relkw {

inline const std::vector<std::string> kMethods = {"textrank", "textrank-directed", "tfidf"};

struct ExtractOptions {
    std::string method = "textrank";
    std::size_t k = 20;
    std::optional<double> threshold; // mutually exclusive with k at the CLI
    std::vector<Lang> languages = {Lang::en, Lang::de};
    std::size_t min_messages = 5;
    bool hash_keywords = false;
    std::uint64_t seed = 7;
    DiscountConfig discount;
    PagerankOptions pagerank;
};

struct ExtractResources {
    std::vector<LanguageProfile> profiles;
    CandidateConfig candidates;
};

// Conventional layout of the bundled resource files under one directory.
struct DataPaths {
    std::string stopwords_en, stopwords_de, stopwords_extra;
    std::string lexicon_en, lexicon_de;
    std::string langid_train_en, langid_train_de;

    static DataPaths under(const std::string& dir);
};

// Loads stopwords, the tagger lexicons and freshly trained language
// profiles from the bundled data files.
ExtractResources load_resources(const DataPaths& paths);

struct ExtractOutcome {
    bool skipped = false;
    std::string skip_reason;
    KeywordSet set;
};

// Runs the full per-relationship pipeline for one scoring method.
ExtractOutcome extract_keywords(const Relationship& rel,
                                const std::vector<Thread>& reference,
                                const ExtractOptions& options,
                                const ExtractResources& resources);

// Number of the relationship's messages in an enabled language.
std::size_t usable_message_count(const Relationship& rel,
                                 const std::vector<Lang>& languages);

// JSON form of a keyword set; hashing replaces each display with its digest.
nlohmann::json keyword_set_json(const KeywordSet& set, bool hash_keywords);

// Stable file stem for a relationship ("alice__bob"), safe for filesystems.
std::string relationship_slug(const Relationship& rel);

} // namespace relkw
