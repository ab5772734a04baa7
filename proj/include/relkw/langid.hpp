#pragma once

#include "relkw/corpus.hpp"
#include "relkw/lang.hpp"

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

namespace relkw {

// Character 3-gram profile over lowercased, boundary-padded text, plus the
// language's stopword list for the word/stopword ratio gate.
struct LanguageProfile {
    Lang lang = Lang::unknown;
    std::map<std::string, double> trigram_freqs; // relative frequencies, sum to 1
    std::unordered_set<std::string> stopwords;   // lowercase

    void save(const std::string& path) const;
    static LanguageProfile load(const std::string& path);
};

// Counts trigrams over the padded, lowercased text. Whitespace runs collapse
// to a single space so formatting does not shift the distribution.
std::map<std::string, std::size_t> trigram_counts(std::string_view text);

// Throws on an empty corpus.
LanguageProfile train_profile(const std::vector<std::string>& corpus, Lang lang,
                              std::unordered_set<std::string> stopwords);

// Cosine similarity of the argmax profile decides the language; the result
// is only accepted if the message's word/stopword ratio for that language is
// below 4 (zero stopword hits always yield Lang::unknown).
Lang classify_text(std::string_view text, const std::vector<LanguageProfile>& profiles);

inline Lang classify(const Message& message, const std::vector<LanguageProfile>& profiles) {
    return classify_text(message.body, profiles);
}

// Sets message.lang for every message.
void classify_messages(std::vector<Message>& messages,
                       const std::vector<LanguageProfile>& profiles);

// One non-empty line per document.
std::vector<std::string> load_lines(const std::string& path);

} // namespace relkw
