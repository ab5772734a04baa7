#include "relkw/langid.hpp"

#include "relkw/textproc.hpp"
#include "relkw/utf8.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace relkw {

namespace {

constexpr char32_t kBoundary = U'';
constexpr double kStopwordRatioThreshold = 4.0;

std::u32string normalized(std::string_view text) {
    std::u32string lowered;
    lowered.reserve(text.size() + 2);
    lowered.push_back(kBoundary);
    bool in_space = false;
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = utf8::to_lower(utf8::decode(text, i));
        if (utf8::is_space(cp)) {
            in_space = true;
            continue;
        }
        if (in_space && lowered.size() > 1) lowered.push_back(U' ');
        in_space = false;
        lowered.push_back(cp);
    }
    lowered.push_back(kBoundary);
    return lowered;
}

} // namespace

std::map<std::string, std::size_t> trigram_counts(std::string_view text) {
    std::u32string padded = normalized(text);
    std::map<std::string, std::size_t> counts;
    if (padded.size() < 3) return counts; // only boundaries: empty text
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
        counts[utf8::encode_all(std::u32string_view(padded).substr(i, 3))] += 1;
    }
    return counts;
}

LanguageProfile train_profile(const std::vector<std::string>& corpus, Lang lang,
                              std::unordered_set<std::string> stopwords) {
    if (corpus.empty()) throw std::invalid_argument("train_profile: empty corpus");

    std::map<std::string, std::size_t> totals;
    std::size_t grand_total = 0;
    for (const std::string& doc : corpus) {
        for (const auto& [gram, count] : trigram_counts(doc)) {
            totals[gram] += count;
            grand_total += count;
        }
    }
    if (grand_total == 0) throw std::invalid_argument("train_profile: corpus has no text");

    LanguageProfile profile;
    profile.lang = lang;
    profile.stopwords = std::move(stopwords);
    for (const auto& [gram, count] : totals)
        profile.trigram_freqs[gram] = static_cast<double>(count) / static_cast<double>(grand_total);
    return profile;
}

namespace {

double cosine_similarity(const std::map<std::string, double>& message_freqs,
                         const std::map<std::string, double>& profile_freqs) {
    double dot = 0.0, norm_m = 0.0, norm_p = 0.0;
    for (const auto& [gram, f] : message_freqs) {
        norm_m += f * f;
        if (auto it = profile_freqs.find(gram); it != profile_freqs.end()) dot += f * it->second;
    }
    for (const auto& [gram, f] : profile_freqs) norm_p += f * f;
    if (dot == 0.0 || norm_m == 0.0 || norm_p == 0.0) return 0.0;
    return dot / (std::sqrt(norm_m) * std::sqrt(norm_p));
}

} // namespace

Lang classify_text(std::string_view text, const std::vector<LanguageProfile>& profiles) {
    auto counts = trigram_counts(text);
    if (counts.empty()) return Lang::unknown;
    std::size_t total = 0;
    for (const auto& [gram, c] : counts) total += c;
    std::map<std::string, double> freqs;
    for (const auto& [gram, c] : counts)
        freqs[gram] = static_cast<double>(c) / static_cast<double>(total);

    const LanguageProfile* best = nullptr;
    double best_sim = 0.0;
    for (const LanguageProfile& p : profiles) {
        double sim = cosine_similarity(freqs, p.trigram_freqs);
        if (!best || sim > best_sim) {
            best = &p;
            best_sim = sim;
        }
    }
    if (!best || best_sim <= 0.0) return Lang::unknown;

    // word/stopword ratio gate for the winning language
    std::size_t words = 0, hits = 0;
    for (const Token& t : tokenize(text)) {
        if (!t.is_word) continue;
        ++words;
        if (best->stopwords.count(utf8::to_lower_copy(t.surface))) ++hits;
    }
    if (words == 0 || hits == 0) return Lang::unknown;
    double ratio = static_cast<double>(words) / static_cast<double>(hits);
    return ratio < kStopwordRatioThreshold ? best->lang : Lang::unknown;
}

void classify_messages(std::vector<Message>& messages,
                       const std::vector<LanguageProfile>& profiles) {
    for (Message& m : messages) m.lang = classify_text(m.body, profiles);
}

void LanguageProfile::save(const std::string& path) const {
    nlohmann::json j;
    j["lang"] = relkw::to_string(lang);
    j["trigrams"] = trigram_freqs;
    std::vector<std::string> words(stopwords.begin(), stopwords.end());
    std::sort(words.begin(), words.end());
    j["stopwords"] = words;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write profile: " + path);
    out << j.dump(2) << '\n';
}

LanguageProfile LanguageProfile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    LanguageProfile p;
    auto lang = lang_from_string(j.at("lang").get<std::string>());
    if (!lang) throw std::runtime_error("profile has unknown language tag");
    p.lang = *lang;
    p.trigram_freqs = j.at("trigrams").get<std::map<std::string, double>>();
    for (const auto& w : j.at("stopwords")) p.stopwords.insert(w.get<std::string>());
    return p;
}

std::vector<std::string> load_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

} // namespace relkw
