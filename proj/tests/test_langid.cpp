#include "relkw/langid.hpp"

#include "relkw/corpus.hpp"

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

using namespace relkw;

namespace {

std::unordered_set<std::string> en_stopwords() {
    return {"the", "and", "of", "a", "to", "in", "is", "it", "we", "was", "for", "on"};
}

std::unordered_set<std::string> de_stopwords() {
    return {"der", "die", "das", "und", "ist", "ein", "eine", "wir", "mit", "auf", "im", "zu"};
}

std::vector<std::string> en_corpus() {
    return {
        "the house at the end of the road is old and quiet",
        "we went to the market in the morning and it was busy",
        "the weather is nice and the garden is full of flowers",
        "it is a long way to the station and we walk in the rain",
    };
}

std::vector<std::string> de_corpus() {
    return {
        "das haus am ende der straße ist alt und ruhig",
        "wir gehen am morgen auf den markt und es ist voll",
        "das wetter ist schön und der garten ist voller blumen",
        "es ist ein langer weg zum bahnhof und wir laufen im regen",
    };
}

} // namespace

TEST_CASE("trigram training matches a hand-counted histogram") {
    // padded "aaa" yields three grams: ^aa, aaa, aa$
    auto profile = train_profile({"aaa"}, Lang::en, {});
    CHECK(profile.trigram_freqs.size() == 3);
    CHECK(profile.trigram_freqs.at("aaa") == doctest::Approx(1.0 / 3.0));

    // two documents, counted by hand:
    // "ab cd" -> ^ab, "ab ", "b c", " cd", cd$   "ab" -> ^ab, ab$
    auto two = train_profile({"ab cd", "ab"}, Lang::en, {});
    CHECK(two.trigram_freqs.at("ab ") == doctest::Approx(1.0 / 7.0));
    CHECK(two.trigram_freqs.at("b c") == doctest::Approx(1.0 / 7.0));
    double sum = 0.0;
    for (const auto& [gram, f] : two.trigram_freqs) sum += f;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("identical corpora give identical profiles") {
    auto a = train_profile(en_corpus(), Lang::en, en_stopwords());
    auto b = train_profile(en_corpus(), Lang::en, en_stopwords());
    CHECK(a.trigram_freqs == b.trigram_freqs);
}

TEST_CASE("scaling all counts leaves classification unchanged") {
    auto once = train_profile(en_corpus(), Lang::en, en_stopwords());
    auto doubled_corpus = en_corpus();
    for (const auto& doc : en_corpus()) doubled_corpus.push_back(doc);
    auto twice = train_profile(doubled_corpus, Lang::en, en_stopwords());
    for (const auto& [gram, f] : once.trigram_freqs)
        CHECK(twice.trigram_freqs.at(gram) == doctest::Approx(f).epsilon(1e-12));
}

TEST_CASE("training on an empty corpus fails") {
    CHECK_THROWS_AS(train_profile({}, Lang::en, {}), std::invalid_argument);
}

TEST_CASE("classify applies the stopword-ratio gate") {
    std::vector<LanguageProfile> profiles = {
        train_profile(en_corpus(), Lang::en, en_stopwords()),
        train_profile(de_corpus(), Lang::de, de_stopwords()),
    };

    // dense stopwords: clearly English
    CHECK(classify_text("the garden and the house in the rain on the road", profiles) ==
          Lang::en);
    CHECK(classify_text("das wetter ist schön und wir gehen auf den markt", profiles) ==
          Lang::de);

    // eight words without a single stopword hit: ratio is unbounded
    CHECK(classify_text("zebra quartz joker vivid lemon crisp onyx pixel", profiles) ==
          Lang::unknown);

    // empty body carries no evidence
    CHECK(classify_text("", profiles) == Lang::unknown);

    // stopword-poor text is rejected even if trigrams look familiar
    CHECK(classify_text("garden road station market morning weather flowers walk rain",
                        profiles) == Lang::unknown);
}

TEST_CASE("classification is deterministic") {
    std::vector<LanguageProfile> profiles = {
        train_profile(en_corpus(), Lang::en, en_stopwords()),
        train_profile(de_corpus(), Lang::de, de_stopwords()),
    };
    std::string text = "the weather is nice and we walk to the station";
    Lang first = classify_text(text, profiles);
    for (int i = 0; i < 10; ++i) CHECK(classify_text(text, profiles) == first);
}

TEST_CASE("profiles round-trip through their JSON file") {
    auto profile = train_profile(en_corpus(), Lang::en, en_stopwords());
    std::string path = "/tmp/relkw_tests_profile.json";
    profile.save(path);
    auto loaded = LanguageProfile::load(path);
    CHECK(loaded.lang == Lang::en);
    CHECK(loaded.stopwords == profile.stopwords);
    REQUIRE(loaded.trigram_freqs.size() == profile.trigram_freqs.size());
    for (const auto& [gram, f] : profile.trigram_freqs)
        CHECK(loaded.trigram_freqs.at(gram) == doctest::Approx(f).epsilon(1e-12));
}

#ifdef RELKW_DATA_DIR
TEST_CASE("bundled training sentences classify to their own language") {
    auto en_lines = load_lines(std::string(RELKW_DATA_DIR) + "/langid/train_en.txt");
    auto de_lines = load_lines(std::string(RELKW_DATA_DIR) + "/langid/train_de.txt");
    REQUIRE(en_lines.size() >= 200);
    REQUIRE(de_lines.size() >= 200);

    // profile stopwords come from the bundled stopword files
    auto load_stop = [](const std::string& path) {
        std::unordered_set<std::string> out;
        for (const auto& line : load_lines(path))
            if (line.rfind("re:", 0) != 0 && line[0] != '#') out.insert(line);
        return out;
    };
    std::vector<LanguageProfile> profiles = {
        train_profile(en_lines, Lang::en,
                      load_stop(std::string(RELKW_DATA_DIR) + "/stopwords/en.txt")),
        train_profile(de_lines, Lang::de,
                      load_stop(std::string(RELKW_DATA_DIR) + "/stopwords/de.txt")),
    };

    auto accuracy = [&](const std::vector<std::string>& lines, Lang expected) {
        std::size_t eligible = 0, correct = 0;
        for (const auto& line : lines) {
            if (count_words(line) < 20) continue;
            ++eligible;
            if (classify_text(line, profiles) == expected) ++correct;
        }
        REQUIRE(eligible > 0);
        return static_cast<double>(correct) / static_cast<double>(eligible);
    };
    CHECK(accuracy(en_lines, Lang::en) >= 0.95);
    CHECK(accuracy(de_lines, Lang::de) >= 0.95);
}
#endif
