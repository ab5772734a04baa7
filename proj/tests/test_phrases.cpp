#include "relkw/phrases.hpp"

#include "relkw/levenshtein.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace relkw;

namespace {

WordKey nkey(const std::string& stem) { return WordKey{stem, PosTag::noun}; }

// one thread, one message, tokens at the given original positions
CandidateSet stream_fixture(const std::vector<std::pair<std::string, std::size_t>>& tokens,
                            const std::string& message_id = "m1") {
    CandidateSet set;
    ThreadStream stream;
    stream.thread_id = "t1";
    std::map<WordKey, std::vector<Occurrence>> grouped;
    for (const auto& [stem, pos] : tokens) {
        WordKey key = nkey(stem);
        stream.tokens.push_back(CandidateToken{key, message_id, pos, 0, stem});
        grouped[key].push_back(Occurrence{"t1", message_id, pos, stem});
    }
    set.streams.push_back(std::move(stream));
    for (auto& [key, occ] : grouped) set.words.push_back(CandidateWord{key, occ});
    return set;
}

const Keyphrase* find_phrase(const std::vector<Keyphrase>& phrases,
                             const std::vector<std::string>& stems) {
    std::vector<WordKey> keys;
    for (const auto& s : stems) keys.push_back(nkey(s));
    for (const Keyphrase& p : phrases)
        if (p.keys == keys) return &p;
    return nullptr;
}

} // namespace

TEST_CASE("enumerate_sequences compiles runs and subsequences") {
    // "new york trip" all adjacent candidates
    auto set = stream_fixture({{"new", 0}, {"york", 1}, {"trip", 2}});
    auto phrases = enumerate_sequences(set);
    CHECK(phrases.size() == 6); // 3 singles + [new,york] + [york,trip] + [new,york,trip]

    const Keyphrase* full = find_phrase(phrases, {"new", "york", "trip"});
    REQUIRE(full != nullptr);
    CHECK(full->maximal);
    const Keyphrase* pair = find_phrase(phrases, {"new", "york"});
    REQUIRE(pair != nullptr);
    CHECK_FALSE(pair->maximal); // occurs inside the longer sequence
    const Keyphrase* single = find_phrase(phrases, {"york"});
    REQUIRE(single != nullptr);
    CHECK_FALSE(single->maximal);
}

TEST_CASE("isolated candidate forms a single maximal length-1 sequence") {
    auto set = stream_fixture({{"solo", 5}});
    auto phrases = enumerate_sequences(set);
    REQUIRE(phrases.size() == 1);
    CHECK(phrases[0].keys.size() == 1);
    CHECK(phrases[0].maximal);
}

TEST_CASE("a non-candidate gap breaks multi-word sequences") {
    // positions 0 and 2: something non-candidate sat at position 1
    auto set = stream_fixture({{"alpha", 0}, {"beta", 2}});
    auto phrases = enumerate_sequences(set);
    CHECK(phrases.size() == 2);
    CHECK(find_phrase(phrases, {"alpha", "beta"}) == nullptr);
}

TEST_CASE("runs never span message boundaries") {
    CandidateSet set;
    ThreadStream stream;
    stream.thread_id = "t1";
    stream.tokens.push_back(CandidateToken{nkey("one"), "m1", 3, 0, "one"});
    stream.tokens.push_back(CandidateToken{nkey("two"), "m2", 4, 1, "two"});
    set.streams.push_back(stream);
    set.words.push_back(CandidateWord{nkey("one"), {Occurrence{"t1", "m1", 3, "one"}}});
    set.words.push_back(CandidateWord{nkey("two"), {Occurrence{"t1", "m2", 4, "two"}}});
    auto phrases = enumerate_sequences(set);
    CHECK(find_phrase(phrases, {"one", "two"}) == nullptr);
}

TEST_CASE("score_phrase is the harmonic mean over qualified constituents") {
    std::vector<ScoredWord> scored = {
        {nkey("a"), 0.5, true}, {nkey("b"), 0.25, true}, {nkey("c"), 0.5, false}};

    Keyphrase both;
    both.keys = {nkey("a"), nkey("b")};
    score_phrase(both, scored);
    CHECK(both.qualified_count == 2);
    CHECK(both.score == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    Keyphrase mixed;
    mixed.keys = {nkey("a"), nkey("c")};
    score_phrase(mixed, scored);
    CHECK(mixed.qualified_count == 1);
    CHECK(mixed.score == doctest::Approx(0.5).epsilon(1e-12));

    Keyphrase none;
    none.keys = {nkey("c")};
    score_phrase(none, scored);
    CHECK(none.qualified_count == 0);
    CHECK(none.score == 0.0);
}

TEST_CASE("appending a below-mean constituent strictly lowers the score") {
    std::vector<ScoredWord> scored = {
        {nkey("a"), 0.5, true}, {nkey("b"), 0.25, true}, {nkey("low"), 0.1, true}};
    Keyphrase two;
    two.keys = {nkey("a"), nkey("b")};
    score_phrase(two, scored);
    Keyphrase three;
    three.keys = {nkey("a"), nkey("b"), nkey("low")};
    score_phrase(three, scored);
    CHECK(three.score < two.score);
}

TEST_CASE("harmonic mean stays within the constituent score range") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dist(0.01, 10.0);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 2 + rng() % 4;
        std::vector<ScoredWord> scored;
        Keyphrase phrase;
        double lo = 1e18, hi = -1e18;
        for (std::size_t i = 0; i < n; ++i) {
            double s = dist(rng);
            lo = std::min(lo, s);
            hi = std::max(hi, s);
            scored.push_back({nkey("w" + std::to_string(i)), s, true});
            phrase.keys.push_back(nkey("w" + std::to_string(i)));
        }
        score_phrase(phrase, scored);
        CHECK(phrase.score >= lo - 1e-12);
        CHECK(phrase.score <= hi + 1e-12);
    }
}

TEST_CASE("select_top_k fills primary before fallback") {
    SUBCASE("sufficient primary pool") {
        std::vector<ScoredWord> words;
        for (int i = 0; i < 25; ++i)
            words.push_back({nkey("w" + std::to_string(i)), 1.0 + i, true});
        auto set = select_top_k(words, {}, 20);
        CHECK(set.entries.size() == 20);
        CHECK(set.entries.front().score == doctest::Approx(25.0));
        for (const auto& e : set.entries) CHECK_FALSE(e.from_fallback);
    }
    SUBCASE("fallback fills the remainder, ranked after primary") {
        std::vector<ScoredWord> words;
        for (int i = 0; i < 5; ++i)
            words.push_back({nkey("w" + std::to_string(i)), 0.1 * (i + 1), true});
        std::vector<Keyphrase> phrases;
        for (int i = 0; i < 10; ++i) {
            Keyphrase p;
            // disjoint stems so nothing is subsumed
            p.keys = {nkey("p" + std::to_string(i) + "x"), nkey("p" + std::to_string(i) + "y")};
            p.score = 5.0 + i; // higher than every word, but still fallback
            p.maximal = false;
            p.qualified_count = 2;
            phrases.push_back(p);
        }
        auto set = select_top_k(words, phrases, 20);
        REQUIRE(set.entries.size() == 15);
        for (int i = 0; i < 5; ++i) CHECK_FALSE(set.entries[i].from_fallback);
        for (int i = 5; i < 15; ++i) CHECK(set.entries[i].from_fallback);
    }
    SUBCASE("selected phrase suppresses its standalone words") {
        std::vector<ScoredWord> words = {{nkey("york"), 0.5, true}, {nkey("new"), 0.3, true}};
        Keyphrase p;
        p.keys = {nkey("new"), nkey("york")};
        p.maximal = true;
        p.qualified_count = 2;
        p.score = 2.0 / (1.0 / 0.5 + 1.0 / 0.3);
        auto set = select_top_k(words, {p}, 2);
        REQUIRE(set.entries.size() == 1);
        CHECK(set.entries[0].keys.size() == 2);
    }
    SUBCASE("threshold drops low entries") {
        std::vector<ScoredWord> words = {{nkey("hi"), 0.9, true}, {nkey("lo"), 0.1, true}};
        auto set = select_top_k(words, {}, 10, 0.5);
        REQUIRE(set.entries.size() == 1);
        CHECK(set.entries[0].keys[0].stem == "hi");
    }
    SUBCASE("no candidates yields the empty-set signal") {
        auto set = select_top_k({}, {}, 20);
        CHECK(set.empty());
    }
    SUBCASE("k must be positive") {
        CHECK_THROWS_AS(select_top_k({}, {}, 0), std::invalid_argument);
    }
}

TEST_CASE("fallback entries never outrank primary entries") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int round = 0; round < 50; ++round) {
        std::vector<ScoredWord> words;
        for (int i = 0; i < 6; ++i)
            words.push_back({nkey("w" + std::to_string(i)), dist(rng), true});
        std::vector<Keyphrase> phrases;
        for (int i = 0; i < 6; ++i) {
            Keyphrase p;
            p.keys = {nkey("a" + std::to_string(i)), nkey("b" + std::to_string(i))};
            p.score = dist(rng) * 3.0;
            p.maximal = i % 2 == 0;
            p.qualified_count = i % 3 == 0 ? 1 : 2;
            phrases.push_back(p);
        }
        auto set = select_top_k(words, phrases, 8);
        bool seen_fallback = false;
        for (const auto& e : set.entries) {
            if (e.from_fallback) seen_fallback = true;
            if (seen_fallback) CHECK(e.from_fallback); // once fallback, always fallback
        }
    }
}

TEST_CASE("levenshtein matches the matrix oracle") {
    CHECK(levenshtein("kitten", "sitting") == 3);
    CHECK(levenshtein("", "") == 0);
    CHECK(levenshtein("abc", "") == 3);
    CHECK(levenshtein("flaw", "lawn") == 2);
    CHECK(levenshtein("Haus", "haus") == 0); // case-insensitive

    std::mt19937 rng(123);
    std::uniform_int_distribution<int> len_dist(0, 12);
    std::uniform_int_distribution<int> ch_dist('a', 'e');
    for (int round = 0; round < 100; ++round) {
        std::string a, b;
        int la = len_dist(rng), lb = len_dist(rng);
        for (int i = 0; i < la; ++i) a.push_back(static_cast<char>(ch_dist(rng)));
        for (int i = 0; i < lb; ++i) b.push_back(static_cast<char>(ch_dist(rng)));
        CHECK(levenshtein(a, b) == oracles::levenshtein_matrix(a, b));
    }
}

TEST_CASE("display_form picks the surface closest to the stem") {
    WordKey key{"hous", PosTag::noun};
    std::vector<Occurrence> occ = {{"t1", "m1", 0, "houses"}, {"t1", "m2", 1, "house"}};
    CHECK(display_form(key, occ) == "house"); // distance 1 beats 2

    std::vector<Occurrence> one = {{"t1", "m1", 0, "Houses"}};
    CHECK(display_form(key, one) == "Houses");

    // ties break lexicographically
    WordKey tie{"run", PosTag::noun};
    std::vector<Occurrence> tied = {{"t1", "m1", 0, "runs"}, {"t1", "m2", 1, "rung"}};
    CHECK(display_form(tie, tied) == "rung");

    CHECK_THROWS_AS(display_form(key, {}), std::invalid_argument);
}

TEST_CASE("display comes from an occurrence that actually happened") {
    auto set = stream_fixture({{"new", 0}, {"york", 1}});
    auto phrases = enumerate_sequences(set);
    for (Keyphrase& p : phrases) {
        std::vector<ScoredWord> scored = {{nkey("new"), 0.4, true}, {nkey("york"), 0.6, true}};
        score_phrase(p, scored);
    }
    std::vector<ScoredWord> scored = {{nkey("new"), 0.4, true}, {nkey("york"), 0.6, true}};
    auto selected = select_top_k(scored, phrases, 5);
    resolve_displays(selected, set, phrases);
    for (const auto& e : selected.entries) CHECK_FALSE(e.display.empty());
    REQUIRE(selected.entries.size() >= 1);
    CHECK(selected.entries[0].display == "new york");
}
