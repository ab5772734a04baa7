#include "relkw/network.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace relkw;

namespace {

Relationship rel(std::string a, std::string b, std::size_t count_ab, std::size_t count_ba,
                 std::size_t words_ab = 0, std::size_t words_ba = 0) {
    Relationship r;
    r.a = std::move(a);
    r.b = std::move(b);
    r.messages_ab = count_ab;
    r.messages_ba = count_ba;
    r.message_count = count_ab + count_ba;
    r.word_count_ab = words_ab;
    r.word_count_ba = words_ba;
    return r;
}

} // namespace

TEST_CASE("build_network applies the interaction threshold") {
    std::vector<Relationship> rels = {rel("u", "v", 2, 1), rel("u", "w", 4, 3)};

    SUBCASE("threshold 1 keeps every relationship") {
        auto net = build_network(rels, 1);
        CHECK(net.edges.size() == 2);
        CHECK(net.vertices.size() == 3);
    }
    SUBCASE("threshold 5 keeps only the heavier edge") {
        auto net = build_network(rels, 5);
        REQUIRE(net.edges.size() == 1);
        CHECK(net.edges[0].b == "w");
    }
    SUBCASE("raising the threshold never adds edges") {
        std::size_t last = build_network(rels, 1).edges.size();
        for (std::size_t t = 2; t <= 10; ++t) {
            std::size_t cur = build_network(rels, t).edges.size();
            CHECK(cur <= last);
            last = cur;
        }
    }
    SUBCASE("edge set equals a brute-force filter") {
        std::vector<Relationship> many;
        std::mt19937 rng(5);
        for (int i = 0; i < 6; ++i)
            many.push_back(rel("u", "p" + std::to_string(i), rng() % 5, rng() % 5));
        auto net = build_network(many, 4);
        std::size_t expected = 0;
        for (const auto& r : many)
            if (r.message_count >= 4) ++expected;
        CHECK(net.edges.size() == expected);
    }
}

TEST_CASE("edge vectors hold score over k components") {
    KeywordSet set;
    set.k = 20;
    set.relationship = {"u", "v"};
    KeywordEntry e;
    e.keys = {WordKey{"ski", PosTag::noun}};
    e.score = 0.8;
    set.entries.push_back(e);

    EdgeVector v = edge_vector(set);
    CHECK(v.components.size() == 1);
    CHECK(v.components.begin()->second == doctest::Approx(0.04).epsilon(1e-12));

    SUBCASE("k = 1 keeps the raw score") {
        set.k = 1;
        EdgeVector unit = edge_vector(set);
        CHECK(unit.components.begin()->second == doctest::Approx(0.8).epsilon(1e-12));
    }
    SUBCASE("disjoint vectors have zero dot product") {
        KeywordSet other;
        other.k = 20;
        KeywordEntry oe;
        oe.keys = {WordKey{"surf", PosTag::noun}};
        oe.score = 0.5;
        other.entries.push_back(oe);
        CHECK(edge_vector(set).dot(edge_vector(other)) == 0.0);
    }
    SUBCASE("L1 norm equals the score sum over k when all slots are used") {
        KeywordSet full;
        full.k = 4;
        double score_sum = 0.0;
        for (int i = 0; i < 4; ++i) {
            KeywordEntry fe;
            fe.keys = {WordKey{"w" + std::to_string(i), PosTag::noun}};
            fe.score = 0.1 * (i + 1);
            score_sum += fe.score;
            full.entries.push_back(fe);
        }
        CHECK(edge_vector(full).l1_norm() ==
              doctest::Approx(score_sum / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("reciprocity correlations") {
    SUBCASE("perfect reciprocity gives rho = 1") {
        std::vector<Relationship> rels = {rel("u", "v", 3, 3, 30, 30),
                                          rel("u", "w", 7, 7, 70, 70),
                                          rel("a", "u", 5, 5, 50, 50)};
        auto stats = reciprocity_stats(rels, "u");
        REQUIRE(stats.rho_messages.has_value());
        CHECK(*stats.rho_messages == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(*stats.rho_words == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("anti-correlated counts give rho = -1") {
        std::vector<Relationship> rels = {rel("u", "v", 1, 9, 10, 90),
                                          rel("u", "w", 5, 5, 50, 50),
                                          rel("u", "x", 9, 1, 90, 10)};
        auto stats = reciprocity_stats(rels, "u");
        REQUIRE(stats.rho_messages.has_value());
        CHECK(*stats.rho_messages == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("zero variance is an undefined-correlation signal") {
        std::vector<Relationship> rels = {rel("u", "v", 3, 1), rel("u", "w", 3, 9)};
        auto stats = reciprocity_stats(rels, "u");
        CHECK_FALSE(stats.rho_messages.has_value());
    }
    SUBCASE("matches the textbook formula on a random fixture") {
        std::mt19937 rng(77);
        std::vector<Relationship> rels;
        std::vector<double> sent, received;
        for (int i = 0; i < 12; ++i) {
            std::size_t s = 1 + rng() % 20, r = 1 + rng() % 20;
            rels.push_back(rel("u", "p" + std::to_string(i), s, r));
            sent.push_back(static_cast<double>(s));
            received.push_back(static_cast<double>(r));
        }
        auto stats = reciprocity_stats(rels, "u");
        REQUIRE(stats.rho_messages.has_value());
        CHECK(*stats.rho_messages ==
              doctest::Approx(oracles::pearson_direct(sent, received)).epsilon(1e-12));
        CHECK(*stats.rho_messages >= -1.0);
        CHECK(*stats.rho_messages <= 1.0);
    }
}
