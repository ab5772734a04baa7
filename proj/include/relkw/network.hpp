#pragma once

#include "relkw/corpus.hpp"
#include "relkw/phrases.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace relkw {

// Sparse keyword-space weight of an edge. Dimensions are the key sequences
// of the selected entries (single words have one key); each component is
// the entry's score divided by the keyword budget k.
struct EdgeVector {
    std::map<std::vector<WordKey>, double> components;
    std::size_t k = 0;

    double dot(const EdgeVector& other) const;
    double l1_norm() const;
};

EdgeVector edge_vector(const KeywordSet& set);

struct SocialNetwork {
    struct Edge {
        std::string a, b; // a < b
        std::size_t message_count = 0;
    };

    std::set<std::string> vertices;
    std::vector<Edge> edges;
    std::map<std::pair<std::string, std::string>, EdgeVector> weights;
};

// One edge per relationship whose interaction count meets the threshold.
SocialNetwork build_network(const std::vector<Relationship>& relationships,
                            std::size_t min_messages);

struct ReciprocityStats {
    std::optional<double> rho_messages; // sent vs. received message counts
    std::optional<double> rho_words;    // sent vs. received word counts
};

// Pearson correlation of the focal actor's sent vs. received counts across
// relationships; nullopt components signal undefined correlation (fewer than
// two points or zero variance).
ReciprocityStats reciprocity_stats(const std::vector<Relationship>& relationships,
                                   const std::string& focal);

} // namespace relkw
