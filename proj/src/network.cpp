#include "relkw/network.hpp"

#include "relkw/analytics.hpp"

#include <cmath>

namespace relkw {

double EdgeVector::dot(const EdgeVector& other) const {
    double sum = 0.0;
    for (const auto& [keys, weight] : components) {
        if (auto it = other.components.find(keys); it != other.components.end())
            sum += weight * it->second;
    }
    return sum;
}

double EdgeVector::l1_norm() const {
    double sum = 0.0;
    for (const auto& [keys, weight] : components) sum += std::abs(weight);
    return sum;
}

EdgeVector edge_vector(const KeywordSet& set) {
    EdgeVector v;
    v.k = set.k;
    for (const KeywordEntry& entry : set.entries)
        v.components[entry.keys] = entry.score / static_cast<double>(set.k);
    return v;
}

SocialNetwork build_network(const std::vector<Relationship>& relationships,
                            std::size_t min_messages) {
    SocialNetwork net;
    for (const Relationship& rel : relationships) {
        if (rel.message_count < min_messages) continue;
        net.vertices.insert(rel.a);
        net.vertices.insert(rel.b);
        net.edges.push_back({rel.a, rel.b, rel.message_count});
    }
    return net;
}

ReciprocityStats reciprocity_stats(const std::vector<Relationship>& relationships,
                                   const std::string& focal) {
    std::vector<double> sent_msgs, recv_msgs, sent_words, recv_words;
    for (const Relationship& rel : relationships) {
        bool focal_is_a = rel.a == focal;
        sent_msgs.push_back(static_cast<double>(focal_is_a ? rel.messages_ab : rel.messages_ba));
        recv_msgs.push_back(static_cast<double>(focal_is_a ? rel.messages_ba : rel.messages_ab));
        sent_words.push_back(
            static_cast<double>(focal_is_a ? rel.word_count_ab : rel.word_count_ba));
        recv_words.push_back(
            static_cast<double>(focal_is_a ? rel.word_count_ba : rel.word_count_ab));
    }
    ReciprocityStats stats;
    stats.rho_messages = pearson(sent_msgs, recv_msgs);
    stats.rho_words = pearson(sent_words, recv_words);
    return stats;
}

} // namespace relkw
