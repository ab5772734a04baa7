#pragma once

#include "relkw/candidates.hpp"
#include "relkw/corpus.hpp"
#include "relkw/textproc.hpp"

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace relkw {

// D and the per-message document frequencies of the reference corpus.
// df is keyed by stem alone: PoS tags are ignored for document frequency.
struct IdfTable {
    std::size_t thread_count = 0;                // D: threads in the reference corpus
    std::unordered_map<std::string, std::size_t> df; // stem -> messages containing it

    std::size_t df_of(const std::string& stem) const {
        auto it = df.find(stem);
        return it == df.end() ? 0 : it->second;
    }

    // log(D / (1 + df)). An empty reference corpus carries no information,
    // so D == 0 yields 0 for every word.
    double idf(const std::string& stem) const;
};

// Counts every word token of every reference message (stemmed with the
// message's language); messages outside `languages` are skipped.
IdfTable build_idf(const std::vector<Thread>& reference,
                   const std::vector<Lang>& languages);

struct ScoredWord {
    WordKey key;
    double score = 0.0;
    bool idf_passed = true; // false once the discount filter lowered the score
};

// Deterministic ranking: score descending, ties by stem then PoS.
bool scored_before(const ScoredWord& a, const ScoredWord& b);

// score = tf * idf with tf the raw occurrence count in the relationship.
std::vector<ScoredWord> score_tfidf(const CandidateSet& candidates, const IdfTable& idf);

// Unweighted word graph: an edge joins two candidate tokens adjacent in the
// per-thread candidate sequence (window size 2 after filtering), which spans
// message boundaries but never thread boundaries.
struct CooccurrenceGraph {
    bool directed = false;
    std::vector<WordKey> vertices;                    // sorted; index is vertex id
    std::set<std::pair<std::size_t, std::size_t>> edges; // canonical (min,max) when undirected

    std::size_t index_of(const WordKey& key) const;   // npos when absent
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

CooccurrenceGraph build_graph(const CandidateSet& candidates, bool directed);

struct PagerankOptions {
    double damping = 0.85;
    double tolerance = 1e-5; // max per-vertex change
    int max_iterations = 100;
};

// Probability-normalized PageRank with uniform teleport and uniform dangling
// redistribution; scores sum to 1. Throws on an empty graph.
std::map<WordKey, double> pagerank(const CooccurrenceGraph& graph,
                                   const PagerankOptions& options = {});

std::vector<ScoredWord> score_textrank(const CandidateSet& candidates, bool directed,
                                       const PagerankOptions& options = {});

struct DiscountConfig {
    double ratio_threshold = 3.0; // df/len strictly above this is discounted
    double factor = 0.25;
};

// Applies the document-frequency discount to every scoring method's output:
// words whose df/length ratio exceeds the threshold lose (1 - factor) of a
// positive score and their idf_passed flag. Never raises a score.
std::vector<ScoredWord> idf_discount(std::vector<ScoredWord> scored, const IdfTable& idf,
                                     const DiscountConfig& config = {});

} // namespace relkw
