#include "relkw/scoring.hpp"

#include "relkw/stem.hpp"
#include "relkw/utf8.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace relkw {

double IdfTable::idf(const std::string& stem) const {
    if (thread_count == 0) return 0.0;
    return std::log(static_cast<double>(thread_count) /
                    (1.0 + static_cast<double>(df_of(stem))));
}

IdfTable build_idf(const std::vector<Thread>& reference,
                   const std::vector<Lang>& languages) {
    IdfTable table;
    table.thread_count = reference.size();
    for (const Thread& thread : reference) {
        for (const Message& msg : thread.messages) {
            if (std::find(languages.begin(), languages.end(), msg.lang) == languages.end())
                continue;
            std::unordered_set<std::string> seen;
            for (const Token& t : tokenize(msg.body)) {
                if (!t.is_word) continue;
                seen.insert(stem(t.surface, msg.lang));
            }
            for (const std::string& s : seen) table.df[s] += 1;
        }
    }
    return table;
}

bool scored_before(const ScoredWord& a, const ScoredWord& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.key < b.key;
}

std::vector<ScoredWord> score_tfidf(const CandidateSet& candidates, const IdfTable& idf) {
    std::vector<ScoredWord> out;
    out.reserve(candidates.words.size());
    for (const CandidateWord& w : candidates.words) {
        double tf = static_cast<double>(w.occurrences.size());
        out.push_back(ScoredWord{w.key, tf * idf.idf(w.key.stem), true});
    }
    std::sort(out.begin(), out.end(), scored_before);
    return out;
}

std::size_t CooccurrenceGraph::index_of(const WordKey& key) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), key);
    if (it != vertices.end() && *it == key) return static_cast<std::size_t>(it - vertices.begin());
    return npos;
}

CooccurrenceGraph build_graph(const CandidateSet& candidates, bool directed) {
    CooccurrenceGraph graph;
    graph.directed = directed;
    graph.vertices.reserve(candidates.words.size());
    for (const CandidateWord& w : candidates.words) graph.vertices.push_back(w.key);
    // candidates.words is sorted by key already

    for (const ThreadStream& stream : candidates.streams) {
        for (std::size_t i = 0; i + 1 < stream.tokens.size(); ++i) {
            std::size_t u = graph.index_of(stream.tokens[i].key);
            std::size_t v = graph.index_of(stream.tokens[i + 1].key);
            if (u == v) continue; // no self-loops
            if (directed) {
                graph.edges.emplace(u, v); // earlier -> later
            } else {
                graph.edges.emplace(std::min(u, v), std::max(u, v));
            }
        }
    }
    return graph;
}

std::map<WordKey, double> pagerank(const CooccurrenceGraph& graph,
                                   const PagerankOptions& options) {
    const std::size_t n = graph.vertices.size();
    if (n == 0) throw std::invalid_argument("pagerank: empty graph");

    // adjacency: for each vertex the list of predecessors, and out-degrees
    std::vector<std::vector<std::size_t>> in_edges(n);
    std::vector<std::size_t> out_degree(n, 0);
    for (const auto& [u, v] : graph.edges) {
        in_edges[v].push_back(u);
        out_degree[u] += 1;
        if (!graph.directed) {
            in_edges[u].push_back(v);
            out_degree[v] += 1;
        }
    }

    const double d = options.damping;
    const double teleport = (1.0 - d) / static_cast<double>(n);
    std::vector<double> rank(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);

    for (int iter = 0; iter < options.max_iterations; ++iter) {
        double dangling = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            if (out_degree[v] == 0) dangling += rank[v];
        double dangling_share = d * dangling / static_cast<double>(n);

        double max_change = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            double sum = 0.0;
            for (std::size_t u : in_edges[v])
                sum += rank[u] / static_cast<double>(out_degree[u]);
            next[v] = teleport + dangling_share + d * sum;
            max_change = std::max(max_change, std::abs(next[v] - rank[v]));
        }
        rank.swap(next);
        if (max_change < options.tolerance) break;
    }

    std::map<WordKey, double> out;
    for (std::size_t v = 0; v < n; ++v) out[graph.vertices[v]] = rank[v];
    return out;
}

std::vector<ScoredWord> score_textrank(const CandidateSet& candidates, bool directed,
                                       const PagerankOptions& options) {
    std::vector<ScoredWord> out;
    if (candidates.words.empty()) return out;
    auto ranks = pagerank(build_graph(candidates, directed), options);
    out.reserve(ranks.size());
    for (const auto& [key, score] : ranks) out.push_back(ScoredWord{key, score, true});
    std::sort(out.begin(), out.end(), scored_before);
    return out;
}

std::vector<ScoredWord> idf_discount(std::vector<ScoredWord> scored, const IdfTable& idf,
                                     const DiscountConfig& config) {
    for (ScoredWord& w : scored) {
        std::size_t len = utf8::length(w.key.stem);
        if (len == 0) continue;
        double ratio = static_cast<double>(idf.df_of(w.key.stem)) / static_cast<double>(len);
        if (ratio > config.ratio_threshold) {
            if (w.score > 0.0) w.score *= config.factor;
            w.idf_passed = false;
        }
    }
    std::sort(scored.begin(), scored.end(), scored_before);
    return scored;
}

} // namespace relkw
