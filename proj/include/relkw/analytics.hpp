#pragma once

#include "relkw/textproc.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relkw {

// One human rating of a keyword set, 0-100, with the identifiers of any
// keywords the rater deleted (plaintext displays or MD5 digests).
struct AssessmentRecord {
    std::string user;
    std::string peer;
    std::string method;
    int rating = 0;
    std::vector<std::string> deleted;
};

struct AssessmentLoadReport {
    std::vector<AssessmentRecord> records;
    std::vector<std::string> diagnostics;
};

AssessmentLoadReport load_assessments(const std::string& path);

struct StatsSummary {
    double mean_per_relationship = 0.0;
    double std_per_relationship = 0.0;
    double mean_per_user = 0.0;
    double std_per_user = 0.0;
    std::size_t relationship_count = 0;
    std::size_t user_count = 0;
};

// Per-relationship statistics over raw ratings; per-user statistics over
// each user's mean rating. Throws on empty input.
StatsSummary summarize(const std::vector<AssessmentRecord>& records);

// Product-moment correlation; nullopt when undefined (zero variance).
// Throws on mismatched or too-short inputs.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

struct LillieforsResult {
    double statistic = 0.0;
    double p_estimate = 0.0;
    bool reject = false;
};

// Kolmogorov-Smirnov distance to a normal with estimated parameters; the
// p-value comes from seeded Monte Carlo replicates of the null statistic.
LillieforsResult lilliefors(std::span<const double> sample, double alpha = 0.05,
                            int replicates = 10000, std::uint64_t seed = 1);

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t degrees_of_freedom = 0;
    double p_value = 0.0;
    bool reject = false;
};

// Goodness of fit against a fitted normal, Sturges binning with open-ended
// outer bins, df = bins - 3. Requires at least 20 samples.
ChiSquareResult chi_square_normality(std::span<const double> sample, double alpha = 0.05);

// Gaussian kernel density estimate with Silverman's bandwidth.
std::vector<double> kde(std::span<const double> sample, std::span<const double> eval_points);

struct DeletionStats {
    double avg_deleted = 0.0;
    std::optional<double> rho_per_relationship; // rating vs. deletion count
    std::optional<double> rho_per_user;         // user means of both
};

DeletionStats deletion_analysis(const std::vector<AssessmentRecord>& records);

// Coarse-tag pattern of an entry: "N"/"A" for a single word, "+"-compressed
// runs for phrases ("A+N+"), "other" when a tag is unknown.
std::string pos_pattern(const std::vector<PosTag>& tags);

struct PatternRow {
    std::string pattern;
    double retained_pct = 0.0;
    double removed_pct = 0.0;
};

// Percentage breakdown of patterns among retained and removed entries;
// each column sums to 100 (up to rounding). Rows are sorted by the ratio of
// retained to removed share, descending.
std::vector<PatternRow> pos_pattern_stats(const std::vector<std::vector<PosTag>>& retained,
                                          const std::vector<std::vector<PosTag>>& removed);

// Normal CDF, exposed for tests.
double normal_cdf(double z);

// Deterministic uniform/normal generator used by the Monte Carlo tests;
// identical output on every platform for a given seed.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    double uniform();       // [0, 1)
    double standard_normal();

private:
    std::uint64_t next_bits();
    std::uint64_t state_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace relkw
