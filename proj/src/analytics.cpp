#include "relkw/analytics.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace relkw {

namespace {

double mean_of(std::span<const double> xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

// sample standard deviation (n - 1); zero for a single observation
double stddev_of(std::span<const double> xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

// linear-interpolated quantile (type 7)
double quantile(std::vector<double> sorted, double q) {
    if (sorted.empty()) return 0.0;
    double h = q * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(std::floor(h));
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::map<std::string, std::vector<const AssessmentRecord*>>
group_by_user(const std::vector<AssessmentRecord>& records) {
    std::map<std::string, std::vector<const AssessmentRecord*>> by_user;
    for (const AssessmentRecord& r : records) by_user[r.user].push_back(&r);
    return by_user;
}

} // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

AssessmentLoadReport load_assessments(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open assessment file: " + path);

    AssessmentLoadReport report;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        auto reject = [&](const std::string& why) {
            report.diagnostics.push_back("line " + std::to_string(line_no) + ": " + why);
        };
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            reject("not a JSON object");
            continue;
        }
        try {
            AssessmentRecord r;
            r.user = j.at("user").get<std::string>();
            r.peer = j.at("peer").get<std::string>();
            r.method = j.at("method").get<std::string>();
            r.rating = j.at("rating").get<int>();
            if (auto it = j.find("deleted"); it != j.end())
                r.deleted = it->get<std::vector<std::string>>();
            if (r.rating < 0 || r.rating > 100) {
                reject("rating out of range: " + std::to_string(r.rating));
                continue;
            }
            report.records.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            reject(e.what());
        }
    }
    return report;
}

StatsSummary summarize(const std::vector<AssessmentRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize: no records");

    std::vector<double> ratings;
    ratings.reserve(records.size());
    for (const AssessmentRecord& r : records) ratings.push_back(r.rating);

    std::vector<double> user_means;
    for (const auto& [user, rs] : group_by_user(records)) {
        double sum = 0.0;
        for (const AssessmentRecord* r : rs) sum += r->rating;
        user_means.push_back(sum / static_cast<double>(rs.size()));
    }

    StatsSummary s;
    s.relationship_count = ratings.size();
    s.user_count = user_means.size();
    s.mean_per_relationship = mean_of(ratings);
    s.std_per_relationship = stddev_of(ratings, s.mean_per_relationship);
    s.mean_per_user = mean_of(user_means);
    s.std_per_user = stddev_of(user_means, s.mean_per_user);
    return s;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
    if (x.size() < 2) throw std::invalid_argument("pearson: need at least two points");
    double mx = mean_of(x), my = mean_of(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

// --- deterministic RNG (xoshiro256++ seeded by splitmix64) ---

RandomSource::RandomSource(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        s = z ^ (z >> 31);
    }
}

std::uint64_t RandomSource::next_bits() {
    auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomSource::uniform() {
    return static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
}

double RandomSource::standard_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

namespace {

// KS distance between the sorted sample and a normal with estimated
// parameters; the caller guarantees a non-degenerate sample.
double lilliefors_statistic(std::vector<double>& sample) {
    std::sort(sample.begin(), sample.end());
    double m = mean_of(sample);
    double sd = stddev_of(sample, m);
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = normal_cdf((sample[i] - m) / sd);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

} // namespace

namespace {

// The null distribution of the statistic does not depend on the true
// parameters, so replicates are drawn from the standard normal. Tables are
// memoized per (n, replicates, seed); recomputing would give identical
// values, so caching does not change any result.
const std::vector<double>& lilliefors_null_table(std::size_t n, int replicates,
                                                 std::uint64_t seed) {
    static std::map<std::tuple<std::size_t, int, std::uint64_t>, std::vector<double>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(n, replicates, seed);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    RandomSource rng(seed);
    std::vector<double> stats;
    stats.reserve(static_cast<std::size_t>(replicates));
    std::vector<double> replicate(n);
    for (int r = 0; r < replicates; ++r) {
        for (double& v : replicate) v = rng.standard_normal();
        stats.push_back(lilliefors_statistic(replicate));
    }
    std::sort(stats.begin(), stats.end());
    return cache.emplace(std::move(key), std::move(stats)).first->second;
}

} // namespace

LillieforsResult lilliefors(std::span<const double> sample, double alpha, int replicates,
                            std::uint64_t seed) {
    if (sample.size() < 4) throw std::invalid_argument("lilliefors: need at least 4 samples");
    if (replicates < 1) throw std::invalid_argument("lilliefors: need at least one replicate");
    std::vector<double> xs(sample.begin(), sample.end());
    double m = mean_of(xs);
    if (stddev_of(xs, m) == 0.0)
        throw std::invalid_argument("lilliefors: sample has zero variance");

    LillieforsResult result;
    result.statistic = lilliefors_statistic(xs);

    const std::vector<double>& null_stats =
        lilliefors_null_table(sample.size(), replicates, seed);
    auto first_ge = std::lower_bound(null_stats.begin(), null_stats.end(), result.statistic);
    auto at_least = static_cast<std::size_t>(null_stats.end() - first_ge);
    result.p_estimate = static_cast<double>(1 + at_least) / static_cast<double>(replicates + 1);
    result.reject = result.p_estimate < alpha;
    return result;
}

namespace {

// regularized incomplete gamma Q(a, x) (series / continued fraction)
double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        // P(a,x) by series
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    // Q(a,x) by continued fraction (modified Lentz)
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

} // namespace

ChiSquareResult chi_square_normality(std::span<const double> sample, double alpha) {
    if (sample.size() < 20)
        throw std::invalid_argument("chi_square_normality: need at least 20 samples");
    std::vector<double> xs(sample.begin(), sample.end());
    double m = mean_of(xs);
    double sd = stddev_of(xs, m);
    if (sd == 0.0)
        throw std::invalid_argument("chi_square_normality: sample has zero variance");

    const std::size_t n = xs.size();
    const std::size_t bins =
        static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))) + 1; // Sturges
    auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
    const double lo = *lo_it, hi = *hi_it;
    const double width = (hi - lo) / static_cast<double>(bins);

    // half-open interior bins; outer bins extend to +-infinity
    std::vector<std::size_t> observed(bins, 0);
    for (double x : xs) {
        std::size_t b = width > 0.0
                            ? std::min(bins - 1, static_cast<std::size_t>((x - lo) / width))
                            : 0;
        observed[b] += 1;
    }

    double statistic = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        double from = b == 0 ? -std::numeric_limits<double>::infinity()
                             : (lo + width * static_cast<double>(b) - m) / sd;
        double to = b == bins - 1 ? std::numeric_limits<double>::infinity()
                                  : (lo + width * static_cast<double>(b + 1) - m) / sd;
        double p = normal_cdf(to) - normal_cdf(from);
        double expected = p * static_cast<double>(n);
        if (expected <= 0.0) expected = 1e-12;
        double diff = static_cast<double>(observed[b]) - expected;
        statistic += diff * diff / expected;
    }

    if (bins < 4) throw std::invalid_argument("chi_square_normality: too few bins");
    ChiSquareResult result;
    result.statistic = statistic;
    result.degrees_of_freedom = bins - 3; // two fitted parameters
    result.p_value = gamma_q(static_cast<double>(result.degrees_of_freedom) / 2.0,
                             statistic / 2.0);
    result.reject = result.p_value < alpha;
    return result;
}

std::vector<double> kde(std::span<const double> sample, std::span<const double> eval_points) {
    if (sample.empty()) throw std::invalid_argument("kde: empty sample");
    std::vector<double> xs(sample.begin(), sample.end());
    double m = mean_of(xs);
    double sd = stddev_of(xs, m);
    std::sort(xs.begin(), xs.end());
    double iqr = quantile(xs, 0.75) - quantile(xs, 0.25);

    // Silverman's rule of thumb
    double spread = sd;
    if (iqr > 0.0) spread = std::min(spread > 0.0 ? spread : iqr, iqr / 1.349);
    double h = 0.9 * spread * std::pow(static_cast<double>(xs.size()), -0.2);
    if (!(h > 0.0)) h = 1.0; // degenerate sample: any positive bandwidth

    const double norm = 1.0 / (static_cast<double>(xs.size()) * h * std::sqrt(2.0 * 3.14159265358979323846));
    std::vector<double> densities;
    densities.reserve(eval_points.size());
    for (double e : eval_points) {
        double sum = 0.0;
        for (double x : xs) {
            double z = (e - x) / h;
            sum += std::exp(-0.5 * z * z);
        }
        densities.push_back(norm * sum);
    }
    return densities;
}

DeletionStats deletion_analysis(const std::vector<AssessmentRecord>& records) {
    DeletionStats stats;
    if (records.empty()) return stats;

    std::vector<double> ratings, deletions;
    for (const AssessmentRecord& r : records) {
        ratings.push_back(r.rating);
        deletions.push_back(static_cast<double>(r.deleted.size()));
    }
    stats.avg_deleted = mean_of(deletions);
    if (records.size() >= 2) stats.rho_per_relationship = pearson(ratings, deletions);

    std::vector<double> user_ratings, user_deletions;
    for (const auto& [user, rs] : group_by_user(records)) {
        double rating_sum = 0.0, deleted_sum = 0.0;
        for (const AssessmentRecord* r : rs) {
            rating_sum += r->rating;
            deleted_sum += static_cast<double>(r->deleted.size());
        }
        user_ratings.push_back(rating_sum / static_cast<double>(rs.size()));
        user_deletions.push_back(deleted_sum / static_cast<double>(rs.size()));
    }
    if (user_ratings.size() >= 2) stats.rho_per_user = pearson(user_ratings, user_deletions);
    return stats;
}

std::string pos_pattern(const std::vector<PosTag>& tags) {
    if (tags.empty()) return "other";
    for (PosTag t : tags)
        if (t != PosTag::noun && t != PosTag::adj) return "other";
    if (tags.size() == 1) return tags.front() == PosTag::noun ? "N" : "A";

    std::string pattern;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (i > 0 && tags[i] == tags[i - 1]) continue;
        pattern.push_back(tags[i] == PosTag::noun ? 'N' : 'A');
        pattern.push_back('+');
    }
    return pattern;
}

std::vector<PatternRow> pos_pattern_stats(const std::vector<std::vector<PosTag>>& retained,
                                          const std::vector<std::vector<PosTag>>& removed) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    for (const auto& tags : retained) counts[pos_pattern(tags)].first += 1;
    for (const auto& tags : removed) counts[pos_pattern(tags)].second += 1;

    const double retained_total = static_cast<double>(retained.size());
    const double removed_total = static_cast<double>(removed.size());
    std::vector<PatternRow> rows;
    for (const auto& [pattern, c] : counts) {
        PatternRow row;
        row.pattern = pattern;
        row.retained_pct = retained_total > 0 ? 100.0 * c.first / retained_total : 0.0;
        row.removed_pct = removed_total > 0 ? 100.0 * c.second / removed_total : 0.0;
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(), [](const PatternRow& a, const PatternRow& b) {
        // by retained/removed ratio, descending; cross-multiplied to avoid 0/0
        double lhs = a.retained_pct * b.removed_pct;
        double rhs = b.retained_pct * a.removed_pct;
        if (lhs != rhs) return lhs > rhs;
        return a.pattern < b.pattern;
    });
    return rows;
}

} // namespace relkw
