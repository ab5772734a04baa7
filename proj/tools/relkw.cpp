// relkw: keyword extraction over per-relationship message collections,
// weighted-network export and assessment statistics.

#include "relkw/analytics.hpp"
#include "relkw/corpus.hpp"
#include "relkw/langid.hpp"
#include "relkw/network.hpp"
#include "relkw/pipeline.hpp"
#include "relkw/privacy.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonArgs {
    std::string messages_path;
    std::string focal;
    std::string data_dir = "data";
    std::string profiles_path; // optional; trained from data when empty
    std::string method = "textrank";
    std::size_t top_k = 20;
    double threshold = 0.0;
    bool threshold_set = false;
    std::string languages = "en,de";
    std::size_t min_messages = 5;
    bool hash_keywords = false;
    std::uint64_t seed = 7;
    std::string out;
};

std::vector<relkw::Lang> parse_languages(const std::string& spec) {
    std::vector<relkw::Lang> langs;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto lang = relkw::lang_from_string(item);
        if (!lang || *lang == relkw::Lang::unknown)
            throw CLI::ValidationError("--languages", "unsupported language: " + item);
        langs.push_back(*lang);
    }
    if (langs.empty()) throw CLI::ValidationError("--languages", "no languages given");
    return langs;
}

void write_atomically(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

relkw::ExtractResources load_or_train(const CommonArgs& args) {
    relkw::DataPaths paths = relkw::DataPaths::under(args.data_dir);
    relkw::ExtractResources res = relkw::load_resources(paths);
    if (!args.profiles_path.empty()) {
        res.profiles.clear();
        json j;
        std::ifstream in(args.profiles_path);
        if (!in) throw std::runtime_error("cannot open profiles: " + args.profiles_path);
        // the profiles file holds an array of profile objects
        j = json::parse(in);
        for (const auto& entry : j) {
            relkw::LanguageProfile p;
            auto lang = relkw::lang_from_string(entry.at("lang").get<std::string>());
            if (!lang) throw std::runtime_error("profiles file has unknown language");
            p.lang = *lang;
            p.trigram_freqs = entry.at("trigrams").get<std::map<std::string, double>>();
            for (const auto& w : entry.at("stopwords")) p.stopwords.insert(w.get<std::string>());
            res.profiles.push_back(std::move(p));
        }
    }
    return res;
}

struct PreparedCorpus {
    std::vector<relkw::Relationship> relationships;
};

PreparedCorpus prepare_corpus(const CommonArgs& args, const relkw::ExtractResources& res) {
    relkw::LoadReport report = relkw::load_messages(args.messages_path);
    for (const std::string& d : report.diagnostics)
        std::cerr << "warning: " << args.messages_path << ": " << d << "\n";
    relkw::classify_messages(report.messages, res.profiles);
    PreparedCorpus corpus;
    corpus.relationships = relkw::group_relationships(report.messages, args.focal);
    return corpus;
}

relkw::ExtractOptions make_options(const CommonArgs& args, const std::string& method) {
    relkw::ExtractOptions options;
    options.method = method;
    options.k = args.threshold_set ? std::numeric_limits<std::size_t>::max() : args.top_k;
    if (args.threshold_set) options.threshold = args.threshold;
    options.languages = parse_languages(args.languages);
    options.min_messages = args.min_messages;
    options.hash_keywords = args.hash_keywords;
    options.seed = args.seed;
    return options;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_train_langid(const std::string& data_dir, const std::string& out_path) {
    relkw::DataPaths paths = relkw::DataPaths::under(data_dir);
    relkw::ExtractResources res = relkw::load_resources(paths);
    json out = json::array();
    for (const relkw::LanguageProfile& p : res.profiles) {
        json jp;
        jp["lang"] = relkw::to_string(p.lang);
        jp["trigrams"] = p.trigram_freqs;
        std::vector<std::string> words(p.stopwords.begin(), p.stopwords.end());
        std::sort(words.begin(), words.end());
        jp["stopwords"] = words;
        out.push_back(std::move(jp));
    }
    write_atomically(out_path, dump(out));
    std::cout << "trained " << out.size() << " profiles -> " << out_path << "\n";
    return 0;
}

int cmd_extract(const CommonArgs& args, bool all_methods) {
    relkw::ExtractResources res = load_or_train(args);
    PreparedCorpus corpus = prepare_corpus(args, res);
    fs::create_directories(args.out);

    const std::vector<std::string> methods =
        all_methods ? relkw::kMethods : std::vector<std::string>{args.method};

    for (const relkw::Relationship& rel : corpus.relationships) {
        std::vector<relkw::Thread> reference =
            relkw::reference_corpus(corpus.relationships, rel);
        json sets = json::array();
        bool skipped = false;
        for (const std::string& method : methods) {
            relkw::ExtractOptions options = make_options(args, method);
            relkw::ExtractOutcome outcome = relkw::extract_keywords(rel, reference, options, res);
            if (outcome.skipped) {
                std::cerr << "warning: skipping " << rel.a << " -- " << rel.b << " ("
                          << outcome.skip_reason << ")\n";
                skipped = true;
                break;
            }
            sets.push_back(relkw::keyword_set_json(outcome.set, args.hash_keywords));
        }
        if (skipped) continue;

        std::string slug = relkw::relationship_slug(rel);
        if (all_methods) {
            json combined;
            combined["relationship"] = {rel.a, rel.b};
            combined["sets"] = std::move(sets);
            fs::path path = fs::path(args.out) / (slug + ".compare.json");
            write_atomically(path, dump(combined));
            std::cout << "wrote " << path.string() << "\n";
        } else {
            fs::path path = fs::path(args.out) / (slug + "." + methods.front() + ".json");
            write_atomically(path, dump(sets.front()));
            std::cout << "wrote " << path.string() << " (" << sets.front()["keywords"].size()
                      << " keywords)\n";
        }
    }
    return 0;
}

int cmd_network(const CommonArgs& args) {
    relkw::ExtractResources res = load_or_train(args);
    PreparedCorpus corpus = prepare_corpus(args, res);

    relkw::SocialNetwork net = relkw::build_network(corpus.relationships, args.min_messages);
    relkw::ReciprocityStats reciprocity =
        corpus.relationships.size() >= 2
            ? relkw::reciprocity_stats(corpus.relationships, args.focal)
            : relkw::ReciprocityStats{};

    json jnet;
    jnet["vertices"] = std::vector<std::string>(net.vertices.begin(), net.vertices.end());
    json edges = json::array();
    for (const relkw::SocialNetwork::Edge& e : net.edges) {
        auto rel_it = std::find_if(corpus.relationships.begin(), corpus.relationships.end(),
                                   [&](const relkw::Relationship& r) {
                                       return r.a == e.a && r.b == e.b;
                                   });
        json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["message_count"] = e.message_count;
        json vec = json::object();
        relkw::ExtractOptions options = make_options(args, args.method);
        relkw::ExtractOutcome outcome = relkw::extract_keywords(
            *rel_it, relkw::reference_corpus(corpus.relationships, *rel_it), options, res);
        if (!outcome.skipped) {
            for (const relkw::KeywordEntry& entry : outcome.set.entries) {
                std::string label = args.hash_keywords
                                        ? relkw::hash_keyword(entry.display).digest
                                        : entry.display;
                vec[label] = entry.score / static_cast<double>(outcome.set.k);
            }
        } else {
            std::cerr << "warning: edge " << e.a << " -- " << e.b << " has no keyword vector ("
                      << outcome.skip_reason << ")\n";
        }
        je["vector"] = std::move(vec);
        edges.push_back(std::move(je));
    }
    jnet["edges"] = std::move(edges);
    jnet["reciprocity"]["rho_messages"] =
        reciprocity.rho_messages ? json(*reciprocity.rho_messages) : json(nullptr);
    jnet["reciprocity"]["rho_words"] =
        reciprocity.rho_words ? json(*reciprocity.rho_words) : json(nullptr);

    write_atomically(args.out, dump(jnet));
    std::cout << "wrote " << args.out << " (" << net.edges.size() << " edges)\n";
    return 0;
}

struct AssessArgs {
    std::string assessments_path;
    std::string keywords_dir; // optional
    std::string out;          // optional JSON report path
    double alpha = 0.05;
    int replicates = 10000;
    std::uint64_t seed = 1;
};

json normality_json(const std::vector<double>& sample, const AssessArgs& args,
                    std::uint64_t seed_offset) {
    json j;
    if (sample.size() >= 4) {
        try {
            relkw::LillieforsResult lf =
                relkw::lilliefors(sample, args.alpha, args.replicates, args.seed + seed_offset);
            j["lilliefors"] = {{"statistic", lf.statistic},
                               {"p_estimate", lf.p_estimate},
                               {"reject", lf.reject}};
        } catch (const std::invalid_argument&) {
            j["lilliefors"] = nullptr;
        }
    } else {
        j["lilliefors"] = nullptr;
    }
    if (sample.size() >= 20) {
        try {
            relkw::ChiSquareResult cs = relkw::chi_square_normality(sample, args.alpha);
            j["chi_square"] = {{"statistic", cs.statistic},
                               {"df", cs.degrees_of_freedom},
                               {"p_value", cs.p_value},
                               {"reject", cs.reject}};
        } catch (const std::invalid_argument&) {
            j["chi_square"] = nullptr;
        }
    } else {
        j["chi_square"] = nullptr;
    }
    return j;
}

int cmd_assess_stats(const AssessArgs& args) {
    relkw::AssessmentLoadReport report = relkw::load_assessments(args.assessments_path);
    for (const std::string& d : report.diagnostics)
        std::cerr << "warning: " << args.assessments_path << ": " << d << "\n";
    if (report.records.empty()) {
        std::cerr << "error: no usable assessment records\n";
        return 1;
    }

    std::map<std::string, std::vector<relkw::AssessmentRecord>> by_method;
    for (const relkw::AssessmentRecord& r : report.records) by_method[r.method].push_back(r);

    json jreport;
    std::cout << std::fixed << std::setprecision(2);
    std::cout << "method               mean/rel  std/rel  mean/user std/user  n(rel) n(user)\n";

    std::uint64_t seed_offset = 0;
    for (const std::string& method : relkw::kMethods) {
        auto it = by_method.find(method);
        if (it == by_method.end()) continue;
        const auto& records = it->second;

        relkw::StatsSummary s = relkw::summarize(records);
        relkw::DeletionStats del = relkw::deletion_analysis(records);

        std::vector<double> ratings;
        for (const auto& r : records) ratings.push_back(r.rating);
        std::map<std::string, std::pair<double, std::size_t>> user_acc;
        for (const auto& r : records) {
            user_acc[r.user].first += r.rating;
            user_acc[r.user].second += 1;
        }
        std::vector<double> user_means;
        for (const auto& [u, acc] : user_acc)
            user_means.push_back(acc.first / static_cast<double>(acc.second));

        std::size_t deleting_users = 0;
        std::set<std::string> seen_users, deleting;
        for (const auto& r : records) {
            seen_users.insert(r.user);
            if (!r.deleted.empty()) deleting.insert(r.user);
        }
        deleting_users = deleting.size();

        json jm;
        jm["summary"] = {{"mean_per_relationship", s.mean_per_relationship},
                         {"std_per_relationship", s.std_per_relationship},
                         {"mean_per_user", s.mean_per_user},
                         {"std_per_user", s.std_per_user},
                         {"relationships", s.relationship_count},
                         {"users", s.user_count}};
        jm["normality_per_relationship"] = normality_json(ratings, args, seed_offset++);
        jm["normality_per_user"] = normality_json(user_means, args, seed_offset++);
        jm["deletion"] = {
            {"users_deleting", deleting_users},
            {"avg_deleted", del.avg_deleted},
            {"rho_per_relationship",
             del.rho_per_relationship ? json(*del.rho_per_relationship) : json(nullptr)},
            {"rho_per_user", del.rho_per_user ? json(*del.rho_per_user) : json(nullptr)}};

        // kde of the per-user means over the rating scale, with the fitted normal
        if (user_means.size() >= 2 && s.std_per_user > 0.0) {
            std::vector<double> grid;
            for (int x = 0; x <= 100; x += 2) grid.push_back(x);
            std::vector<double> density = relkw::kde(user_means, grid);
            json jk;
            jk["grid"] = grid;
            jk["kde"] = density;
            std::vector<double> normal;
            for (double x : grid) {
                double z = (x - s.mean_per_user) / s.std_per_user;
                normal.push_back(std::exp(-0.5 * z * z) /
                                 (s.std_per_user * std::sqrt(2.0 * 3.14159265358979323846)));
            }
            jk["fitted_normal"] = normal;
            jm["density_per_user"] = std::move(jk);
        } else {
            jm["density_per_user"] = nullptr;
        }

        jreport["methods"][method] = std::move(jm);

        std::cout << std::left << std::setw(20) << method << std::right << std::setw(9)
                  << s.mean_per_relationship << std::setw(9) << s.std_per_relationship
                  << std::setw(10) << s.mean_per_user << std::setw(9) << s.std_per_user
                  << std::setw(8) << s.relationship_count << std::setw(8) << s.user_count
                  << "\n";
    }

    std::cout << "\nmethod               users-del avg-del  rho/rel  rho/user\n";
    for (const std::string& method : relkw::kMethods) {
        auto it = jreport["methods"].find(method);
        if (it == jreport["methods"].end()) continue;
        const json& del = (*it)["deletion"];
        auto num = [](const json& v) {
            return v.is_null() ? std::string("   n/a") : [&] {
                std::ostringstream os;
                os << std::fixed << std::setprecision(2) << std::setw(6) << v.get<double>();
                return os.str();
            }();
        };
        std::cout << std::left << std::setw(20) << method << std::right << std::setw(10)
                  << del["users_deleting"].get<std::size_t>() << std::setw(8)
                  << del["avg_deleted"].get<double>() << "  " << num(del["rho_per_relationship"])
                  << "   " << num(del["rho_per_user"]) << "\n";
    }

    // PoS-pattern breakdown over retained vs. removed entries, when the
    // exported keyword sets are available for matching.
    if (!args.keywords_dir.empty()) {
        std::map<std::string, std::pair<std::size_t, std::size_t>> pattern_counts;
        std::size_t retained_total = 0, removed_total = 0;
        for (const relkw::AssessmentRecord& r : report.records) {
            std::string a = std::min(r.user, r.peer), b = std::max(r.user, r.peer);
            relkw::Relationship fake;
            fake.a = a;
            fake.b = b;
            fs::path path = fs::path(args.keywords_dir) /
                            (relkw::relationship_slug(fake) + "." + r.method + ".json");
            std::ifstream in(path);
            if (!in) continue;
            json jset = json::parse(in, nullptr, false);
            if (jset.is_discarded()) continue;
            std::set<std::string> deleted(r.deleted.begin(), r.deleted.end());
            std::set<std::string> matched;
            for (const auto& entry : jset.at("keywords")) {
                std::string display = entry.at("display").get<std::string>();
                std::string pattern = entry.at("pos_pattern").get<std::string>();
                std::string digest = relkw::hash_keyword(display).digest;
                bool was_deleted = deleted.count(display) || deleted.count(digest);
                if (was_deleted) {
                    matched.insert(deleted.count(display) ? display : digest);
                    pattern_counts[pattern].second += 1;
                    ++removed_total;
                } else {
                    pattern_counts[pattern].first += 1;
                    ++retained_total;
                }
            }
            for (const std::string& id : deleted) {
                if (!matched.count(id)) {
                    pattern_counts["other"].second += 1; // unmatched identifier
                    ++removed_total;
                }
            }
        }
        if (retained_total + removed_total > 0) {
            json jrows = json::array();
            std::vector<relkw::PatternRow> rows;
            for (const auto& [pattern, c] : pattern_counts) {
                relkw::PatternRow row;
                row.pattern = pattern;
                row.retained_pct =
                    retained_total ? 100.0 * c.first / static_cast<double>(retained_total) : 0.0;
                row.removed_pct =
                    removed_total ? 100.0 * c.second / static_cast<double>(removed_total) : 0.0;
                rows.push_back(row);
            }
            std::sort(rows.begin(), rows.end(),
                      [](const relkw::PatternRow& x, const relkw::PatternRow& y) {
                          double lhs = x.retained_pct * y.removed_pct;
                          double rhs = y.retained_pct * x.removed_pct;
                          if (lhs != rhs) return lhs > rhs;
                          return x.pattern < y.pattern;
                      });
            std::cout << "\npattern    % retained  % removed\n";
            for (const relkw::PatternRow& row : rows) {
                std::cout << std::left << std::setw(10) << row.pattern << std::right
                          << std::setw(11) << row.retained_pct << std::setw(11)
                          << row.removed_pct << "\n";
                jrows.push_back({{"pattern", row.pattern},
                                 {"retained_pct", row.retained_pct},
                                 {"removed_pct", row.removed_pct}});
            }
            jreport["pos_patterns"] = std::move(jrows);
        }
    }

    if (!args.out.empty()) {
        write_atomically(args.out, dump(jreport));
        std::cout << "\nwrote " << args.out << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"keyword extraction for social-relationship characterisation"};
    app.require_subcommand(1);

    std::string train_data_dir = "data";
    std::string train_out = "profiles.json";
    CLI::App* train = app.add_subcommand("train-langid", "train language profiles");
    train->add_option("--data-dir", train_data_dir, "bundled data directory");
    train->add_option("--out", train_out, "output profile file")->required();

    CommonArgs extract_args;
    CLI::App* extract = app.add_subcommand("extract", "extract keywords per relationship");
    CommonArgs compare_args;
    CLI::App* compare =
        app.add_subcommand("compare", "run all three scoring methods side by side");
    CommonArgs network_args;
    CLI::App* network = app.add_subcommand("network", "export the weighted social network");

    auto add_common = [](CLI::App* cmd, CommonArgs& args, bool with_method) {
        cmd->add_option("--messages", args.messages_path, "messages.jsonl")->required();
        cmd->add_option("--focal", args.focal, "focal actor id")->required();
        cmd->add_option("--data-dir", args.data_dir, "bundled data directory");
        cmd->add_option("--profiles", args.profiles_path,
                        "language profiles (trained from data when omitted)");
        if (with_method)
            cmd->add_option("--method", args.method, "tfidf | textrank | textrank-directed")
                ->check(CLI::IsMember({"tfidf", "textrank", "textrank-directed"}));
        auto* k_opt = cmd->add_option("--top-k", args.top_k, "keywords per relationship");
        auto* t_opt = cmd->add_option_function<double>(
            "--threshold",
            [&args](const double& v) {
                args.threshold = v;
                args.threshold_set = true;
            },
            "minimum score instead of a fixed count");
        t_opt->excludes(k_opt);
        k_opt->excludes(t_opt);
        cmd->add_option("--languages", args.languages, "comma-separated subset of en,de");
        cmd->add_option("--min-messages", args.min_messages, "per-relationship cutoff");
        cmd->add_flag("--hash-keywords", args.hash_keywords, "export MD5 digests");
        cmd->add_option("--seed", args.seed, "root seed");
        cmd->add_option("--out", args.out, "output directory or file")->required();
    };
    add_common(extract, extract_args, true);
    add_common(compare, compare_args, false);
    add_common(network, network_args, true);

    AssessArgs assess_args;
    CLI::App* assess = app.add_subcommand("assess-stats", "evaluation statistics");
    assess->add_option("--assessments", assess_args.assessments_path, "assessments.jsonl")
        ->required();
    assess->add_option("--keywords", assess_args.keywords_dir,
                       "directory of exported keyword sets (enables the PoS table)");
    assess->add_option("--alpha", assess_args.alpha, "significance level");
    assess->add_option("--replicates", assess_args.replicates, "Monte Carlo replicates");
    assess->add_option("--seed", assess_args.seed, "root seed");
    assess->add_option("--out", assess_args.out, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*train) return cmd_train_langid(train_data_dir, train_out);
        if (*extract) return cmd_extract(extract_args, /*all_methods=*/false);
        if (*compare) return cmd_extract(compare_args, /*all_methods=*/true);
        if (*network) return cmd_network(network_args);
        if (*assess) return cmd_assess_stats(assess_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
