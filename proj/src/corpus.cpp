#include "relkw/corpus.hpp"

#include "relkw/textproc.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <stdexcept>

namespace relkw {

namespace {

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
                         static_cast<unsigned>(d) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace

bool parse_iso8601(std::string_view s, std::int64_t& out_seconds) {
    // YYYY-MM-DDTHH:MM:SS[.fff][Z|+hh:mm|-hh:mm]
    if (s.size() < 19 || s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != ' ') ||
        s[13] != ':' || s[16] != ':')
        return false;
    int y, mo, d, h, mi, sec;
    if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(5, 2), mo) ||
        !parse_int(s.substr(8, 2), d) || !parse_int(s.substr(11, 2), h) ||
        !parse_int(s.substr(14, 2), mi) || !parse_int(s.substr(17, 2), sec))
        return false;
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || sec > 60) return false;

    std::size_t i = 19;
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    }
    std::int64_t offset = 0;
    if (i < s.size()) {
        if (s[i] == 'Z') {
            ++i;
        } else if (s[i] == '+' || s[i] == '-') {
            if (i + 6 > s.size() || s[i + 3] != ':') return false;
            int oh, om;
            if (!parse_int(s.substr(i + 1, 2), oh) || !parse_int(s.substr(i + 4, 2), om))
                return false;
            offset = (s[i] == '+' ? 1 : -1) * (oh * 3600LL + om * 60LL);
            i += 6;
        }
    }
    if (i != s.size()) return false;
    out_seconds = days_from_civil(y, mo, d) * 86400LL + h * 3600LL + mi * 60LL + sec - offset;
    return true;
}

std::size_t count_words(std::string_view body) {
    std::size_t n = 0;
    for (const Token& t : tokenize(body))
        if (t.is_word) ++n;
    return n;
}

LoadReport load_messages(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open message file: " + path);

    LoadReport report;
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
            Message m;
            m.id = j.at("id").get<std::string>();
            m.thread_id = j.at("thread_id").get<std::string>();
            m.sender = j.at("sender").get<std::string>();
            m.recipients = j.at("recipients").get<std::vector<std::string>>();
            m.timestamp_raw = j.at("timestamp").get<std::string>();
            m.body = j.at("body").get<std::string>();
            if (auto it = j.find("lang"); it != j.end() && it->is_string()) {
                if (auto lang = lang_from_string(it->get<std::string>())) m.lang = *lang;
            }
            if (m.recipients.empty()) {
                reject("recipients must be non-empty");
                continue;
            }
            if (!parse_iso8601(m.timestamp_raw, m.timestamp)) {
                reject("bad timestamp: " + m.timestamp_raw);
                continue;
            }
            report.messages.push_back(std::move(m));
        } catch (const nlohmann::json::exception& e) {
            reject(e.what());
        }
    }
    return report;
}

std::vector<Relationship> group_relationships(const std::vector<Message>& messages,
                                              const std::string& focal) {
    std::map<std::string, std::vector<Message>> by_peer;
    for (const Message& m : messages) {
        if (m.recipients.size() != 1) continue; // multi-recipient messages are discarded
        const std::string& recipient = m.recipients.front();
        if (m.sender == focal && recipient != focal) {
            by_peer[recipient].push_back(m);
        } else if (recipient == focal && m.sender != focal) {
            by_peer[m.sender].push_back(m);
        }
    }

    std::vector<Relationship> out;
    out.reserve(by_peer.size());
    for (auto& [peer, msgs] : by_peer) {
        Relationship rel;
        rel.a = std::min(focal, peer);
        rel.b = std::max(focal, peer);

        std::map<std::string, Thread> threads;
        for (Message& m : msgs) {
            Thread& t = threads[m.thread_id];
            t.thread_id = m.thread_id;
            rel.message_count += 1;
            std::size_t words = count_words(m.body);
            if (m.sender == rel.a) {
                rel.messages_ab += 1;
                rel.word_count_ab += words;
            } else {
                rel.messages_ba += 1;
                rel.word_count_ba += words;
            }
            t.messages.push_back(std::move(m));
        }
        for (auto& [tid, t] : threads) {
            std::sort(t.messages.begin(), t.messages.end(),
                      [](const Message& x, const Message& y) {
                          return std::tie(x.timestamp, x.id) < std::tie(y.timestamp, y.id);
                      });
            rel.threads.push_back(std::move(t));
        }
        std::sort(rel.threads.begin(), rel.threads.end(), [](const Thread& x, const Thread& y) {
            auto key = [](const Thread& t) {
                return std::make_pair(t.messages.front().timestamp, t.thread_id);
            };
            return key(x) < key(y);
        });
        out.push_back(std::move(rel));
    }
    return out;
}

std::vector<Thread> reference_corpus(const std::vector<Relationship>& all,
                                     const Relationship& exclude) {
    bool found = false;
    std::vector<Thread> reference;
    for (const Relationship& rel : all) {
        if (rel.a == exclude.a && rel.b == exclude.b) {
            found = true;
            continue;
        }
        reference.insert(reference.end(), rel.threads.begin(), rel.threads.end());
    }
    if (!found)
        throw std::invalid_argument("reference_corpus: excluded relationship not in corpus");
    return reference;
}

} // namespace relkw
