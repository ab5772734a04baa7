#pragma once

#include "relkw/lang.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relkw {

struct Message {
    std::string id;
    std::string thread_id;
    std::string sender;
    std::vector<std::string> recipients; // non-empty
    std::int64_t timestamp = 0;          // seconds since epoch, UTC
    std::string timestamp_raw;           // original ISO-8601 string
    std::string body;                    // may be empty, never absent
    Lang lang = Lang::unknown;
};

struct Thread {
    std::string thread_id;
    std::vector<Message> messages; // ascending by (timestamp, id)
};

// A sender-recipient pair and the single-recipient messages between them.
// Actors are stored with a < b; counts are split by direction.
struct Relationship {
    std::string a;
    std::string b;
    std::vector<Thread> threads; // sorted by (first message timestamp, thread_id)
    std::size_t message_count = 0;
    std::size_t messages_ab = 0;
    std::size_t messages_ba = 0;
    std::size_t word_count_ab = 0;
    std::size_t word_count_ba = 0;

    const std::string& peer_of(const std::string& actor) const {
        return actor == a ? b : a;
    }
};

// Parses "YYYY-MM-DDTHH:MM:SS" with optional fractional seconds and a
// 'Z' or +hh:mm offset. Returns false on malformed input.
bool parse_iso8601(std::string_view s, std::int64_t& out_seconds);

struct LoadReport {
    std::vector<Message> messages;
    std::vector<std::string> diagnostics; // one entry per rejected line
};

// Reads one JSON object per line. Malformed lines are skipped and reported
// with their line numbers; an unreadable file throws.
LoadReport load_messages(const std::string& path);

// Groups the focal actor's single-recipient messages into one Relationship
// per distinct peer. Multi-recipient messages are discarded; inbox and
// outbox are merged. Ordering is canonical regardless of input order.
std::vector<Relationship> group_relationships(const std::vector<Message>& messages,
                                              const std::string& focal);

// Threads of every relationship except the excluded one. Throws if exclude
// is not an element of all.
std::vector<Thread> reference_corpus(const std::vector<Relationship>& all,
                                     const Relationship& exclude);

// Number of word tokens in a body (punctuation runs excluded).
std::size_t count_words(std::string_view body);

} // namespace relkw
