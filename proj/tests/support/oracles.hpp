#pragma once

// Reference implementations written independently of the library, used as
// oracles by the unit tests and the acceptance suite.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// --- event queue -----------------------------------------------------------

struct QItem {
    std::int64_t wall = 0;
    std::uint64_t seq = 0;
    std::string id;
};

// Unsorted bag; every operation scans for the extreme key.
class RefQueue {
public:
    RefQueue(std::size_t capacity, std::int64_t ttl) : capacity_(capacity), ttl_(ttl) {}

    // Returns the id of the evicted item, if any.
    std::optional<std::string> push(std::int64_t wall, std::string id);
    // Expired ids (any order) plus the popped id.
    std::pair<std::vector<std::string>, std::optional<std::string>> pop(std::int64_t now);
    std::size_t size() const { return items_.size(); }

private:
    std::size_t capacity_;
    std::int64_t ttl_;
    std::uint64_t next_seq_ = 1;
    std::vector<QItem> items_;
};

// --- action grammar --------------------------------------------------------

// Accepts exactly the strings of the action grammar; returns the decoded
// (verb, arg) pair.
std::optional<std::pair<std::string, std::string>> recognize_action(const std::string& s);

std::string trim_ws(const std::string& s);

// Random argument drawn from ASCII, quotes, backslashes, brackets and
// multibyte UTF-8 sequences. Never empty.
std::string random_arg(std::mt19937_64& rng);

// Applies 1..3 random byte edits (insert, delete, replace, duplicate span).
std::string mutate(std::string s, std::mt19937_64& rng);

// --- embedding and retrieval ----------------------------------------------

std::vector<std::string> words(const std::string& text);
std::uint64_t fnv1a(const std::string& s);
std::vector<double> bag_embed(const std::string& text, std::size_t dim);
double cosine(const std::vector<double>& a, const std::vector<double>& b);

struct StoredItem {
    std::uint64_t id = 0;
    bool old_fact = false;
    std::string text;
    std::int64_t wall = 0;
    std::uint64_t seq = 0;
};

// Scores every item, drops those at or below the threshold, sorts the rest
// by (score desc, (wall, seq) desc, id asc) and keeps k of the given kind.
std::vector<std::string> brute_force_rank(const std::vector<StoredItem>& items, const std::string& query, bool old_fact,
                                          std::size_t k, double threshold, std::size_t dim);

// --- shop reward -----------------------------------------------------------

double reference_reward(const std::set<std::string>& product_attrs, const std::map<std::string, std::string>& chosen,
                        double price, const std::set<std::string>& target_attrs,
                        const std::map<std::string, std::string>& target_opts, double cap);

}  // namespace oracle
