#pragma once

#include <shared_mutex>
#include <string>
#include <vector>

#include "evagent/memory/memory_store.hpp"
#include "evagent/model/timestamp.hpp"

namespace evagent::memory {

struct LocalStoreConfig {
    std::size_t dimension = kDefaultDimension;
    std::size_t short_term_window = 32;
    double threshold = 0.1;
    std::string session = "session-1";
};

// In-process reference store. Items are ranked by cosine similarity to the
// event's query, must score strictly above the threshold, and ties go to the
// newer item, then the lower id.
class LocalMemoryStore final : public MemoryStore {
public:
    explicit LocalMemoryStore(LocalStoreConfig cfg, Clock& clock);

    std::uint64_t record_event(const Event& e) override;
    std::uint64_t record_outcome(const Action& a, const Feedback& f) override;
    MemoryContext retrieve(const Event& e, RetrievalLimits limits) override;
    std::uint64_t version() const override;
    void begin_session(const std::string& session) override;

    // Adds an item directly (fixtures, snapshots); does not bump the version.
    std::uint64_t insert(MemoryKind kind, std::string text);

    std::vector<MemoryItem> items() const;
    const LocalStoreConfig& config() const noexcept { return cfg_; }

    // Line-delimited JSON: a header line, then one line per item.
    void save_snapshot(const std::string& path) const;
    // Replaces the contents; throws ConfigError on unreadable or bad files.
    void load_snapshot(const std::string& path);

private:
    std::uint64_t append_locked(MemoryKind kind, std::string text);
    void promote_overflow_locked();

    LocalStoreConfig cfg_;
    Clock& clock_;
    mutable std::shared_mutex mu_;
    std::vector<MemoryItem> items_;
    std::uint64_t version_ = 0;
    std::uint64_t next_id_ = 1;
    std::uint64_t next_seq_ = 1;
};

}  // namespace evagent::memory
