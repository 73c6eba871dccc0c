#pragma once

#include <atomic>
#include <chrono>
#include <string>

#include "evagent/memory/memory_store.hpp"
#include "evagent/model/trace.hpp"

namespace evagent::memory {

class RemoteMemoryError : public Error {
public:
    enum class Kind { transport, bad_status, malformed_reply };

    RemoteMemoryError(Kind kind, std::string detail, int status = 0)
        : Error(detail), kind_(kind), status_(status) {}

    Kind kind() const noexcept { return kind_; }
    int status() const noexcept { return status_; }

private:
    Kind kind_;
    int status_;
};

struct RemoteStoreConfig {
    std::string base_url;
    std::chrono::milliseconds timeout{5'000};
    // On failure, retrieve returns an empty context (traced) instead of throwing.
    bool fallback = true;
};

// Parses {"old_facts":[...], "short_term":[...], "version":n}.
// Throws RemoteMemoryError(malformed_reply).
MemoryContext parse_context_reply(const std::string& body);

// Client for a memory service. Retrieval is POST {base_url}/context with the
// serialized event; writes are POST {base_url}/memory with
// {"kind":"event"|"outcome","text":summary}. The version counter is kept
// locally so it stays exact even when writes fail.
class RemoteMemoryStore final : public MemoryStore {
public:
    explicit RemoteMemoryStore(RemoteStoreConfig cfg, TraceSink& trace = TraceSink::null());

    std::uint64_t record_event(const Event& e) override;
    std::uint64_t record_outcome(const Action& a, const Feedback& f) override;
    MemoryContext retrieve(const Event& e, RetrievalLimits limits) override;
    std::uint64_t version() const override { return version_.load(); }
    void begin_session(const std::string& session) override { session_ = session; }

    // Throws RemoteMemoryError regardless of the fallback setting.
    MemoryContext fetch_context_remote(const Event& e);

private:
    std::string post(const std::string& path, const std::string& body);
    void send_record(const char* kind, const std::string& text);

    RemoteStoreConfig cfg_;
    TraceSink& trace_;
    std::atomic<std::uint64_t> version_{0};
    std::string session_;
};

}  // namespace evagent::memory
