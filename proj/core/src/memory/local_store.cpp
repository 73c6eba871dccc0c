#include "evagent/memory/local_store.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>

#include "evagent/model/errors.hpp"

namespace evagent::memory {

namespace {

std::string kind_name(MemoryKind k) { return k == MemoryKind::old_fact ? "old_fact" : "short_term"; }

MemoryKind kind_from(const std::string& s) {
    if (s == "old_fact") return MemoryKind::old_fact;
    if (s == "short_term") return MemoryKind::short_term;
    throw ConfigError("unknown memory kind '" + s + "'");
}

struct Scored {
    double score;
    const MemoryItem* item;
};

bool ranks_before(const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.item->stored_at != b.item->stored_at) return a.item->stored_at > b.item->stored_at;
    return a.item->id < b.item->id;
}

}  // namespace

LocalMemoryStore::LocalMemoryStore(LocalStoreConfig cfg, Clock& clock) : cfg_(std::move(cfg)), clock_(clock) {
    if (cfg_.dimension == 0) throw ConfigError("embedding dimension must be positive");
    if (cfg_.short_term_window == 0) throw ConfigError("short-term window must be positive");
}

std::uint64_t LocalMemoryStore::record_event(const Event& e) {
    std::unique_lock lock(mu_);
    append_locked(MemoryKind::short_term, summarize_event(e));
    promote_overflow_locked();
    return ++version_;
}

std::uint64_t LocalMemoryStore::record_outcome(const Action& a, const Feedback& f) {
    std::unique_lock lock(mu_);
    append_locked(MemoryKind::short_term, summarize_outcome(a, f));
    promote_overflow_locked();
    return ++version_;
}

std::uint64_t LocalMemoryStore::insert(MemoryKind kind, std::string text) {
    std::unique_lock lock(mu_);
    const auto id = append_locked(kind, std::move(text));
    promote_overflow_locked();
    return id;
}

std::uint64_t LocalMemoryStore::append_locked(MemoryKind kind, std::string text) {
    MemoryItem item;
    item.id = next_id_++;
    item.kind = kind;
    item.embedding = embed(text, cfg_.dimension);
    item.text = std::move(text);
    item.stored_at = Timestamp{clock_.now_nanos(), next_seq_++};
    item.session = cfg_.session;
    items_.push_back(std::move(item));
    return items_.back().id;
}

void LocalMemoryStore::promote_overflow_locked() {
    std::size_t short_count = std::count_if(items_.begin(), items_.end(),
                                            [](const MemoryItem& m) { return m.kind == MemoryKind::short_term; });
    // items_ is in insertion order, so the first short-term items are the oldest.
    for (auto& m : items_) {
        if (short_count <= cfg_.short_term_window) break;
        if (m.kind == MemoryKind::short_term) {
            m.kind = MemoryKind::old_fact;
            --short_count;
        }
    }
}

MemoryContext LocalMemoryStore::retrieve(const Event& e, RetrievalLimits limits) {
    std::shared_lock lock(mu_);
    MemoryContext ctx;
    ctx.version = version_;
    const std::string query_text = retrieval_query(e);
    if (query_text.empty() || items_.empty()) return ctx;
    const Vector query = embed(query_text, cfg_.dimension);

    std::vector<Scored> old_facts, short_term;
    for (const auto& m : items_) {
        const double s = similarity(query, m.embedding);
        if (s <= cfg_.threshold) continue;
        (m.kind == MemoryKind::old_fact ? old_facts : short_term).push_back({s, &m});
    }
    auto take = [](std::vector<Scored>& pool, std::size_t k, std::vector<std::string>& out) {
        const std::size_t n = std::min(k, pool.size());
        std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n), pool.end(), ranks_before);
        for (std::size_t i = 0; i < n; ++i) out.push_back(pool[i].item->text);
    };
    take(old_facts, limits.k_old, ctx.old_facts);
    take(short_term, limits.k_short, ctx.short_term);
    return ctx;
}

std::uint64_t LocalMemoryStore::version() const {
    std::shared_lock lock(mu_);
    return version_;
}

void LocalMemoryStore::begin_session(const std::string& session) {
    std::unique_lock lock(mu_);
    for (auto& m : items_) {
        if (m.kind == MemoryKind::short_term && m.session != session) m.kind = MemoryKind::old_fact;
    }
    cfg_.session = session;
}

std::vector<MemoryItem> LocalMemoryStore::items() const {
    std::shared_lock lock(mu_);
    return items_;
}

void LocalMemoryStore::save_snapshot(const std::string& path) const {
    std::shared_lock lock(mu_);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ConfigError("cannot write memory snapshot '" + path + "'");
    out << nlohmann::json{{"version", version_},
                          {"dimension", cfg_.dimension},
                          {"session", cfg_.session},
                          {"next_id", next_id_},
                          {"next_seq", next_seq_}}
               .dump()
        << '\n';
    for (const auto& m : items_) {
        out << nlohmann::json{{"id", m.id},
                              {"kind", kind_name(m.kind)},
                              {"text", m.text},
                              {"stored_at", {{"wall_nanos", m.stored_at.wall_nanos}, {"seq", m.stored_at.seq}}},
                              {"session", m.session}}
                   .dump()
            << '\n';
    }
}

void LocalMemoryStore::load_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read memory snapshot '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("memory snapshot '" + path + "' is empty");
    try {
        const auto header = nlohmann::json::parse(line);
        if (header.at("dimension").get<std::size_t>() != cfg_.dimension)
            throw ConfigError("memory snapshot dimension does not match the store");
        std::vector<MemoryItem> items;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto j = nlohmann::json::parse(line);
            MemoryItem m;
            m.id = j.at("id").get<std::uint64_t>();
            m.kind = kind_from(j.at("kind").get<std::string>());
            m.text = j.at("text").get<std::string>();
            m.embedding = embed(m.text, cfg_.dimension);
            m.stored_at.wall_nanos = j.at("stored_at").at("wall_nanos").get<std::int64_t>();
            m.stored_at.seq = j.at("stored_at").at("seq").get<std::uint64_t>();
            m.session = j.at("session").get<std::string>();
            items.push_back(std::move(m));
        }
        std::unique_lock lock(mu_);
        items_ = std::move(items);
        version_ = header.at("version").get<std::uint64_t>();
        next_id_ = header.at("next_id").get<std::uint64_t>();
        next_seq_ = header.at("next_seq").get<std::uint64_t>();
        cfg_.session = header.at("session").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("bad memory snapshot '" + path + "': " + e.what());
    } catch (const EmptyText&) {
        throw ConfigError("bad memory snapshot '" + path + "': empty item text");
    }
}

}  // namespace evagent::memory
