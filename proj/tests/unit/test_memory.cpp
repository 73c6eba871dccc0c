#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "evagent/memory/embedding.hpp"
#include "evagent/memory/local_store.hpp"
#include "evagent/model/errors.hpp"
#include "oracles.hpp"

using namespace evagent;
using namespace evagent::memory;

TEST(Embedding, Deterministic) { EXPECT_EQ(embed("buy now"), embed("buy now")); }

TEST(Embedding, UnitLength) {
    double n = 0;
    for (double x : embed("a a a")) n += x * x;
    EXPECT_NEAR(n, 1.0, 1e-12);
}

TEST(Embedding, OrderFree) {
    // Same token multiset, so the oracle says identical bags.
    auto a = oracle::words("red shoes cheap"), b = oracle::words("cheap red shoes");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ASSERT_EQ(a, b);
    EXPECT_NEAR(similarity(embed("red shoes cheap"), embed("cheap red shoes")), 1.0, 1e-12);
}

TEST(Embedding, MatchesIndependentHashing) {
    for (const char* t : {"Summer Sausage", "日本 tea", "B001", "x-y_z", "!!!"})
        EXPECT_EQ(embed(t), oracle::bag_embed(t, kDefaultDimension)) << t;
    EXPECT_EQ(fnv1a64("a"), oracle::fnv1a("a"));
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
}

TEST(Embedding, Tokenizer) {
    EXPECT_EQ(tokenize("Buy-Now, 2 Items!"), (std::vector<std::string>{"buy", "now", "2", "items"}));
    EXPECT_EQ(tokenize("café"), (std::vector<std::string>{"café"}));
}

TEST(Embedding, UnrelatedTextsAreDissimilar) {
    const auto u = embed("summer sausage"), v = embed("winter coat");
    double dot = 0;
    for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * v[i];
    EXPECT_LT(dot, 0.5);
    EXPECT_NEAR(similarity(u, v), dot, 1e-12);
}

TEST(Embedding, Errors) {
    EXPECT_THROW(embed(""), EmptyText);
    EXPECT_THROW(similarity(embed("a", 8), embed("a", 16)), DimensionMismatch);
    // Punctuation only: no tokens, zero vector, zero similarity.
    EXPECT_EQ(similarity(embed("!!"), embed("a")), 0.0);
}

TEST(Similarity, Basics) {
    const std::vector<double> x{1, 0}, y{0, 1}, z{0.6, 0.8};
    EXPECT_DOUBLE_EQ(similarity(z, z), 1.0);
    EXPECT_DOUBLE_EQ(similarity(x, y), 0.0);
    EXPECT_DOUBLE_EQ(similarity(x, z), similarity(z, x));
}

namespace {

Event event(std::string intent, std::vector<std::string> obs = {}) {
    Event e;
    e.id = "ev";
    e.intent = std::move(intent);
    e.observations = std::move(obs);
    return e;
}

}  // namespace

TEST(LocalStore, RecordBumpsVersion) {
    LogicalClock clock;
    LocalMemoryStore store({}, clock);
    EXPECT_EQ(store.record_event(event("x")), 1u);
    ASSERT_EQ(store.items().size(), 1u);
    EXPECT_EQ(store.items()[0].kind, MemoryKind::short_term);
    Feedback f{Action::click("Buy Now"), "purchased", true, {}};
    EXPECT_EQ(store.record_outcome(Action::click("Buy Now"), f), 2u);
    EXPECT_EQ(store.items()[1].text, "click[\"Buy Now\"] -> purchased");
}

TEST(LocalStore, PromotionPastWindow) {
    LogicalClock clock;
    LocalStoreConfig cfg;
    cfg.short_term_window = 32;
    LocalMemoryStore store(cfg, clock);
    for (int i = 0; i < 33; ++i) store.record_event(event("e" + std::to_string(i)));
    const auto items = store.items();
    const auto old = std::count_if(items.begin(), items.end(), [](auto& m) { return m.kind == MemoryKind::old_fact; });
    EXPECT_EQ(old, 1);
    EXPECT_EQ(items.size() - static_cast<std::size_t>(old), 32u);
    EXPECT_NE(items[0].text.find("e0"), std::string::npos);
    EXPECT_EQ(items[0].kind, MemoryKind::old_fact);
    EXPECT_EQ(store.version(), 33u);
}

TEST(LocalStore, EmptyRetrieve) {
    LogicalClock clock;
    LocalMemoryStore store({}, clock);
    const auto ctx = store.retrieve(event("anything"), {});
    EXPECT_TRUE(ctx.old_facts.empty());
    EXPECT_TRUE(ctx.short_term.empty());
    EXPECT_EQ(ctx.version, 0u);
}

TEST(LocalStore, ExactMatchFirst) {
    LogicalClock clock;
    LocalMemoryStore store({}, clock);
    store.insert(MemoryKind::old_fact, "wool hiking socks");
    store.insert(MemoryKind::old_fact, "summer sausage gift box");
    store.insert(MemoryKind::old_fact, "sausage");
    const auto ctx = store.retrieve(event("summer sausage gift box"), {});
    ASSERT_FALSE(ctx.old_facts.empty());
    EXPECT_EQ(ctx.old_facts[0], "summer sausage gift box");
    // Unrelated item is below the threshold.
    EXPECT_EQ(std::count(ctx.old_facts.begin(), ctx.old_facts.end(), "wool hiking socks"), 0);
}

TEST(LocalStore, InsertDoesNotBumpVersion) {
    LogicalClock clock;
    LocalMemoryStore store({}, clock);
    store.insert(MemoryKind::old_fact, "x");
    EXPECT_EQ(store.version(), 0u);
}

TEST(LocalStore, SessionsPromoteShortTerm) {
    LogicalClock clock;
    LocalMemoryStore store({}, clock);
    store.begin_session("s1");
    store.record_event(event("first"));
    store.begin_session("s2");
    EXPECT_EQ(store.items()[0].kind, MemoryKind::old_fact);
}

TEST(LocalStore, SnapshotRoundtrip) {
    LogicalClock clock;
    LocalMemoryStore a({}, clock);
    a.record_event(event("one"));
    a.insert(MemoryKind::old_fact, "two");
    const auto path = (std::filesystem::temp_directory_path() / "evagent_snapshot_test.jsonl").string();
    a.save_snapshot(path);
    LocalMemoryStore b({}, clock);
    b.load_snapshot(path);
    ASSERT_EQ(b.items().size(), 2u);
    EXPECT_EQ(b.items()[1].text, "two");
    EXPECT_EQ(b.version(), a.version());
    EXPECT_EQ(b.items()[0].embedding, a.items()[0].embedding);
    std::filesystem::remove(path);
    EXPECT_THROW(b.load_snapshot(path), ConfigError);
}

TEST(LocalStoreProperty, RetrieveMatchesBruteForce) {
    std::mt19937_64 rng(31);
    const std::vector<std::string> vocab = {"red", "shoes", "tea", "green", "box", "gift", "water"};
    for (int s = 0; s < 30; ++s) {
        LogicalClock clock;
        LocalStoreConfig cfg;
        cfg.short_term_window = 500;
        LocalMemoryStore store(cfg, clock);
        const int n = static_cast<int>(rng() % 60);
        for (int i = 0; i < n; ++i) {
            std::string t = vocab[rng() % vocab.size()] + " " + vocab[rng() % vocab.size()] + " k" + std::to_string(i);
            store.insert(rng() % 2 ? MemoryKind::old_fact : MemoryKind::short_term, t);
        }
        std::vector<oracle::StoredItem> items;
        for (const auto& m : store.items())
            items.push_back({m.id, m.kind == MemoryKind::old_fact, m.text, m.stored_at.wall_nanos, m.stored_at.seq});
        const auto e = event(vocab[rng() % vocab.size()] + " " + vocab[rng() % vocab.size()]);
        const auto ctx = store.retrieve(e, {4, 8});
        EXPECT_EQ(ctx.old_facts, oracle::brute_force_rank(items, retrieval_query(e), true, 4, 0.1, 256));
        EXPECT_EQ(ctx.short_term, oracle::brute_force_rank(items, retrieval_query(e), false, 8, 0.1, 256));
    }
}

TEST(Summaries, Formats) {
    Event e = event("buy socks", {std::string(300, 'x')});
    e.source = Source::sensor;
    const auto s = summarize_event(e);
    EXPECT_EQ(s.rfind("[sensor] buy socks | obs: ", 0), 0u);
    EXPECT_EQ(s.size(), std::string("[sensor] buy socks | obs: ").size() + 200);
    EXPECT_EQ(retrieval_query(event("a", {"b", "c"})), "a b c");
}
