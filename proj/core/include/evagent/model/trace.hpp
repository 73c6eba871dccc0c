#pragma once

#include <fstream>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace evagent {

// Line-delimited JSON sink for observability records. Every record carries
// a "kind" field naming what happened.
class TraceSink {
public:
    virtual ~TraceSink() = default;

    void emit(std::string_view kind, nlohmann::json fields = nlohmann::json::object());

    // Shared sink that discards everything.
    static TraceSink& null();

protected:
    virtual void write(const nlohmann::json& record) = 0;
};

class MemoryTrace final : public TraceSink {
public:
    std::vector<nlohmann::json> records() const;
    std::size_t count(std::string_view kind) const;
    void clear();

protected:
    void write(const nlohmann::json& record) override;

private:
    mutable std::mutex mu_;
    std::vector<nlohmann::json> records_;
};

class FileTrace final : public TraceSink {
public:
    // Throws ConfigError if the file cannot be opened.
    explicit FileTrace(const std::string& path);

protected:
    void write(const nlohmann::json& record) override;

private:
    std::mutex mu_;
    std::ofstream out_;
};

}  // namespace evagent
