#include "evagent/model/trace.hpp"

#include <algorithm>

#include "evagent/model/errors.hpp"

namespace evagent {

namespace {

class NullTrace final : public TraceSink {
protected:
    void write(const nlohmann::json&) override {}
};

}  // namespace

void TraceSink::emit(std::string_view kind, nlohmann::json fields) {
    if (!fields.is_object()) fields = nlohmann::json{{"detail", std::move(fields)}};
    fields["kind"] = std::string(kind);
    write(fields);
}

TraceSink& TraceSink::null() {
    static NullTrace sink;
    return sink;
}

std::vector<nlohmann::json> MemoryTrace::records() const {
    std::lock_guard lock(mu_);
    return records_;
}

std::size_t MemoryTrace::count(std::string_view kind) const {
    std::lock_guard lock(mu_);
    return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(), [&](const auto& r) {
        return r.value("kind", "") == kind;
    }));
}

void MemoryTrace::clear() {
    std::lock_guard lock(mu_);
    records_.clear();
}

void MemoryTrace::write(const nlohmann::json& record) {
    std::lock_guard lock(mu_);
    records_.push_back(record);
}

FileTrace::FileTrace(const std::string& path) : out_(path, std::ios::app) {
    if (!out_) throw ConfigError("cannot open trace sink '" + path + "'");
}

void FileTrace::write(const nlohmann::json& record) {
    std::lock_guard lock(mu_);
    out_ << record.dump() << '\n';
    out_.flush();
}

}  // namespace evagent
