#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evagent {

// Root of every error thrown by the runtime.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string reason)
        : Error("parse error at " + std::to_string(position) + ": " + reason),
          position_(position), reason_(std::move(reason)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

class SchemaError : public Error {
public:
    SchemaError(std::string field, std::string reason)
        : Error("schema error in '" + field + "': " + reason),
          field_(std::move(field)), reason_(std::move(reason)) {}

    const std::string& field() const noexcept { return field_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string field_;
    std::string reason_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Raised when an episode violates the memory refresh audit.
class AuditError : public Error {
public:
    using Error::Error;
};

}  // namespace evagent
