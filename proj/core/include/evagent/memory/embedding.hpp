#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evagent/model/errors.hpp"

namespace evagent::memory {

inline constexpr std::size_t kDefaultDimension = 256;

class EmptyText : public Error {
public:
    EmptyText() : Error("cannot embed empty text") {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t a, std::size_t b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

using Vector = std::vector<double>;

// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Splits on anything that is not an ASCII letter/digit (bytes >= 0x80 count
// as word characters so UTF-8 words stay whole) and lowercases ASCII.
std::vector<std::string> tokenize(std::string_view text);

// Bag-of-tokens hashing embedding: each token adds 1 at
// fnv1a64(token) % dimension, then the vector is scaled to unit length.
// Text without any token embeds to the zero vector. Throws EmptyText.
Vector embed(std::string_view text, std::size_t dimension = kDefaultDimension);

// Cosine similarity; 0 when either vector is zero. Throws DimensionMismatch.
double similarity(std::span<const double> u, std::span<const double> v);

}  // namespace evagent::memory
