// hash.hh -- hashing of integer sequences used as map keys (internal)

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sct::detail {

struct SequenceHash {
    template <typename T>
    std::size_t operator()(const std::vector<T>& v) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ v.size();
        for (const T& x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace sct::detail
