// state_set.hh -- sets of states over a fixed universe [0, n)

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace sct {

using State = std::uint32_t;

/// A subset of [0, universe) with bitset semantics.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe) : bits_(universe, false) {}

    /// Throws OutOfRange if a member is not below `universe`.
    static StateSet of(std::size_t universe, std::initializer_list<State> members);
    static StateSet of(std::size_t universe, const std::vector<State>& members);
    /// Members are the set bits of `mask`; `universe` must be at most 64.
    static StateSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const noexcept { return bits_.size(); }
    bool contains(State q) const noexcept { return q < bits_.size() && bits_[q]; }
    void insert(State q);
    void erase(State q);

    std::size_t count() const noexcept;
    bool empty() const noexcept { return count() == 0; }
    std::vector<State> members() const;
    /// Only valid when universe() <= 64.
    std::uint64_t mask() const;
    StateSet complement() const;

    /// "{0,2}" notation.
    std::string to_string() const;

    bool operator==(const StateSet&) const = default;

private:
    std::vector<bool> bits_;
};

/// Multiplication that clamps to UINT64_MAX instead of wrapping.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) noexcept {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        result = saturating_mul(result, base);
    }
    return result;
}

} // namespace sct
