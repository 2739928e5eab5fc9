// monster.hh -- k-monsters: k automata over the alphabet of all k-tuples of
// transformations, letter (g1, ..., gk) acting as gj on automaton j.

#pragma once

#include "sct/cdfa.hh"
#include "sct/state_set.hh"
#include "sct/transform.hh"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sct {

struct MonsterSpec {
    std::vector<std::size_t> sizes;
    std::vector<StateSet> finals;

    /// Throws InvalidArgument unless there is at least one component, sizes
    /// are positive and each final set lives over its component's states.
    void validate() const;
    /// Product of n_j^n_j, saturating.
    std::uint64_t alphabet_size() const;
};

inline constexpr std::uint64_t default_letter_budget = 50'000;

/// The letter index decodes by mixed radix over per-component transformation
/// indices, component 1 least significant. Throws BudgetExceeded when the
/// alphabet is larger than `letter_budget`.
std::vector<Cdfa> build_monster(const MonsterSpec& spec, std::uint64_t letter_budget = default_letter_budget);

/// The transformation tuple a letter stands for.
std::vector<Transformation> monster_letter(const MonsterSpec& spec, std::uint64_t letter);
std::uint64_t monster_letter_index(const MonsterSpec& spec, std::span<const Transformation> tuple);

/// Image words joined by commas, e.g. "[11,10]".
std::string letter_label(const MonsterSpec& spec, std::uint64_t letter);

} // namespace sct
