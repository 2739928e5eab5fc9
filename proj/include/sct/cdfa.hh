// cdfa.hh -- complete deterministic finite automata with integer states
//
// Letters are indices in [0, letter_count). Labels are a parallel display
// array and never take part in any algorithm.

#pragma once

#include "sct/state_set.hh"
#include "sct/transform.hh"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sct {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

class Cdfa {
public:
    /// Validates every invariant: at least one state and one letter, a dense
    /// state_count x letter_count row-major table with in-range targets, a
    /// valid initial state, finals over the state universe. Empty `labels`
    /// means the letters are labelled by their index.
    Cdfa(std::size_t letter_count, std::size_t state_count, State initial, StateSet finals,
         std::vector<State> table, std::vector<std::string> labels = {});

    /// rows[q][a] is the target of state q on letter a.
    static Cdfa from_rows(const std::vector<std::vector<State>>& rows, State initial,
                          std::initializer_list<State> finals, std::vector<std::string> labels = {});

    std::size_t letter_count() const noexcept { return letter_count_; }
    std::size_t state_count() const noexcept { return state_count_; }
    State initial() const noexcept { return initial_; }
    const StateSet& finals() const noexcept { return finals_; }
    bool is_final(State q) const noexcept { return finals_.contains(q); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    State target(State q, Letter a) const noexcept { return table_[std::size_t{q} * letter_count_ + a]; }
    std::span<const State> row(State q) const noexcept {
        return {table_.data() + std::size_t{q} * letter_count_, letter_count_};
    }
    const std::vector<State>& table() const noexcept { return table_; }

    /// The action of letter a on the states, delta^a.
    Transformation action(Letter a) const;

    Cdfa with_finals(StateSet finals) const;

    bool operator==(const Cdfa&) const = default;

private:
    std::size_t letter_count_;
    std::size_t state_count_;
    State initial_;
    StateSet finals_;
    std::vector<State> table_;
    std::vector<std::string> labels_;
};

/// delta^w(initial); throws InvalidLetter on an out-of-range letter.
State run(const Cdfa& a, std::span<const Letter> word);
bool accepts(const Cdfa& a, std::span<const Letter> word);

struct AccessiblePart {
    Cdfa automaton;
    /// original_of[new state] = state of the input automaton.
    std::vector<State> original_of;
};

/// Reachable states renumbered in breadth-first discovery order (letters in
/// index order), initial state 0.
AccessiblePart accessible_part(const Cdfa& a);

/// Nerode classes of all states (reachable or not) by Moore refinement.
struct Partition {
    std::vector<std::uint32_t> block_of;
    std::size_t block_count = 0;
};
Partition moore_partition(const Cdfa& a);

/// Minimal automaton: accessible part, Moore refinement, quotient, then
/// canonical breadth-first numbering from the initial state.
Cdfa minimize(const Cdfa& a);

/// L(a) == L(b); throws IncomparableAlphabets on a letter_count mismatch.
bool equivalent(const Cdfa& a, const Cdfa& b);

/// A word accepted by exactly one of a and b, shortest first, if any.
std::optional<Word> distinguishing_word(const Cdfa& a, const Cdfa& b);

/// Letter a of the input becomes letter sigma[a] of the result.
Cdfa rename_letters(const Cdfa& a, std::span<const Letter> sigma);

/// Keeps the listed letters, in the given order; recognizes L(a) intersected
/// with keep*.
Cdfa restrict_alphabet(const Cdfa& a, std::span<const Letter> keep);

inline constexpr std::uint64_t default_word_budget = 2'000'000;

/// Accepted words of length <= max_len in length-lexicographic order.
/// Throws BudgetExceeded when more than `budget` words would be visited.
std::vector<Word> enumerate_accepted(const Cdfa& a, std::size_t max_len,
                                     std::uint64_t budget = default_word_budget);

struct DedupedLetters {
    Cdfa automaton;
    /// class_of[original letter] = representative letter in the result.
    std::vector<Letter> class_of;
};

/// Merges letters with identical columns. Changes the language, preserves the
/// size of the minimal automaton.
DedupedLetters dedupe_letters(const Cdfa& a);

} // namespace sct
