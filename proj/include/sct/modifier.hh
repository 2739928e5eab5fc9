// modifier.hh -- modifiers: automaton transformers whose per-letter action
// depends only on the inputs' state configurations and that letter's actions
//
// A k-modifier is four mappings:
//   state_space  sizes of the k input state sets -> size of the output state set
//   initial_of   input configurations -> output initial state
//   finals_of    input configurations -> output final states
//   lift         input configurations and the k actions of one letter ->
//                the action of that letter on the output states
//
// Output states are integers in [0, state_space). The built-ins use these
// encodings:
//   union, inter, xor   pair (q1, q2)          -> q1 * n2 + q2
//   conc                pair (q1, E subset Q2) -> q1 * 2^n2 + mask(E)
//   star, mirror        E subset Q1            -> mask(E)
//   sroot               g : Q1 -> Q1           -> encode(g)
//   comp, prefin, fto1  q                      -> q

#pragma once

#include "sct/cdfa.hh"
#include "sct/state_set.hh"
#include "sct/transform.hh"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sct {

/// The state configuration (Q, i, F) of one automaton.
struct StateConfig {
    std::size_t size = 0;
    State initial = 0;
    StateSet finals;

    static StateConfig of(const Cdfa& a);
};

struct Modifier {
    std::string name;
    std::size_t arity = 1;
    /// Saturates at UINT64_MAX when the space is astronomically large.
    std::function<std::uint64_t(std::span<const std::size_t>)> state_space;
    std::function<State(std::span<const StateConfig>)> initial_of;
    std::function<StateSet(std::span<const StateConfig>)> finals_of;
    std::function<Transformation(std::span<const StateConfig>, std::span<const Transformation>)> lift;
};

/// The configuration of the automaton m would build from inputs with these
/// configurations.
StateConfig output_config(const Modifier& m, std::span<const StateConfig> inputs);

inline constexpr std::uint64_t default_cell_budget = std::uint64_t{1} << 20;

struct ApplyOptions {
    /// Upper bound on output states x letters.
    std::uint64_t cell_budget = default_cell_budget;
};

/// Materializes the full output state space, unreachable states included.
/// Throws InvalidArgument on an arity mismatch, IncomparableAlphabets when the
/// inputs do not share a letter count, BudgetExceeded when the table would be
/// larger than the budget.
Cdfa apply(const Modifier& m, std::span<const Cdfa> inputs, const ApplyOptions& options = {});
Cdfa apply(const Modifier& m, std::initializer_list<Cdfa> inputs, const ApplyOptions& options = {});

/// comp, prefin, union, inter, xor, conc, star, sroot, mirror, fto1.
const std::vector<std::string>& builtin_names();

/// Throws InvalidArgument for an unknown name.
Modifier builtin(std::string_view name);

/// outer o_position inner: inner is plugged into the 1-based `position` of
/// outer; the result has arity outer.arity + inner.arity - 1.
Modifier compose(const Modifier& outer, std::size_t position, const Modifier& inner);

/// Dotted composition chain, read right to left: "star.inter" is star o_1
/// inter, "comp.star.union" is comp o_1 (star o_1 union). A segment may carry
/// an explicit position into the segment to its left: "inter.2:star".
Modifier parse_modifier(std::string_view expression);

/// An n1 x n2 boolean matrix: a subset of Q1 x Q2, the state of star o inter.
/// Entry (x, y) is bit x * n2 + y of the state index.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols);
    static Tableau from_state(std::size_t rows, std::size_t cols, State state);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool at(std::size_t x, std::size_t y) const { return bits_[x * cols_ + y]; }
    void set(std::size_t x, std::size_t y, bool value = true) { bits_[x * cols_ + y] = value; }
    std::size_t count() const noexcept;
    State to_state() const;

    /// Rows separated by '/', e.g. "10/01".
    std::string to_string() const;

    bool operator==(const Tableau&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<bool> bits_;
};

} // namespace sct
