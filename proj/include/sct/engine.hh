// engine.hh -- state complexity of describable operations, computed as the
// maximum over final-state choices of the minimal size of the modifier
// applied to a monster.

#pragma once

#include "sct/cdfa.hh"
#include "sct/modifier.hh"
#include "sct/monster.hh"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sct {

/// One final-state set per monster component.
using FinalChoice = std::vector<StateSet>;

/// "{1};{0,1}".
std::string to_string(const FinalChoice& choice);

enum class Family {
    /// Every choice, 2^(n1 + ... + nk) of them.
    all,
    /// One representative per component class (size of F, whether 0 is in F):
    /// {0, ..., s-1} when 0 is final, {1, ..., s} otherwise.
    canonical,
};

/// Choices in bitmask order, component 1 least significant.
std::vector<FinalChoice> final_choices(std::span<const std::size_t> sizes, Family family = Family::all);

struct EngineOptions {
    /// Merge letters with identical columns before minimizing.
    bool dedupe = true;
    /// Worker threads for the sweep; rows come back in family order regardless.
    unsigned parallel = 1;
    std::uint64_t letter_budget = default_letter_budget;
    ApplyOptions apply;
};

struct ComplexityRow {
    FinalChoice finals;
    std::size_t min_states = 0;
};

struct ComplexityReport {
    std::string modifier;
    std::vector<std::size_t> sizes;
    std::vector<ComplexityRow> rows;
    std::size_t maximum = 0;
    std::vector<FinalChoice> argmax;
};

/// Throws BudgetExceeded naming the offending choice.
ComplexityReport state_complexity(const Modifier& m, std::span<const std::size_t> sizes,
                                  std::span<const FinalChoice> family, const EngineOptions& options = {});
ComplexityReport state_complexity(const Modifier& m, std::span<const std::size_t> sizes,
                                  Family family = Family::all, const EngineOptions& options = {});

/// #Min of m applied to these automata.
std::size_t minimized_size(const Modifier& m, std::span<const Cdfa> inputs, const EngineOptions& options = {});

struct WitnessReport {
    Cdfa minimal;
    std::size_t full_states = 0;
    std::size_t accessible_states = 0;
    /// Equivalence classes of accessible states with more than one member,
    /// in the state numbering of the unminimized construction.
    std::vector<std::vector<State>> merged_classes;
    std::size_t final_states = 0;
};

WitnessReport witness(const Modifier& m, std::span<const std::size_t> sizes, const FinalChoice& finals,
                      const EngineOptions& options = {});

enum class ClosedForm { star_inter, sroot };

/// Throws InvalidArgument for a name other than "star-inter" or "sroot".
ClosedForm parse_closed_form(std::string_view name);

/// star-inter: 3/4 * 2^(n1 n2), for n1 n2 >= 2. sroot: n^n - C(n, 2) for
/// n > 2, 2 for n = 2, 1 for n = 1.
std::uint64_t closed_form_value(ClosedForm form, std::span<const std::size_t> sizes);

struct ClosedFormCheck {
    std::uint64_t engine = 0;
    std::uint64_t formula = 0;
    bool match = false;
};

ClosedFormCheck closed_form_check(ClosedForm form, std::span<const std::size_t> sizes,
                                  const EngineOptions& options = {});

struct SqrtScan {
    std::size_t maximum = 0;
    /// n^n - C(n, 2).
    std::uint64_t bound = 0;
    bool strictly_below = false;
    std::uint64_t automata = 0;
};

inline constexpr std::uint64_t default_scan_budget = 10'000;

/// Square root of every complete 2-letter automaton on [n] with initial state
/// 0 and every final set. Throws BudgetExceeded past `automaton_budget`.
SqrtScan two_letter_sqrt_scan(std::size_t n, std::uint64_t automaton_budget = default_scan_budget);

} // namespace sct
