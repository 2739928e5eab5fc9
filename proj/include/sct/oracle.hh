// oracle.hh -- membership tests for language operations that only ever run
// the base automata, used to validate modifiers independently of any
// construction.

#pragma once

#include "sct/cdfa.hh"
#include "sct/modifier.hh"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace sct {

enum class Operation { union_, inter, xor_, comp, prefin, conc, star, sroot, mirror };

std::size_t arity(Operation op);
std::string_view to_string(Operation op);
/// Throws InvalidArgument for names without an oracle.
Operation parse_operation(std::string_view name);
const std::vector<Operation>& all_operations();

/// Whether `word` belongs to op(L(inputs...)).
bool member(Operation op, std::span<const Cdfa> inputs, std::span<const Letter> word);

struct Counterexample {
    Word word;
    bool oracle_accepts;
    bool construction_accepts;
};

/// Compares op's oracle with the automaton m builds from `inputs` on every
/// word of length <= max_len. Returns the first disagreement in
/// length-lexicographic order, if any.
std::optional<Counterexample> exhaustive_agree(Operation op, const Modifier& m, std::span<const Cdfa> inputs,
                                               std::size_t max_len, std::uint64_t word_budget = default_word_budget,
                                               const ApplyOptions& apply_options = {});

/// exhaustive_agree with the operation given by name.
std::optional<Counterexample> oracle_check(const Modifier& m, std::string_view op_name, std::span<const Cdfa> inputs,
                                           std::size_t max_len, std::uint64_t word_budget = default_word_budget);

} // namespace sct
