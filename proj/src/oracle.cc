#include "sct/oracle.hh"

#include "sct/errors.hh"

#include <algorithm>
#include <array>
#include <limits>

namespace sct {

namespace {

struct OperationInfo {
    Operation op;
    std::string_view name;
    std::size_t arity;
};

constexpr std::array<OperationInfo, 9> operation_table{{
    {Operation::union_, "union", 2},
    {Operation::inter, "inter", 2},
    {Operation::xor_, "xor", 2},
    {Operation::comp, "comp", 1},
    {Operation::prefin, "prefin", 1},
    {Operation::conc, "conc", 2},
    {Operation::star, "star", 1},
    {Operation::sroot, "sroot", 1},
    {Operation::mirror, "mirror", 1},
}};

const OperationInfo& info(Operation op) {
    for (const auto& entry : operation_table) {
        if (entry.op == op) {
            return entry;
        }
    }
    throw InvalidArgument("unknown operation");
}

bool in(const Cdfa& a, std::span<const Letter> w) {
    return accepts(a, w);
}

} // namespace

std::size_t arity(Operation op) {
    return info(op).arity;
}

std::string_view to_string(Operation op) {
    return info(op).name;
}

Operation parse_operation(std::string_view name) {
    for (const auto& entry : operation_table) {
        if (entry.name == name) {
            return entry.op;
        }
    }
    throw InvalidArgument("no membership oracle for operation \"" + std::string(name) + "\"");
}

const std::vector<Operation>& all_operations() {
    static const std::vector<Operation> ops = [] {
        std::vector<Operation> out;
        for (const auto& entry : operation_table) {
            out.push_back(entry.op);
        }
        return out;
    }();
    return ops;
}

bool member(Operation op, std::span<const Cdfa> inputs, std::span<const Letter> w) {
    if (inputs.size() != arity(op)) {
        throw InvalidArgument(std::string(to_string(op)) + " takes " + std::to_string(arity(op)) + " languages");
    }
    switch (op) {
    case Operation::union_:
        return in(inputs[0], w) || in(inputs[1], w);
    case Operation::inter:
        return in(inputs[0], w) && in(inputs[1], w);
    case Operation::xor_:
        return in(inputs[0], w) != in(inputs[1], w);
    case Operation::comp:
        return !in(inputs[0], w);
    case Operation::prefin:
        for (std::size_t k = 0; k <= w.size(); ++k) {
            if (in(inputs[0], w.first(k))) {
                return true;
            }
        }
        return false;
    case Operation::conc:
        for (std::size_t k = 0; k <= w.size(); ++k) {
            if (in(inputs[0], w.first(k)) && in(inputs[1], w.subspan(k))) {
                return true;
            }
        }
        return false;
    case Operation::star: {
        // split[j]: w[0, j) is a product of words of L.
        std::vector<bool> split(w.size() + 1, false);
        split[0] = true;
        for (std::size_t j = 1; j <= w.size(); ++j) {
            for (std::size_t i = 0; i < j && !split[j]; ++i) {
                split[j] = split[i] && in(inputs[0], w.subspan(i, j - i));
            }
        }
        return split[w.size()];
    }
    case Operation::sroot: {
        Word doubled(w.begin(), w.end());
        doubled.insert(doubled.end(), w.begin(), w.end());
        return in(inputs[0], doubled);
    }
    case Operation::mirror: {
        Word reversed(w.rbegin(), w.rend());
        return in(inputs[0], reversed);
    }
    }
    throw InvalidArgument("unknown operation");
}

std::optional<Counterexample> exhaustive_agree(Operation op, const Modifier& m, std::span<const Cdfa> inputs,
                                               std::size_t max_len, std::uint64_t word_budget,
                                               const ApplyOptions& apply_options) {
    const Cdfa built = apply(m, inputs, apply_options);
    const std::size_t letters = built.letter_count();

    std::uint64_t total = 0;
    std::uint64_t level = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        total = std::min(total + level, std::numeric_limits<std::uint64_t>::max() - 1);
        level = saturating_mul(level, letters);
    }
    if (total > word_budget) {
        throw BudgetExceeded("oracle comparison up to length " + std::to_string(max_len), total, word_budget);
    }

    for (std::size_t len = 0; len <= max_len; ++len) {
        Word w(len, 0);
        while (true) {
            const bool expected = member(op, inputs, w);
            const bool got = accepts(built, w);
            if (expected != got) {
                return Counterexample{w, expected, got};
            }
            // Next word of this length in lexicographic order.
            std::size_t k = len;
            while (k > 0 && w[k - 1] + 1 == letters) {
                w[--k] = 0;
            }
            if (k == 0) {
                break;
            }
            ++w[k - 1];
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> oracle_check(const Modifier& m, std::string_view op_name, std::span<const Cdfa> inputs,
                                           std::size_t max_len, std::uint64_t word_budget) {
    return exhaustive_agree(parse_operation(op_name), m, inputs, max_len, word_budget);
}

} // namespace sct
