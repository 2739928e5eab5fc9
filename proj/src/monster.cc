#include "sct/monster.hh"

#include "sct/errors.hh"

namespace sct {

void MonsterSpec::validate() const {
    if (sizes.empty()) {
        throw InvalidArgument("monster: at least one component is required");
    }
    if (finals.size() != sizes.size()) {
        throw InvalidArgument("monster: " + std::to_string(sizes.size()) + " sizes but " +
                              std::to_string(finals.size()) + " final sets");
    }
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        if (sizes[j] == 0) {
            throw InvalidArgument("monster: component " + std::to_string(j + 1) + " has no states");
        }
        if (finals[j].universe() != sizes[j]) {
            throw InvalidArgument("monster: final set of component " + std::to_string(j + 1) +
                                  " is not over " + std::to_string(sizes[j]) + " states");
        }
    }
}

std::uint64_t MonsterSpec::alphabet_size() const {
    std::uint64_t total = 1;
    for (std::size_t n : sizes) {
        total = saturating_mul(total, saturating_pow(n, n));
    }
    return total;
}

std::vector<Transformation> monster_letter(const MonsterSpec& spec, std::uint64_t letter) {
    if (letter >= spec.alphabet_size()) {
        throw OutOfRange("monster letter " + std::to_string(letter) + " >= alphabet size " +
                         std::to_string(spec.alphabet_size()));
    }
    std::vector<Transformation> tuple;
    tuple.reserve(spec.sizes.size());
    for (std::size_t n : spec.sizes) {
        const std::uint64_t radix = transformation_count(n);
        tuple.push_back(decode(n, letter % radix));
        letter /= radix;
    }
    return tuple;
}

std::uint64_t monster_letter_index(const MonsterSpec& spec, std::span<const Transformation> tuple) {
    if (tuple.size() != spec.sizes.size()) {
        throw InvalidArgument("monster letter: expected " + std::to_string(spec.sizes.size()) + " transformations");
    }
    std::uint64_t index = 0;
    for (std::size_t j = spec.sizes.size(); j-- > 0;) {
        if (tuple[j].size() != spec.sizes[j]) {
            throw InvalidArgument("monster letter: component " + std::to_string(j + 1) + " has the wrong domain");
        }
        index = index * transformation_count(spec.sizes[j]) + encode(tuple[j]);
    }
    return index;
}

std::string letter_label(const MonsterSpec& spec, std::uint64_t letter) {
    std::string label = "[";
    bool first = true;
    for (const auto& t : monster_letter(spec, letter)) {
        if (!first) {
            label += ',';
        }
        const std::string word = t.to_string();
        label += word.substr(1, word.size() - 2);
        first = false;
    }
    label += ']';
    return label;
}

std::vector<Cdfa> build_monster(const MonsterSpec& spec, std::uint64_t letter_budget) {
    spec.validate();
    const std::uint64_t letters = spec.alphabet_size();
    if (letters > letter_budget) {
        throw BudgetExceeded("monster alphabet", letters, letter_budget);
    }
    std::vector<std::string> labels(letters);
    for (std::uint64_t l = 0; l < letters; ++l) {
        labels[l] = letter_label(spec, l);
    }

    std::vector<Cdfa> components;
    std::uint64_t stride = 1;
    for (std::size_t j = 0; j < spec.sizes.size(); ++j) {
        const std::size_t n = spec.sizes[j];
        const std::uint64_t radix = transformation_count(n);
        std::vector<State> table(n * letters);
        for (std::uint64_t l = 0; l < letters; ++l) {
            // Image of state q under this component's transformation: digit q
            // of its index in base n.
            std::uint64_t index = (l / stride) % radix;
            for (std::size_t q = 0; q < n; ++q) {
                table[q * letters + l] = static_cast<State>(index % n);
                index /= n;
            }
        }
        components.emplace_back(letters, n, 0, spec.finals[j], std::move(table), labels);
        stride *= radix;
    }
    return components;
}

} // namespace sct
