#include "sct/engine.hh"

#include "sct/errors.hh"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace sct {

namespace {

/// Per-component canonical final sets for one state count.
std::vector<StateSet> canonical_sets(std::size_t n) {
    std::vector<StateSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto set = StateSet::from_mask(n, mask);
        const std::size_t s = set.count();
        const std::uint64_t representative =
            set.contains(0) ? ((std::uint64_t{1} << s) - 1) : (((std::uint64_t{1} << s) - 1) << 1U);
        if (mask == representative) {
            out.push_back(set);
        }
    }
    return out;
}

std::vector<Cdfa> monster_for(std::span<const std::size_t> sizes, std::uint64_t letter_budget) {
    MonsterSpec spec;
    spec.sizes.assign(sizes.begin(), sizes.end());
    for (std::size_t n : sizes) {
        spec.finals.emplace_back(n);
    }
    return build_monster(spec, letter_budget);
}

std::vector<Cdfa> with_finals(const std::vector<Cdfa>& monster, const FinalChoice& finals) {
    if (finals.size() != monster.size()) {
        throw InvalidArgument("final choice has " + std::to_string(finals.size()) + " sets for " +
                              std::to_string(monster.size()) + " components");
    }
    std::vector<Cdfa> out;
    out.reserve(monster.size());
    for (std::size_t j = 0; j < monster.size(); ++j) {
        if (finals[j].universe() != monster[j].state_count()) {
            throw InvalidArgument("final set " + finals[j].to_string() + " is not over " +
                                  std::to_string(monster[j].state_count()) + " states");
        }
        out.push_back(monster[j].with_finals(finals[j]));
    }
    return out;
}

std::uint64_t binomial2(std::uint64_t n) {
    return n * (n - 1) / 2;
}

} // namespace

std::string to_string(const FinalChoice& choice) {
    std::string out;
    for (std::size_t j = 0; j < choice.size(); ++j) {
        if (j > 0) {
            out += ';';
        }
        out += choice[j].to_string();
    }
    return out;
}

std::vector<FinalChoice> final_choices(std::span<const std::size_t> sizes, Family family) {
    std::vector<std::vector<StateSet>> per_component;
    for (std::size_t n : sizes) {
        if (n == 0 || n > 20) {
            throw InvalidArgument("final_choices: component size " + std::to_string(n) + " outside [1,20]");
        }
        if (family == Family::canonical) {
            per_component.push_back(canonical_sets(n));
        } else {
            std::vector<StateSet> sets;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                sets.push_back(StateSet::from_mask(n, mask));
            }
            per_component.push_back(std::move(sets));
        }
    }
    std::vector<FinalChoice> out;
    std::vector<std::size_t> digit(sizes.size(), 0);
    while (true) {
        FinalChoice choice;
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            choice.push_back(per_component[j][digit[j]]);
        }
        out.push_back(std::move(choice));
        std::size_t j = 0;
        while (j < sizes.size() && ++digit[j] == per_component[j].size()) {
            digit[j++] = 0;
        }
        if (j == sizes.size()) {
            break;
        }
    }
    return out;
}

std::size_t minimized_size(const Modifier& m, std::span<const Cdfa> inputs, const EngineOptions& options) {
    const Cdfa built = apply(m, inputs, options.apply);
    if (options.dedupe) {
        return minimize(dedupe_letters(built).automaton).state_count();
    }
    return minimize(built).state_count();
}

ComplexityReport state_complexity(const Modifier& m, std::span<const std::size_t> sizes,
                                  std::span<const FinalChoice> family, const EngineOptions& options) {
    if (sizes.size() != m.arity) {
        throw InvalidArgument("state_complexity: " + m.name + " has arity " + std::to_string(m.arity) + ", got " +
                              std::to_string(sizes.size()) + " sizes");
    }
    const auto monster = monster_for(sizes, options.letter_budget);

    ComplexityReport report;
    report.modifier = m.name;
    report.sizes.assign(sizes.begin(), sizes.end());
    report.rows.resize(family.size());
    std::vector<std::exception_ptr> failures(family.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < family.size(); k = next++) {
            try {
                const auto inputs = with_finals(monster, family[k]);
                report.rows[k] = {family[k], minimized_size(m, inputs, options)};
            } catch (const BudgetExceeded& e) {
                failures[k] = std::make_exception_ptr(e.with_context("F=" + to_string(family[k]) + ": "));
            } catch (...) {
                failures[k] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1U, options.parallel);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    for (const auto& row : report.rows) {
        report.maximum = std::max(report.maximum, row.min_states);
    }
    for (const auto& row : report.rows) {
        if (row.min_states == report.maximum) {
            report.argmax.push_back(row.finals);
        }
    }
    return report;
}

ComplexityReport state_complexity(const Modifier& m, std::span<const std::size_t> sizes, Family family,
                                  const EngineOptions& options) {
    const auto choices = final_choices(sizes, family);
    return state_complexity(m, sizes, choices, options);
}

WitnessReport witness(const Modifier& m, std::span<const std::size_t> sizes, const FinalChoice& finals,
                      const EngineOptions& options) {
    if (sizes.size() != m.arity) {
        throw InvalidArgument("witness: " + m.name + " has arity " + std::to_string(m.arity));
    }
    const auto inputs = with_finals(monster_for(sizes, options.letter_budget), finals);
    const Cdfa built = apply(m, inputs, options.apply);
    const auto reachable = accessible_part(built);
    const Cdfa& trimmed = reachable.automaton;
    const Partition partition =
        moore_partition(options.dedupe ? dedupe_letters(trimmed).automaton : trimmed);

    std::vector<std::vector<State>> classes(partition.block_count);
    for (State q = 0; q < trimmed.state_count(); ++q) {
        classes[partition.block_of[q]].push_back(reachable.original_of[q]);
    }

    WitnessReport report{minimize(built), built.state_count(), trimmed.state_count(), {}, 0};
    for (auto& c : classes) {
        if (c.size() > 1) {
            std::sort(c.begin(), c.end());
            report.merged_classes.push_back(std::move(c));
        }
    }
    std::sort(report.merged_classes.begin(), report.merged_classes.end());
    report.final_states = report.minimal.finals().count();
    return report;
}

ClosedForm parse_closed_form(std::string_view name) {
    if (name == "star-inter") {
        return ClosedForm::star_inter;
    }
    if (name == "sroot") {
        return ClosedForm::sroot;
    }
    throw InvalidArgument("no closed form for \"" + std::string(name) + "\"");
}

std::uint64_t closed_form_value(ClosedForm form, std::span<const std::size_t> sizes) {
    switch (form) {
    case ClosedForm::star_inter: {
        if (sizes.size() != 2) {
            throw InvalidArgument("star-inter closed form takes two sizes");
        }
        const std::uint64_t cells = std::uint64_t{sizes[0]} * sizes[1];
        if (cells < 2 || cells > 62) {
            throw InvalidArgument("star-inter closed form needs 2 <= n1*n2 <= 62");
        }
        return 3 * (std::uint64_t{1} << (cells - 2));
    }
    case ClosedForm::sroot: {
        if (sizes.size() != 1 || sizes[0] == 0) {
            throw InvalidArgument("sroot closed form takes one positive size");
        }
        const std::size_t n = sizes[0];
        if (n == 2) {
            return 2;
        }
        return transformation_count(n) - binomial2(n);
    }
    }
    throw InvalidArgument("unknown closed form");
}

ClosedFormCheck closed_form_check(ClosedForm form, std::span<const std::size_t> sizes,
                                  const EngineOptions& options) {
    const Modifier m = form == ClosedForm::star_inter ? parse_modifier("star.inter") : builtin("sroot");
    ClosedFormCheck check;
    check.formula = closed_form_value(form, sizes);
    check.engine = state_complexity(m, sizes, Family::all, options).maximum;
    check.match = check.engine == check.formula;
    return check;
}

SqrtScan two_letter_sqrt_scan(std::size_t n, std::uint64_t automaton_budget) {
    const std::uint64_t actions = transformation_count(n);
    const std::uint64_t automata = saturating_mul(saturating_mul(actions, actions), std::uint64_t{1} << n);
    if (automata > automaton_budget) {
        throw BudgetExceeded("two-letter square-root scan at n=" + std::to_string(n), automata, automaton_budget);
    }
    const Modifier sroot = builtin("sroot");
    SqrtScan scan;
    scan.bound = transformation_count(n) - binomial2(n);
    for (std::uint64_t a = 0; a < actions; ++a) {
        const auto first = decode(n, a);
        for (std::uint64_t b = 0; b < actions; ++b) {
            const auto second = decode(n, b);
            std::vector<State> table(2 * n);
            for (std::size_t q = 0; q < n; ++q) {
                table[2 * q] = first(static_cast<Point>(q));
                table[2 * q + 1] = second(static_cast<Point>(q));
            }
            for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
                const Cdfa base(2, n, 0, StateSet::from_mask(n, f), table);
                const Cdfa root = apply(sroot, {base});
                scan.maximum = std::max(scan.maximum, minimize(root).state_count());
                ++scan.automata;
            }
        }
    }
    scan.strictly_below = scan.maximum < scan.bound;
    return scan;
}

} // namespace sct
