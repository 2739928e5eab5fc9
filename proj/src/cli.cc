#include "sct/cli.hh"

#include "sct/errors.hh"
#include "sct/monster.hh"
#include "sct/oracle.hh"
#include "sct/serialize.hh"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace sct::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> pieces;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        pieces.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) {
            return pieces;
        }
        start = pos + 1;
    }
}

std::size_t parse_number(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidArgument(std::string(what) + ": \"" + std::string(text) + "\" is not a non-negative integer");
    }
    return value;
}

std::string join(const std::vector<std::size_t>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k > 0 ? "," : "") + std::to_string(values[k]);
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
    }
    return quoted + "\"";
}

std::vector<Cdfa> read_automata(const std::string& list) {
    std::vector<Cdfa> automata;
    for (auto path : split(list, ',')) {
        automata.push_back(read_cdfa_file(std::string(path)));
    }
    return automata;
}

std::string word_to_string(const Cdfa& a, const Word& w) {
    if (w.empty()) {
        return "(empty word)";
    }
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        out += (k > 0 ? " " : "") + a.labels()[w[k]];
    }
    return out;
}

struct Budgets {
    std::uint64_t cells = default_cell_budget;
    std::uint64_t letters = default_letter_budget;
    std::uint64_t words = default_word_budget;
};

void add_budget_flags(CLI::App* cmd, Budgets& budgets) {
    cmd->add_option("--cell-budget", budgets.cells, "Largest states x letters table a construction may build")
        ->capture_default_str();
    cmd->add_option("--letter-budget", budgets.letters, "Largest monster alphabet")->capture_default_str();
}

void print_automaton_summary(std::ostream& out, const std::string& title, const Cdfa& a) {
    out << std::left << std::setw(12) << title << a.state_count() << " states, " << a.letter_count()
        << " letters, " << a.finals().count() << " final\n";
}

} // namespace

std::vector<std::size_t> parse_sizes(std::string_view text) {
    std::vector<std::size_t> sizes;
    for (auto piece : split(text, ',')) {
        const auto n = parse_number(piece, "sizes");
        if (n == 0) {
            throw InvalidArgument("sizes: every size must be positive");
        }
        sizes.push_back(n);
    }
    return sizes;
}

FinalChoice parse_final_choice(std::string_view text, std::span<const std::size_t> sizes) {
    const auto components = split(text, ';');
    if (components.size() != sizes.size()) {
        throw InvalidArgument("finals: " + std::to_string(components.size()) + " components for " +
                              std::to_string(sizes.size()) + " sizes");
    }
    FinalChoice choice;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        StateSet set(sizes[j]);
        if (!components[j].empty()) {
            for (auto piece : split(components[j], ',')) {
                const auto q = parse_number(piece, "finals");
                if (q >= sizes[j]) {
                    throw InvalidArgument("finals: state " + std::to_string(q) + " outside component " +
                                          std::to_string(j + 1) + " of size " + std::to_string(sizes[j]));
                }
                set.insert(static_cast<State>(q));
            }
        }
        choice.push_back(std::move(set));
    }
    return choice;
}

std::vector<Transformation> parse_generators(std::string_view text, std::size_t n) {
    std::vector<Transformation> generators;
    if (text.empty()) {
        return generators;
    }
    for (auto piece : split(text, ';')) {
        std::vector<Point> image;
        for (auto entry : split(piece, ',')) {
            image.push_back(static_cast<Point>(parse_number(entry, "generators")));
        }
        if (image.size() != n) {
            throw InvalidArgument("generators: \"" + std::string(piece) + "\" does not have " + std::to_string(n) +
                                  " entries");
        }
        generators.emplace_back(std::move(image));
    }
    return generators;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"State complexity toolkit: monsters, modifiers, minimization"};
    app.require_subcommand(1);
    Budgets budgets;

    // monster
    std::string sizes_text;
    std::string finals_text;
    std::string out_dir;
    auto* monster_cmd = app.add_subcommand("monster", "Build a k-monster and write its components as JSON");
    monster_cmd->add_option("--sizes", sizes_text, "State counts, e.g. 2,2")->required();
    monster_cmd->add_option("--finals", finals_text, "Final sets, e.g. \"1;1\"")->required();
    monster_cmd->add_option("--out", out_dir, "Directory for monster_<j>.json files");
    monster_cmd->add_option("--letter-budget", budgets.letters, "Largest monster alphabet")->capture_default_str();

    // apply
    std::string modifier_text;
    std::string auto_text;
    std::string dot_path;
    std::string json_path;
    auto* apply_cmd = app.add_subcommand("apply", "Apply a modifier to automata");
    apply_cmd->add_option("--modifier", modifier_text, "Modifier, e.g. star.inter")->required();
    apply_cmd->add_option("--auto", auto_text, "Comma-separated JSON automata")->required();
    apply_cmd->add_option("--dot", dot_path, "Write the result as Graphviz");
    apply_cmd->add_option("--out", json_path, "Write the result as JSON");
    add_budget_flags(apply_cmd, budgets);

    // minimize
    auto* minimize_cmd = app.add_subcommand("minimize", "Minimize an automaton");
    minimize_cmd->add_option("--auto", auto_text, "JSON automaton")->required();
    minimize_cmd->add_option("--dot", dot_path, "Write the minimal automaton as Graphviz");
    minimize_cmd->add_option("--out", json_path, "Write the minimal automaton as JSON");

    // sc
    std::string family_text = "all";
    std::string csv_path;
    unsigned parallel = 1;
    bool no_dedupe = false;
    auto* sc_cmd = app.add_subcommand("sc", "State complexity by sweeping monster final sets");
    sc_cmd->add_option("--modifier", modifier_text, "Modifier, e.g. sroot or star.inter")->required();
    sc_cmd->add_option("--sizes", sizes_text, "State counts, e.g. 2,2")->required();
    sc_cmd->add_option("--family", family_text, "all, canonical or argmax-only")
        ->check(CLI::IsMember({"all", "canonical", "argmax-only"}))
        ->capture_default_str();
    sc_cmd->add_option("--csv", csv_path, "Write every row as CSV");
    sc_cmd->add_option("--parallel", parallel, "Worker threads")->check(CLI::Range(1U, 256U))->capture_default_str();
    sc_cmd->add_flag("--no-dedupe", no_dedupe, "Minimize without merging identical letters");
    add_budget_flags(sc_cmd, budgets);

    // check
    std::string op_text;
    std::size_t max_len = 6;
    auto* check_cmd = app.add_subcommand("check", "Compare a modifier with a membership oracle");
    check_cmd->add_option("--op", op_text, "Operation: union inter xor comp prefin conc star sroot mirror")
        ->required();
    check_cmd->add_option("--auto", auto_text, "Comma-separated JSON automata")->required();
    check_cmd->add_option("--max-len", max_len, "Longest word compared")->capture_default_str();
    check_cmd->add_option("--modifier", modifier_text, "Modifier to check (defaults to the operation's)");
    check_cmd->add_option("--word-budget", budgets.words, "Most words compared")->capture_default_str();
    check_cmd->add_option("--cell-budget", budgets.cells, "Largest states x letters table")->capture_default_str();

    // semigroup
    std::size_t domain = 0;
    std::string generators_text;
    bool list_elements = false;
    auto* semigroup_cmd = app.add_subcommand("semigroup", "Monoid generated by transformations");
    semigroup_cmd->add_option("--n", domain, "Domain size")->required()->check(CLI::Range(1, 15));
    semigroup_cmd->add_option("--generators", generators_text, "Images, e.g. \"1,0,2;1,2,0;1,1,2\"")->required();
    semigroup_cmd->add_flag("--list", list_elements, "Print every element with a generating word");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (monster_cmd->parsed()) {
            MonsterSpec spec;
            spec.sizes = parse_sizes(sizes_text);
            spec.finals = parse_final_choice(finals_text, spec.sizes);
            const auto components = build_monster(spec, budgets.letters);
            out << "monster sizes " << join(spec.sizes) << ", " << spec.alphabet_size() << " letters\n";
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
            }
            for (std::size_t j = 0; j < components.size(); ++j) {
                out << "component " << (j + 1) << ": " << spec.sizes[j] << " states, finals "
                    << spec.finals[j].to_string();
                if (!out_dir.empty()) {
                    const auto path = (std::filesystem::path(out_dir) / ("monster_" + std::to_string(j + 1) + ".json"))
                                          .string();
                    write_text_file(path, to_json(components[j]));
                    out << " -> " << path;
                }
                out << '\n';
            }
            return ok;
        }

        if (apply_cmd->parsed()) {
            const Modifier m = parse_modifier(modifier_text);
            const auto inputs = read_automata(auto_text);
            const Cdfa result = apply(m, inputs, ApplyOptions{budgets.cells});
            const Cdfa minimal = minimize(result);
            out << std::left << std::setw(12) << "modifier" << m.name << '\n';
            print_automaton_summary(out, "result", result);
            out << std::left << std::setw(12) << "accessible" << accessible_part(result).automaton.state_count()
                << " states\n";
            print_automaton_summary(out, "minimal", minimal);
            if (!json_path.empty()) {
                write_text_file(json_path, to_json(result));
            }
            if (!dot_path.empty()) {
                write_text_file(dot_path, to_dot(result, m.name));
            }
            return ok;
        }

        if (minimize_cmd->parsed()) {
            const Cdfa input = read_cdfa_file(auto_text);
            const Cdfa minimal = minimize(input);
            print_automaton_summary(out, "input", input);
            print_automaton_summary(out, "minimal", minimal);
            if (!json_path.empty()) {
                write_text_file(json_path, to_json(minimal));
            }
            if (!dot_path.empty()) {
                write_text_file(dot_path, to_dot(minimal, "minimal"));
            }
            return ok;
        }

        if (sc_cmd->parsed()) {
            const Modifier m = parse_modifier(modifier_text);
            const auto sizes = parse_sizes(sizes_text);
            EngineOptions options;
            options.dedupe = !no_dedupe;
            options.parallel = parallel;
            options.letter_budget = budgets.letters;
            options.apply.cell_budget = budgets.cells;
            const Family family = family_text == "canonical" ? Family::canonical : Family::all;
            const auto report = state_complexity(m, sizes, family, options);

            out << std::left << std::setw(12) << "modifier" << report.modifier << '\n';
            out << std::left << std::setw(12) << "sizes" << join(report.sizes) << '\n';
            for (std::size_t j = 0; j < sizes.size(); ++j) {
                out << std::left << std::setw(14) << ("F" + std::to_string(j + 1));
            }
            out << "min_states\n";
            for (const auto& row : report.rows) {
                if (family_text == "argmax-only" && row.min_states != report.maximum) {
                    continue;
                }
                for (const auto& f : row.finals) {
                    out << std::left << std::setw(14) << f.to_string();
                }
                out << row.min_states << '\n';
            }
            out << std::left << std::setw(12) << "maximum" << report.maximum << '\n';
            out << std::left << std::setw(12) << "argmax";
            for (std::size_t k = 0; k < report.argmax.size(); ++k) {
                out << (k > 0 ? " " : "") << to_string(report.argmax[k]);
            }
            out << '\n';

            if (!csv_path.empty()) {
                std::ostringstream csv;
                for (std::size_t j = 0; j < sizes.size(); ++j) {
                    csv << 'F' << (j + 1) << ',';
                }
                csv << "min_states\n";
                for (const auto& row : report.rows) {
                    for (const auto& f : row.finals) {
                        csv << csv_field(f.to_string()) << ',';
                    }
                    csv << row.min_states << '\n';
                }
                write_text_file(csv_path, csv.str());
            }
            return ok;
        }

        if (check_cmd->parsed()) {
            const Operation op = parse_operation(op_text);
            const Modifier m = parse_modifier(modifier_text.empty() ? op_text : modifier_text);
            const auto inputs = read_automata(auto_text);
            const auto verdict = exhaustive_agree(op, m, inputs, max_len, budgets.words, ApplyOptions{budgets.cells});
            out << std::left << std::setw(12) << "operation" << to_string(op) << '\n';
            out << std::left << std::setw(12) << "modifier" << m.name << '\n';
            out << std::left << std::setw(12) << "max-len" << max_len << '\n';
            if (!verdict) {
                out << "result      pass\n";
                return ok;
            }
            out << "result      counterexample\n";
            out << std::left << std::setw(12) << "word" << word_to_string(inputs.front(), verdict->word) << '\n';
            out << std::left << std::setw(12) << "oracle" << (verdict->oracle_accepts ? "accept" : "reject") << '\n';
            out << std::left << std::setw(12) << "modifier" << (verdict->construction_accepts ? "accept" : "reject")
                << '\n';
            return check_failure;
        }

        if (semigroup_cmd->parsed()) {
            const auto generators = parse_generators(generators_text, domain);
            const auto monoid = closure(domain, generators);
            const std::uint64_t full = transformation_count(domain);
            out << "generators ";
            for (std::size_t k = 0; k < generators.size(); ++k) {
                out << (k > 0 ? " " : "") << generators[k].to_string();
            }
            out << "\nsize       " << monoid.size() << " of " << full << '\n';
            out << "full       " << (monoid.size() == full ? "yes" : "no") << '\n';
            if (list_elements) {
                for (std::size_t k = 0; k < monoid.size(); ++k) {
                    out << monoid.elements[k].to_string() << ' ';
                    if (monoid.words[k].empty()) {
                        out << "1";
                    }
                    for (std::size_t g : monoid.words[k]) {
                        out << 'g' << g;
                    }
                    out << '\n';
                }
            }
            return ok;
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace sct::cli
