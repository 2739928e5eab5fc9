#include "sct/modifier.hh"

#include "sct/errors.hh"

#include <algorithm>
#include <charconv>

namespace sct {

namespace {

using Configs = std::span<const StateConfig>;
using Actions = std::span<const Transformation>;

std::uint64_t pow2(std::size_t n) {
    return saturating_pow(2, n);
}

/// Image of the subset `mask` under `delta`.
std::uint64_t image_mask(const Transformation& delta, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::size_t q = 0; mask != 0; ++q, mask >>= 1U) {
        if (mask & 1U) {
            out |= std::uint64_t{1} << delta(static_cast<Point>(q));
        }
    }
    return out;
}

Transformation to_transformation(std::vector<std::uint64_t> image) {
    return Transformation(std::vector<Point>(image.begin(), image.end()));
}

Modifier make_comp() {
    Modifier m;
    m.name = "comp";
    m.arity = 1;
    m.state_space = [](std::span<const std::size_t> n) -> std::uint64_t { return n[0]; };
    m.initial_of = [](Configs c) { return c[0].initial; };
    m.finals_of = [](Configs c) { return c[0].finals.complement(); };
    m.lift = [](Configs, Actions d) { return d[0]; };
    return m;
}

Modifier make_prefin() {
    Modifier m;
    m.name = "prefin";
    m.arity = 1;
    m.state_space = [](std::span<const std::size_t> n) -> std::uint64_t { return n[0]; };
    m.initial_of = [](Configs c) { return c[0].initial; };
    m.finals_of = [](Configs c) { return c[0].finals; };
    m.lift = [](Configs c, Actions d) {
        std::vector<Point> image(c[0].size);
        for (State q = 0; q < c[0].size; ++q) {
            image[q] = c[0].finals.contains(q) ? q : d[0](q);
        }
        return Transformation(std::move(image));
    };
    return m;
}

/// union, inter and xor share everything but the final states.
template <typename Accept>
Modifier make_product(std::string name, Accept accept) {
    Modifier m;
    m.name = std::move(name);
    m.arity = 2;
    m.state_space = [](std::span<const std::size_t> n) { return saturating_mul(n[0], n[1]); };
    m.initial_of = [](Configs c) { return static_cast<State>(c[0].initial * c[1].size + c[1].initial); };
    m.finals_of = [accept](Configs c) {
        StateSet f(c[0].size * c[1].size);
        for (State p = 0; p < c[0].size; ++p) {
            for (State q = 0; q < c[1].size; ++q) {
                if (accept(c[0].finals.contains(p), c[1].finals.contains(q))) {
                    f.insert(static_cast<State>(p * c[1].size + q));
                }
            }
        }
        return f;
    };
    m.lift = [](Configs c, Actions d) {
        const std::size_t n2 = c[1].size;
        std::vector<Point> image(c[0].size * n2);
        for (State p = 0; p < c[0].size; ++p) {
            for (State q = 0; q < n2; ++q) {
                image[p * n2 + q] = static_cast<Point>(d[0](p) * n2 + d[1](q));
            }
        }
        return Transformation(std::move(image));
    };
    return m;
}

// Concatenation in the form that recognizes L1.L2: the second component
// collects active states of A2, and i2 is added whenever the first component
// is final (including initially).
Modifier make_conc() {
    Modifier m;
    m.name = "conc";
    m.arity = 2;
    m.state_space = [](std::span<const std::size_t> n) { return saturating_mul(n[0], pow2(n[1])); };
    m.initial_of = [](Configs c) {
        const std::uint64_t set = c[0].finals.contains(c[0].initial) ? (std::uint64_t{1} << c[1].initial) : 0;
        return static_cast<State>(c[0].initial * pow2(c[1].size) + set);
    };
    m.finals_of = [](Configs c) {
        const std::uint64_t subsets = pow2(c[1].size);
        const std::uint64_t f2 = c[1].finals.mask();
        StateSet f(c[0].size * subsets);
        for (std::uint64_t p = 0; p < c[0].size; ++p) {
            for (std::uint64_t e = 0; e < subsets; ++e) {
                if (e & f2) {
                    f.insert(static_cast<State>(p * subsets + e));
                }
            }
        }
        return f;
    };
    m.lift = [](Configs c, Actions d) {
        const std::uint64_t subsets = pow2(c[1].size);
        const std::uint64_t restart = std::uint64_t{1} << c[1].initial;
        std::vector<std::uint64_t> image(c[0].size * subsets);
        for (std::uint64_t p = 0; p < c[0].size; ++p) {
            const Point p2 = d[0](static_cast<Point>(p));
            const bool hit = c[0].finals.contains(p2);
            for (std::uint64_t e = 0; e < subsets; ++e) {
                std::uint64_t e2 = image_mask(d[1], e);
                if (hit) {
                    e2 |= restart;
                }
                image[p * subsets + e] = p2 * subsets + e2;
            }
        }
        return to_transformation(std::move(image));
    };
    return m;
}

Modifier make_star() {
    Modifier m;
    m.name = "star";
    m.arity = 1;
    m.state_space = [](std::span<const std::size_t> n) { return pow2(n[0]); };
    m.initial_of = [](Configs) { return State{0}; };
    m.finals_of = [](Configs c) {
        const std::uint64_t subsets = pow2(c[0].size);
        const std::uint64_t f = c[0].finals.mask();
        StateSet out(subsets);
        for (std::uint64_t e = 0; e < subsets; ++e) {
            if (e == 0 || (e & f)) {
                out.insert(static_cast<State>(e));
            }
        }
        return out;
    };
    m.lift = [](Configs c, Actions d) {
        const std::uint64_t subsets = pow2(c[0].size);
        const std::uint64_t f = c[0].finals.mask();
        const std::uint64_t start = std::uint64_t{1} << c[0].initial;
        // A set meeting the finals also contains the initial state.
        auto close = [&](std::uint64_t e) { return (e & f) ? (e | start) : e; };
        std::vector<std::uint64_t> image(subsets);
        image[0] = close(std::uint64_t{1} << d[0](c[0].initial));
        for (std::uint64_t e = 1; e < subsets; ++e) {
            image[e] = close(image_mask(d[0], e));
        }
        return to_transformation(std::move(image));
    };
    return m;
}

Modifier make_sroot() {
    Modifier m;
    m.name = "sroot";
    m.arity = 1;
    m.state_space = [](std::span<const std::size_t> n) { return saturating_pow(n[0], n[0]); };
    m.initial_of = [](Configs c) { return static_cast<State>(encode(make_identity(c[0].size))); };
    m.finals_of = [](Configs c) {
        const std::size_t n = c[0].size;
        const std::uint64_t count = transformation_count(n);
        StateSet out(count);
        for (std::uint64_t s = 0; s < count; ++s) {
            const auto g = decode(n, s);
            if (c[0].finals.contains(g(g(c[0].initial)))) {
                out.insert(static_cast<State>(s));
            }
        }
        return out;
    };
    // g -> delta o g, i.e. g is applied first: the state reached by w is delta^w.
    m.lift = [](Configs c, Actions d) {
        const std::size_t n = c[0].size;
        const std::uint64_t count = transformation_count(n);
        std::vector<std::uint64_t> image(count);
        std::vector<Point> g(n);
        for (std::uint64_t s = 0; s < count; ++s) {
            std::uint64_t rest = s;
            for (std::size_t x = 0; x < n; ++x) {
                g[x] = static_cast<Point>(rest % n);
                rest /= n;
            }
            std::uint64_t target = 0;
            for (std::size_t x = n; x-- > 0;) {
                target = target * n + d[0](g[x]);
            }
            image[s] = target;
        }
        return to_transformation(std::move(image));
    };
    return m;
}

Modifier make_mirror() {
    Modifier m;
    m.name = "mirror";
    m.arity = 1;
    m.state_space = [](std::span<const std::size_t> n) { return pow2(n[0]); };
    m.initial_of = [](Configs c) { return static_cast<State>(c[0].finals.mask()); };
    m.finals_of = [](Configs c) {
        const std::uint64_t subsets = pow2(c[0].size);
        const std::uint64_t start = std::uint64_t{1} << c[0].initial;
        StateSet out(subsets);
        for (std::uint64_t e = 0; e < subsets; ++e) {
            if (e & start) {
                out.insert(static_cast<State>(e));
            }
        }
        return out;
    };
    // E -> preimage of E under delta.
    m.lift = [](Configs c, Actions d) {
        const std::size_t n = c[0].size;
        const std::uint64_t subsets = pow2(n);
        std::vector<std::uint64_t> image(subsets);
        for (std::uint64_t e = 0; e < subsets; ++e) {
            std::uint64_t pre = 0;
            for (std::size_t q = 0; q < n; ++q) {
                if ((e >> d[0](static_cast<Point>(q))) & 1U) {
                    pre |= std::uint64_t{1} << q;
                }
            }
            image[e] = pre;
        }
        return to_transformation(std::move(image));
    };
    return m;
}

// Redirects every transition leaving a final state to state 1 when the
// automaton has a state 1. A modifier that is not an operation on languages:
// the result depends on the state names.
Modifier make_fto1() {
    Modifier m;
    m.name = "fto1";
    m.arity = 1;
    m.state_space = [](std::span<const std::size_t> n) -> std::uint64_t { return n[0]; };
    m.initial_of = [](Configs c) { return c[0].initial; };
    m.finals_of = [](Configs c) { return c[0].finals; };
    m.lift = [](Configs c, Actions d) {
        std::vector<Point> image(c[0].size);
        for (State q = 0; q < c[0].size; ++q) {
            image[q] = (c[0].finals.contains(q) && c[0].size > 1) ? Point{1} : d[0](q);
        }
        return Transformation(std::move(image));
    };
    return m;
}

std::size_t parse_position(std::string_view text, std::string_view expression) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw InvalidArgument("modifier expression \"" + std::string(expression) + "\": bad position \"" +
                              std::string(text) + "\"");
    }
    return value;
}

} // namespace

StateConfig StateConfig::of(const Cdfa& a) {
    return {a.state_count(), a.initial(), a.finals()};
}

StateConfig output_config(const Modifier& m, std::span<const StateConfig> inputs) {
    std::vector<std::size_t> sizes;
    sizes.reserve(inputs.size());
    for (const auto& c : inputs) {
        sizes.push_back(c.size);
    }
    return {static_cast<std::size_t>(m.state_space(sizes)), m.initial_of(inputs), m.finals_of(inputs)};
}

Cdfa apply(const Modifier& m, std::span<const Cdfa> inputs, const ApplyOptions& options) {
    if (inputs.size() != m.arity) {
        throw InvalidArgument("apply " + m.name + ": expects " + std::to_string(m.arity) + " automata, got " +
                              std::to_string(inputs.size()));
    }
    const std::size_t letters = inputs.front().letter_count();
    for (const auto& a : inputs) {
        if (a.letter_count() != letters) {
            throw IncomparableAlphabets("apply " + m.name + ": inputs do not share an alphabet");
        }
    }
    std::vector<std::size_t> sizes;
    std::vector<StateConfig> configs;
    for (const auto& a : inputs) {
        sizes.push_back(a.state_count());
        configs.push_back(StateConfig::of(a));
    }
    const std::uint64_t states = m.state_space(sizes);
    const std::uint64_t cells = saturating_mul(states, letters);
    if (cells > options.cell_budget) {
        throw BudgetExceeded("apply " + m.name + " (" + std::to_string(states) + " states x " +
                                 std::to_string(letters) + " letters)",
                             cells, options.cell_budget);
    }

    std::vector<State> table(states * letters);
    std::vector<Transformation> actions(inputs.size());
    for (Letter l = 0; l < letters; ++l) {
        for (std::size_t k = 0; k < inputs.size(); ++k) {
            actions[k] = inputs[k].action(l);
        }
        const Transformation column = m.lift(configs, actions);
        if (column.size() != states) {
            throw Error("apply " + m.name + ": lifted action has the wrong domain");
        }
        for (std::uint64_t s = 0; s < states; ++s) {
            table[s * letters + l] = column(static_cast<Point>(s));
        }
    }
    return Cdfa(letters, states, m.initial_of(configs), m.finals_of(configs), std::move(table),
                inputs.front().labels());
}

Cdfa apply(const Modifier& m, std::initializer_list<Cdfa> inputs, const ApplyOptions& options) {
    return apply(m, std::span<const Cdfa>(inputs.begin(), inputs.size()), options);
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"comp", "prefin", "union", "inter", "xor",
                                                "conc", "star",   "sroot", "mirror", "fto1"};
    return names;
}

Modifier builtin(std::string_view name) {
    if (name == "comp") {
        return make_comp();
    }
    if (name == "prefin") {
        return make_prefin();
    }
    if (name == "union") {
        return make_product("union", [](bool p, bool q) { return p || q; });
    }
    if (name == "inter") {
        return make_product("inter", [](bool p, bool q) { return p && q; });
    }
    if (name == "xor") {
        return make_product("xor", [](bool p, bool q) { return p != q; });
    }
    if (name == "conc") {
        return make_conc();
    }
    if (name == "star") {
        return make_star();
    }
    if (name == "sroot") {
        return make_sroot();
    }
    if (name == "mirror") {
        return make_mirror();
    }
    if (name == "fto1") {
        return make_fto1();
    }
    throw InvalidArgument("unknown modifier \"" + std::string(name) + "\"");
}

Modifier compose(const Modifier& outer, std::size_t position, const Modifier& inner) {
    if (position < 1 || position > outer.arity) {
        throw InvalidArgument("compose: position " + std::to_string(position) + " outside [1," +
                              std::to_string(outer.arity) + "] for " + outer.name);
    }
    const std::size_t first = position - 1;
    const std::size_t width = inner.arity;

    // Replaces inputs [first, first + width) by the configuration inner builds from them.
    auto hat_configs = [=](Configs c) {
        std::vector<StateConfig> out(c.begin(), c.begin() + first);
        out.push_back(output_config(inner, c.subspan(first, width)));
        out.insert(out.end(), c.begin() + first + width, c.end());
        return out;
    };

    Modifier m;
    m.name = outer.name + "." + (position == 1 ? "" : std::to_string(position) + ":") + inner.name;
    m.arity = outer.arity + inner.arity - 1;
    m.state_space = [=](std::span<const std::size_t> n) {
        std::vector<std::size_t> sizes(n.begin(), n.begin() + first);
        const std::uint64_t inner_states = inner.state_space(n.subspan(first, width));
        sizes.push_back(static_cast<std::size_t>(std::min<std::uint64_t>(inner_states, SIZE_MAX)));
        sizes.insert(sizes.end(), n.begin() + first + width, n.end());
        return outer.state_space(sizes);
    };
    m.initial_of = [=](Configs c) { return outer.initial_of(hat_configs(c)); };
    m.finals_of = [=](Configs c) { return outer.finals_of(hat_configs(c)); };
    m.lift = [=](Configs c, Actions d) {
        std::vector<Transformation> actions(d.begin(), d.begin() + first);
        actions.push_back(inner.lift(c.subspan(first, width), d.subspan(first, width)));
        actions.insert(actions.end(), d.begin() + first + width, d.end());
        return outer.lift(hat_configs(c), actions);
    };
    return m;
}

Modifier parse_modifier(std::string_view expression) {
    struct Segment {
        std::size_t position;
        Modifier modifier;
    };
    std::vector<Segment> segments;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = expression.find('.', start);
        std::string_view piece = expression.substr(start, dot == std::string_view::npos ? dot : dot - start);
        std::size_t position = 1;
        if (const auto colon = piece.find(':'); colon != std::string_view::npos) {
            position = parse_position(piece.substr(0, colon), expression);
            piece = piece.substr(colon + 1);
        }
        if (piece.empty()) {
            throw InvalidArgument("modifier expression \"" + std::string(expression) + "\" has an empty segment");
        }
        segments.push_back({position, builtin(piece)});
        if (dot == std::string_view::npos) {
            break;
        }
        start = dot + 1;
    }
    if (segments.front().position != 1) {
        throw InvalidArgument("modifier expression \"" + std::string(expression) +
                              "\": a position needs a modifier to its left");
    }
    Modifier result = segments.back().modifier;
    for (std::size_t k = segments.size() - 1; k-- > 0;) {
        result = compose(segments[k].modifier, segments[k + 1].position, result);
    }
    return result;
}

Tableau::Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, false) {
    if (rows == 0 || cols == 0) {
        throw InvalidArgument("Tableau: dimensions must be positive");
    }
}

Tableau Tableau::from_state(std::size_t rows, std::size_t cols, State state) {
    Tableau t(rows, cols);
    if (rows * cols < 32 && (std::uint64_t{state} >> (rows * cols)) != 0) {
        throw OutOfRange("Tableau::from_state: state " + std::to_string(state) + " has bits beyond " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (std::size_t k = 0; k < rows * cols && k < 32; ++k) {
        t.bits_[k] = (state >> k) & 1U;
    }
    return t;
}

std::size_t Tableau::count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

State Tableau::to_state() const {
    if (bits_.size() > 32) {
        throw OutOfRange("Tableau::to_state: too many cells for a state index");
    }
    State s = 0;
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k]) {
            s |= State{1} << k;
        }
    }
    return s;
}

std::string Tableau::to_string() const {
    std::string out;
    for (std::size_t x = 0; x < rows_; ++x) {
        if (x > 0) {
            out += '/';
        }
        for (std::size_t y = 0; y < cols_; ++y) {
            out += at(x, y) ? '1' : '0';
        }
    }
    return out;
}

} // namespace sct
