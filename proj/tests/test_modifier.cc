#include "properties.hh"
#include "random_automata.hh"

#include "sct/errors.hh"
#include "sct/modifier.hh"
#include "sct/monster.hh"

#include <catch_amalgamated.hpp>

using namespace sct;
using sct::testing::Rng;
using sct::testing::uniform;

namespace {

Cdfa m2_1() {
    return build_monster({{2}, {StateSet::of(2, {1})}}).front();
}

std::vector<Cdfa> pair_monster() {
    return build_monster({{2, 2}, {StateSet::of(2, {1}), StateSet::of(2, {1})}});
}

std::vector<StateConfig> configs_of(const std::vector<Cdfa>& inputs) {
    std::vector<StateConfig> out;
    for (const auto& a : inputs) {
        out.push_back(StateConfig::of(a));
    }
    return out;
}

} // namespace

TEST_CASE("builtin names") {
    CHECK(builtin_names().size() == 10);
    for (const auto& name : builtin_names()) {
        CHECK(builtin(name).name == name);
    }
    CHECK_THROWS_AS(builtin("reverse"), InvalidArgument);
}

TEST_CASE("comp flips finals only") {
    const Cdfa m = m2_1();
    const Cdfa c = sct::apply(builtin("comp"), {m});
    CHECK(c.table() == m.table());
    CHECK(c.finals() == StateSet::of(2, {0}));
    CHECK(c.initial() == 0);
}

TEST_CASE("mirror of the two-state monster") {
    const Cdfa r = sct::apply(builtin("mirror"), {m2_1()});
    CHECK(r.state_count() == 4);
    // Subset {1} is mask 2; finals are the subsets holding the initial state 0.
    CHECK(r.initial() == 2);
    CHECK(r.finals() == StateSet::of(4, {1, 3}));
    // Letter [11] pulls {1} back to {0,1} and {0} back to the empty set.
    const Letter b = static_cast<Letter>(encode(Transformation({1, 1})));
    CHECK(r.target(2, b) == 3);
    CHECK(r.target(1, b) == 0);
}

TEST_CASE("square root of the two-state monster") {
    const Cdfa r = sct::apply(builtin("sroot"), {m2_1()});
    CHECK(r.state_count() == 4);
    CHECK(r.initial() == encode(make_identity(2)));
    // Only the constant map to 1 sends 0 into F after two steps.
    CHECK(r.finals() == StateSet::of(4, {static_cast<State>(encode(Transformation({1, 1})))}));
}

TEST_CASE("inter on the pair monster") {
    const auto inputs = pair_monster();
    const Cdfa r = sct::apply(builtin("inter"), inputs);
    const MonsterSpec spec{{2, 2}, {StateSet::of(2, {1}), StateSet::of(2, {1})}};
    const std::vector<Transformation> both{Transformation({1, 1}), Transformation({1, 1})};
    const auto a22 = static_cast<Letter>(monster_letter_index(spec, both));
    CHECK(r.labels()[a22] == "[11,11]");
    CHECK(r.initial() == 0);
    CHECK(r.target(0, a22) == 1 * 2 + 1);
    CHECK(r.is_final(3));
    CHECK(r.finals().count() == 1);
}

TEST_CASE("star accepts the empty word") {
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Cdfa a = testing::random_cdfa(rng, uniform(rng, 1, 4), uniform(rng, 1, 3));
        const Cdfa s = sct::apply(builtin("star"), {a});
        REQUIRE(s.initial() == 0);
        REQUIRE(s.is_final(0));
    }
}

TEST_CASE("star of intersection reaches twelve tableaux on the (2,2) monster") {
    const Cdfa r = sct::apply(parse_modifier("star.inter"), pair_monster());
    CHECK(r.state_count() == 16);
    CHECK(accessible_part(r).automaton.state_count() == 12);
    CHECK(minimize(r).state_count() == 12);
}

TEST_CASE("fto1 distinguishes equivalent automata") {
    const Cdfa x = Cdfa::from_rows({{1}, {2}, {2}}, 0, {2});
    const Cdfa y = Cdfa::from_rows({{2}, {1}, {1}}, 0, {1});
    REQUIRE(equivalent(x, y));
    const Cdfa fx = sct::apply(builtin("fto1"), {x});
    const Cdfa fy = sct::apply(builtin("fto1"), {y});
    CHECK_FALSE(equivalent(fx, fy));
    const Cdfa even_plus = Cdfa::from_rows({{1}, {2}, {1}}, 0, {2});
    CHECK(equivalent(fx, even_plus));
    CHECK(equivalent(fy, y));
    // A single state has nowhere to redirect to.
    const Cdfa one = Cdfa::from_rows({{0}}, 0, {0});
    CHECK(sct::apply(builtin("fto1"), {one}) == one);
}

TEST_CASE("letters with equal actions get equal columns") {
    Rng rng(21);
    for (const auto& name : builtin_names()) {
        const Modifier m = builtin(name);
        for (int trial = 0; trial < 30; ++trial) {
            auto inputs = testing::random_tuple(rng, m.arity, 3, 2);
            // Duplicate letter 0 as a third letter.
            for (auto& a : inputs) {
                std::vector<State> table;
                for (State q = 0; q < a.state_count(); ++q) {
                    table.push_back(a.target(q, 0));
                    table.push_back(a.target(q, 1));
                    table.push_back(a.target(q, 0));
                }
                a = Cdfa(3, a.state_count(), a.initial(), a.finals(), table);
            }
            const Cdfa r = sct::apply(m, inputs);
            REQUIRE(r.action(0) == r.action(2));
        }
    }
}

TEST_CASE("square-root lift is a morphism") {
    const std::size_t n = 3;
    const Modifier m = builtin("sroot");
    for (State f = 0; f < 8; ++f) {
        const std::vector<StateConfig> configs{{n, 0, StateSet::from_mask(n, f)}};
        for (std::uint64_t a = 0; a < 27; ++a) {
            for (std::uint64_t b = 0; b < 27; ++b) {
                const std::vector<Transformation> da{decode(n, a)};
                const std::vector<Transformation> db{decode(n, b)};
                const std::vector<Transformation> dab{compose(db[0], da[0])};
                REQUIRE(compose(m.lift(configs, db), m.lift(configs, da)) == m.lift(configs, dab));
            }
        }
    }
}

TEST_CASE("output configurations") {
    const auto inputs = pair_monster();
    const auto configs = configs_of(inputs);
    const auto out = output_config(builtin("union"), configs);
    CHECK(out.size == 4);
    CHECK(out.initial == 0);
    CHECK(out.finals == StateSet::of(4, {1, 2, 3}));
    const auto conc = output_config(builtin("conc"), configs);
    CHECK(conc.size == 8);
}

TEST_CASE("apply rejects bad inputs") {
    const auto inputs = pair_monster();
    CHECK_THROWS_AS(sct::apply(builtin("inter"), {inputs[0]}), InvalidArgument);
    const Cdfa other = Cdfa::from_rows({{0}, {1}}, 0, {1});
    CHECK_THROWS_AS(sct::apply(builtin("inter"), {inputs[0], other}), IncomparableAlphabets);
    const auto big = build_monster({{3, 3}, {StateSet(3), StateSet(3)}});
    CHECK_THROWS_AS(sct::apply(parse_modifier("star.inter"), big, ApplyOptions{1000}), BudgetExceeded);
    CHECK_NOTHROW(sct::apply(parse_modifier("star.inter"), big));
}

TEST_CASE("composition names and arities") {
    const Modifier si = parse_modifier("star.inter");
    CHECK(si.name == "star.inter");
    CHECK(si.arity == 2);
    const Modifier chain = parse_modifier("comp.star.union");
    CHECK(chain.name == "comp.star.union");
    CHECK(chain.arity == 2);
    const Modifier positioned = parse_modifier("inter.2:star");
    CHECK(positioned.name == "inter.2:star");
    CHECK(positioned.arity == 2);
    const Modifier wide = compose(builtin("union"), 2, builtin("conc"));
    CHECK(wide.arity == 3);
    CHECK_THROWS_AS(compose(builtin("star"), 2, builtin("comp")), InvalidArgument);
    CHECK_THROWS_AS(parse_modifier(""), InvalidArgument);
    CHECK_THROWS_AS(parse_modifier("star..inter"), InvalidArgument);
    CHECK_THROWS_AS(parse_modifier("2:star"), InvalidArgument);
    CHECK_THROWS_AS(parse_modifier("inter.0:star"), InvalidArgument);
    CHECK_THROWS_AS(parse_modifier("star.3:inter"), InvalidArgument);
}

TEST_CASE("composition agrees with nested application") {
    const auto r = testing::composition_law(77, 150, {"star", "comp", "inter", "union", "conc", "mirror"}, 3, 3);
    INFO(r.first_failure);
    CHECK(r.ok());

    Rng rng(78);
    for (int trial = 0; trial < 50; ++trial) {
        const auto inputs = testing::random_tuple(rng, 2, 3, 2);
        const Cdfa positioned = sct::apply(parse_modifier("inter.2:star"), inputs);
        const Cdfa nested = sct::apply(builtin("inter"), {inputs[0], sct::apply(builtin("star"), {inputs[1]})});
        REQUIRE(equivalent(positioned, nested));
    }
}

TEST_CASE("renaming and restricting letters commute with every built-in") {
    const auto r = testing::commutation_suite(31, 40, 3, 4);
    INFO(r.first_failure);
    CHECK(r.ok());
}

TEST_CASE("tableaux") {
    Tableau t(2, 3);
    t.set(0, 0);
    t.set(1, 2);
    CHECK(t.count() == 2);
    CHECK(t.to_string() == "100/001");
    CHECK(t.to_state() == (1U | (1U << 5)));
    CHECK(Tableau::from_state(2, 3, t.to_state()) == t);
    CHECK_THROWS_AS(Tableau::from_state(2, 2, 16), OutOfRange);
    CHECK_THROWS_AS(Tableau(0, 2), InvalidArgument);
}
