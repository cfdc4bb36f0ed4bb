#include "doctest.h"
#include "qfa/compile.hpp"
#include "qfa/errors.hpp"
#include "qfa/lang.hpp"
#include "qfa/registry.hpp"
#include "support.hpp"

using namespace qfa;

namespace {

Dfa dfa(const std::string& name) { return std::get<Dfa>(build_example(name).machine); }
MultiHeadDfa mh(const std::string& name) { return std::get<MultiHeadDfa>(build_example(name).machine); }

}  // namespace

TEST_CASE("numbering is lexicographic by source state") {
    auto n = TransitionNumbering::of(dfa("even-a"));
    REQUIRE(n.by_symbol.at("a").size() == 2);
    CHECK(n.by_symbol.at("a")[0].source == 0);
    CHECK(n.by_symbol.at("a")[0].numbered == "a_1");
    CHECK(n.by_symbol.at("a")[1].numbered == "a_2");
}

TEST_CASE("compiled even-a machine") {
    auto m = compile_dfa(dfa("even-a"));
    CHECK(m.tape2_alphabet == Word{"a", "a_1", "a_2"});
    CHECK(m.rho.pairs() == std::vector<std::pair<Symbol, Symbol>>{{"a", "a_1"}, {"a", "a_2"}});
    CHECK(m.table.states() == std::vector<std::string>{"q0'", "even", "odd", "q_acc"});
    CHECK(m.rejecting.empty());
    CHECK(validate_automaton(m).passed());

    auto aa = accept_probability(m, {"a", "a"});
    CHECK(aa.probability == doctest::Approx(1.0));
    CHECK(aa.witness == Word{"a_1", "a_2"});
    CHECK(aa.tapes_evaluated == 4);
    CHECK(accept_probability(m, {"a"}).probability == doctest::Approx(0.0));
    CHECK(accept_probability(m, {}).probability == doctest::Approx(1.0));
}

TEST_CASE("compiler soundness and determinism per tape") {
    for (const auto& name : {"even-a", "ends-in-b", "a-mod-3"}) {
        auto d = dfa(name);
        auto m = compile_dfa(d);
        CHECK(validate_automaton(m).passed());
        std::string alphabet;
        for (const auto& s : d.alphabet()) alphabet += s;
        for (const auto& s : support::all_strings(alphabet, 5)) {
            const auto w = support::word(s);
            bool some = false;
            for (const auto& tape : rho_expand(m.rho, w)) {
                auto r = run_twotape(m, w, tape, std::nullopt, true);
                CHECK((std::abs(r.p_acc) < 1e-12 || std::abs(r.p_acc - 1) < 1e-12));
                some = some || r.p_acc > 0.5;
                for (const auto& step : r.trace) CHECK(step.live.size() <= 1);
            }
            CHECK_MESSAGE(some == run_dfa(d, w), name << " " << s);
        }
    }
}

TEST_CASE("several final states get separate accept states") {
    Dfa d({"x", "y"}, {"a"}, "x", {"x", "y"}, {{{"x", "a"}, "y"}, {{"y", "a"}, "x"}});
    auto m = compile_dfa(d);
    CHECK(m.accepting.size() == 2);
    CHECK(validate_automaton(m).passed());
    CHECK(accept_probability(m, {"a"}).probability == doctest::Approx(1.0));
}

TEST_CASE("lift keeps the matrices of a reversible machine") {
    auto d = mh("anbncn-rev2");
    auto m = lift_rmfa(d);
    CHECK(m.mode == HeadMode::two_head);
    CHECK(validate_automaton(m).passed());
    for (const auto& reads : defined_tuples(d)) {
        CHECK(symbol_pair_matrix(m.table, {reads[0], reads[1]}) == symbol_pair_matrix(d, reads));
    }
    CHECK(m.table.move(m.table.state_index("q0")) == HeadMove{0, 1});
    CHECK(m.table.move(m.table.state_index("q3")) == HeadMove{1, 0});
    CHECK(run_twotape(m, support::word("aabbcc"), {}).p_acc == doctest::Approx(1.0));
    CHECK_THROWS_AS(lift_rmfa(mh("anbn-dfa2")), MachineError);
}

TEST_CASE("lift agrees with the classical run") {
    auto d = mh("anbncn-rev2");
    auto m = lift_rmfa(d);
    for (const auto& s : support::all_strings("abc", 6)) {
        const auto w = support::word(s);
        const auto c = run_mhdfa(d, w);
        const auto r = run_twotape(m, w, {});
        if (c.outcome == RunOutcome::accepted) {
            CHECK(r.p_acc == doctest::Approx(1.0));
        } else {
            CHECK(r.p_rej == doctest::Approx(1.0));
        }
    }
}
