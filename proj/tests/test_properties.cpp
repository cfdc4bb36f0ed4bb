#include <random>

#include "doctest.h"
#include "qfa/quantum.hpp"
#include "support.hpp"

using namespace qfa;

TEST_CASE("random machines are well formed") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 60; ++k) {
        auto m = support::random_machine(rng);
        auto report = validate_automaton(m);
        CHECK(report.passed());
        CHECK(check_gram_wellformed(m.table).max_deviation <= 1e-9);
    }
}

TEST_CASE("probability is conserved at every step") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 60; ++k) {
        auto m = support::random_machine(rng);
        for (int i = 0; i < 5; ++i) {
            const auto w = support::random_word(rng, m.input_alphabet, 5);
            const auto tape = support::random_tape(rng, m.rho, w);
            const auto r = run_twotape(m, w, tape, std::nullopt, true);
            CHECK(support::conservation_error(r) <= 1e-9);
        }
    }
}

TEST_CASE("distinct configurations evolve to orthogonal images") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 40; ++k) {
        auto m = support::random_machine(rng);
        const auto w = support::random_word(rng, m.input_alphabet, 4);
        const auto tape = support::random_tape(rng, m.rho, w);
        const auto tapes = make_tapes(m, w, tape);
        // Every non-halting configuration, not only reachable ones.
        std::vector<Configuration> all;
        for (StateIndex q = 0; q < static_cast<StateIndex>(m.table.state_count()); ++q) {
            if (m.is_halting(q)) continue;
            for (int h1 = 0; h1 < static_cast<int>(tapes.first.size()); ++h1) {
                for (int h2 = 0; h2 < static_cast<int>(tapes.second.size()); ++h2) all.push_back({q, h1, h2});
            }
        }
        CHECK(support::stepped_orthogonality(m, tapes, all) <= 1e-9);
    }
}

TEST_CASE("unitary completion residual") {
    std::mt19937_64 rng(14);
    for (int k = 0; k < 60; ++k) {
        const auto t = support::random_partial_table(rng);
        CHECK(support::completion_residual(unitary_complete(t).table) <= 1e-12);
    }
}

TEST_CASE("a head moving off $ would break orthogonality") {
    // Guards the generator's rule: clamping merges configurations.
    TwoTapeQfa m;
    m.input_alphabet = m.tape2_alphabet = {"a"};
    m.rho = SymbolRelation::identity({"a"});
    m.table = OperatorTable({}, {"a"}, {"a"});
    m.table.add_state("p", {1, 0});
    m.table.set_row({"$", "#"}, "p", {{"p", "1"}});
    m.table.set_row({"a", "#"}, "p", {{"p", "1"}});
    m.start = Superposition<StateIndex>::basis(0);
    CHECK(validate_automaton(m).passed());
    const auto tapes = make_tapes(m, {"a"}, {"a"});
    CHECK(support::stepped_orthogonality(m, tapes, {{0, 1, 0}, {0, 2, 0}}) > 0.5);
}
