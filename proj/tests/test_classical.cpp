#include "doctest.h"
#include "qfa/classical.hpp"
#include "qfa/errors.hpp"
#include "qfa/registry.hpp"
#include "support.hpp"

using namespace qfa;

namespace {

MultiHeadDfa mh(const std::string& name) { return std::get<MultiHeadDfa>(build_example(name).machine); }
Dfa dfa(const std::string& name) { return std::get<Dfa>(build_example(name).machine); }

}  // namespace

TEST_CASE("dfa runs and rejects foreign symbols") {
    auto d = dfa("even-a");
    CHECK(run_dfa(d, {}));
    CHECK_FALSE(run_dfa(d, {"a"}));
    CHECK(run_dfa(d, {"a", "a"}));
    CHECK_THROWS_AS(run_dfa(d, {"b"}), AlphabetError);
    CHECK_THROWS_AS(Dfa({"p"}, {"a"}, "p", {}, {}), MachineError);
}

TEST_CASE("two-head anbn machine decides its language") {
    auto m = mh("anbn-dfa2");
    for (const auto& s : support::all_strings("ab", 10)) {
        const auto r = run_mhdfa(m, support::word(s));
        CHECK_MESSAGE((r.outcome == RunOutcome::accepted) == support::anbn_brute(s), s);
        CHECK(r.outcome != RunOutcome::livelock);
    }
}

TEST_CASE("reversible anbncn machine decides its language") {
    auto m = mh("anbncn-rev2");
    for (const auto& s : support::all_strings("abc", 8)) {
        const auto r = run_mhdfa(m, support::word(s));
        CHECK_MESSAGE((r.outcome == RunOutcome::accepted) == support::anbncn_brute(s), s);
    }
}

TEST_CASE("reversibility witnesses") {
    auto rev = check_reversible(mh("anbncn-rev2"));
    CHECK(rev.reversible());
    CHECK(rev.witnesses.empty());
    CHECK(reversible_by_matrices(mh("anbncn-rev2")));

    auto bad = check_reversible(mh("anbn-dfa2"));
    CHECK_FALSE(bad.predecessor_unique);
    CHECK(std::find(bad.witnesses.begin(), bad.witnesses.end(), "column q1 of M_ba has 2 entries (rows q0, q1)") !=
          bad.witnesses.end());
    CHECK_FALSE(reversible_by_matrices(mh("anbn-dfa2")));
}

TEST_CASE("printed M_ba of the anbn machine") {
    auto m = symbol_pair_matrix(mh("anbn-dfa2"), {"b", "a"});
    CHECK(m(0, 1) == Complex(1, 0));
    CHECK(m(1, 1) == Complex(1, 0));
    CHECK(m.cwiseAbs().sum() == doctest::Approx(2.0));
}

TEST_CASE("transition table errors") {
    MultiHeadDfa m({"p", "q"}, {"a"}, 2, "p", {"q"});
    m.add_transition("p", {"a", "a"}, "q", {1, 1});
    CHECK_THROWS_AS(m.add_transition("p", {"a", "a"}, "p", {1, 1}), MachineError);
    CHECK_THROWS_AS(m.add_transition("p", {"a"}, "p", {1}), MachineError);
    CHECK_THROWS_AS(m.add_transition("p", {"a", "#"}, "p", {2, 0}), MachineError);
    CHECK_THROWS((void)m.add_transition("p", {"z", "a"}, "p", {0, 0}));
}

TEST_CASE("livelock hits the budget") {
    MultiHeadDfa m({"p"}, {"a"}, 1, "p", {});
    m.add_transition("p", {"#"}, "p", {0});
    auto r = run_mhdfa(m, {"a"});
    CHECK(r.outcome == RunOutcome::livelock);
    CHECK(r.steps == default_step_budget(m, 1));
}

TEST_CASE("single-head lift of a dfa agrees on short words") {
    for (const auto& name : {"even-a", "ends-in-b", "a-mod-3"}) {
        auto d = dfa(name);
        auto m = as_multihead(d);
        std::string alphabet;
        for (const auto& s : d.alphabet()) alphabet += s;
        for (const auto& s : support::all_strings(alphabet, 8)) {
            const auto w = support::word(s);
            CHECK((run_mhdfa(m, w).outcome == RunOutcome::accepted) == run_dfa(d, w));
        }
    }
}
