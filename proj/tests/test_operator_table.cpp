#include <random>

#include "doctest.h"
#include "qfa/errors.hpp"
#include "qfa/operator_table.hpp"
#include "support.hpp"

using namespace qfa;
using Targets = std::vector<std::pair<std::string, std::string>>;

namespace {

OperatorTable small_table() {
    OperatorTable t({}, {"a"}, {"a"});
    t.add_state("p", {1, 1});
    t.add_state("q", {1, 1});
    t.add_state("r", {0, 0});
    return t;
}

}  // namespace

TEST_CASE("rows and sink mass") {
    auto t = small_table();
    t.set_row({"a", "a"}, "p", Targets{{"q", "1/sqrt(2)"}, {"r", "1/sqrt(2)"}});
    CHECK(t.row({"a", "a"}, 0) != nullptr);
    CHECK(t.row({"a", "a"}, 1) == nullptr);
    CHECK(t.row({"#", "#"}, 0) == nullptr);

    Superposition<StateIndex> psi;
    psi.add(0, Complex(std::sqrt(0.5), 0));
    psi.add(1, Complex(0, std::sqrt(0.5)));
    auto r = apply_operator(t, {"a", "a"}, psi);
    CHECK(r.sink_mass == doctest::Approx(0.5));
    CHECK(r.state.norm_squared() == doctest::Approx(0.5));
    CHECK_THROWS_AS(apply_operator(t, {"b", "a"}, psi), AlphabetError);
    CHECK_THROWS_AS(t.set_row({"a", "a"}, "p", Targets{{"zz", "1"}}), MachineError);
}

TEST_CASE("gram check finds the worst pair") {
    auto t = small_table();
    t.set_row({"a", "a"}, "p", Targets{{"q", "1"}});
    t.set_row({"a", "a"}, "q", Targets{{"q", "1"}});
    auto report = check_gram_wellformed(t);
    CHECK_FALSE(report.passed);
    REQUIRE(report.worst() != nullptr);
    CHECK(report.worst()->max_deviation == doctest::Approx(1.0));
    CHECK(report.worst()->label == "a,a");

    auto ok = small_table();
    ok.set_row({"a", "a"}, "p", Targets{{"q", "1/sqrt(2)"}, {"r", "1/sqrt(2)"}});
    ok.set_row({"a", "a"}, "q", Targets{{"q", "1/sqrt(2)"}, {"r", "-1/sqrt(2)"}});
    CHECK(check_gram_wellformed(ok).passed);
    CHECK(check_gram_wellformed(ok).move_condition_by_construction);

    auto short_row = small_table();
    short_row.set_row({"a", "a"}, "p", Targets{{"q", "1/sqrt(3)"}, {"r", "1/sqrt(3)"}});
    CHECK_FALSE(check_gram_wellformed(short_row).passed);
}

TEST_CASE("dense matrix view") {
    auto t = small_table();
    t.set_row({"a", "a"}, "p", Targets{{"r", "1"}});
    auto m = symbol_pair_matrix(t, {"a", "a"});
    CHECK(m.rows() == 3);
    CHECK(m(0, 2) == Complex(1, 0));
    CHECK(m(1, 1) == Complex(0, 0));
}

TEST_CASE("unitary completion keeps defined rows") {
    auto t = small_table();
    t.set_row({"a", "a"}, "p", Targets{{"q", "1/sqrt(2)"}, {"r", "1/sqrt(2)"}});
    auto done = unitary_complete(t);
    CHECK_FALSE(done.added_reject_states.empty());
    const auto n = static_cast<Eigen::Index>(done.table.state_count());
    for (const auto& [pair, rows] : done.table.operators()) {
        auto m = symbol_pair_matrix(done.table, pair);
        CHECK((m * m.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK(*done.table.row({"a", "a"}, 0) == *t.row({"a", "a"}, 0));
    CHECK(done.table.alphabet(0) == t.alphabet(0));

    auto bad = small_table();
    bad.set_row({"a", "a"}, "p", Targets{{"q", "1"}});
    bad.set_row({"a", "a"}, "q", Targets{{"q", "1"}});
    CHECK_THROWS_AS(unitary_complete(bad), GramError);
}

TEST_CASE("random partial tables complete to unitaries") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        auto t = support::random_partial_table(rng);
        REQUIRE(check_gram_wellformed(t).passed);
        auto done = unitary_complete(t);
        const auto n = static_cast<Eigen::Index>(done.table.state_count());
        for (const auto& [pair, rows] : done.table.operators()) {
            auto m = symbol_pair_matrix(done.table, pair);
            CHECK((m * m.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}
