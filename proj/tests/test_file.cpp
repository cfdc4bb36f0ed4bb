#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "qfa/automaton_file.hpp"
#include "qfa/compile.hpp"
#include "qfa/errors.hpp"

using namespace qfa;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_automaton(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("export then load is the identity on every registry machine") {
    for (const auto& name : example_names()) {
        auto e = build_example(name);
        auto loaded = parse_automaton(dump_automaton(e.machine, e.repairs));
        CHECK_MESSAGE(loaded.machine == e.machine, name);
        CHECK(loaded.notes == e.repairs);
        CHECK(dump_automaton(loaded.machine, loaded.notes) == dump_automaton(e.machine, e.repairs));
    }
}

TEST_CASE("compiled and lifted machines round-trip") {
    Machine compiled = compile_dfa(std::get<Dfa>(build_example("a-mod-3").machine));
    CHECK(parse_automaton(dump_automaton(compiled)).machine == compiled);
    Machine lifted = lift_rmfa(std::get<MultiHeadDfa>(build_example("anbncn-rev2").machine));
    CHECK(parse_automaton(dump_automaton(lifted)).machine == lifted);
    CHECK(model_name(lifted) == "1qfa2");
}

TEST_CASE("save and load through a file") {
    const auto path = std::filesystem::temp_directory_path() / "qfa_file_test.json";
    auto e = build_example("percent");
    save_automaton(e.machine, path.string());
    CHECK(load_automaton(path.string()).machine == e.machine);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_automaton("/nonexistent/x.json"), FormatError);
}

TEST_CASE("superposed start states") {
    const std::string doc = R"J({
      "model": "2t1qfa", "states": ["p", "q"], "start": {"p": "1/sqrt(2)", "q": "i/sqrt(2)"},
      "accept": [], "reject": [], "input_alphabet": ["a"], "rho": [["a", "a"]],
      "head_moves": {"p": [1, 1], "q": [1, 1]}, "transitions": []})J";
    auto m = std::get<TwoTapeQfa>(parse_automaton(doc).machine);
    CHECK(m.start.size() == 2);
    CHECK(parse_automaton(dump_automaton(m)).machine == Machine{m});
}

TEST_CASE("structural errors name the culprit") {
    CHECK(error_of(R"J({"model": "2t1qfa", "states": ["p"], "start": "p", "input_alphabet": ["a"],
        "head_moves": {}, "transitions": [{"from": "p", "read": ["a", "a"], "to": [["q9", "1"]]}]})J")
              .find("q9") != std::string::npos);
    CHECK(error_of("{\n\"model\": \n}").find("line 3") != std::string::npos);
    CHECK(error_of(R"J({"model": "nfa", "states": ["p"]})J").find("nfa") != std::string::npos);
    CHECK(error_of(R"J({"model": "dfa", "states": ["p"], "start": "p", "input_alphabet": ["#"], "transitions": []})J")
              .find("reserved") != std::string::npos);
    CHECK(error_of(R"J({"model": "2t1qfa", "states": ["p"], "start": "p", "input_alphabet": ["a"],
        "head_moves": {"p": [2, 0]}, "transitions": []})J")
              .find("head_moves.p") != std::string::npos);
    CHECK(error_of(R"J({"model": "2t1qfa", "states": ["p"], "start": "p", "input_alphabet": ["a"],
        "head_moves": {}, "transitions": [{"from": "p", "read": ["a", "a"], "to": [["p", "1/"]]}]})J")
              .find("amplitude") != std::string::npos);
    CHECK(error_of(R"J({"model": "dfa", "states": ["p"], "start": "p", "input_alphabet": ["a"], "transitions": []})J") !=
          "");
}

TEST_CASE("gram problems load with a warning") {
    auto loaded = parse_automaton(R"J({
      "model": "2t1qfa", "states": ["p", "q", "r"], "start": "p", "accept": [], "reject": [],
      "input_alphabet": ["a"], "rho": [["a", "a"]], "head_moves": {},
      "transitions": [{"from": "p", "read": ["a", "a"], "to": [["q", "1/sqrt(3)"], ["r", "1/sqrt(3)"]]}]})J");
    REQUIRE_FALSE(loaded.warnings.empty());
    CHECK(loaded.warnings.front().rfind("gram", 0) == 0);
}

TEST_CASE("measure-many machines load") {
    auto loaded = parse_automaton(R"J({
      "model": "mm1qfa", "states": ["s", "acc"], "start": "s", "accept": ["acc"], "reject": [],
      "input_alphabet": ["a"],
      "transitions": [{"from": "s", "read": ["$"], "to": [["acc", "1"]]},
                      {"from": "s", "read": ["#"], "to": [["s", "1"]]},
                      {"from": "s", "read": ["a"], "to": [["s", "1"]]}]})J");
    auto m = std::get<MeasureManyQfa>(loaded.machine);
    CHECK(run_mm1qfa(m, {"a", "a"}).p_acc == doctest::Approx(1.0));
    CHECK(parse_automaton(dump_automaton(m)).machine == loaded.machine);
}
