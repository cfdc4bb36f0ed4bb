#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qfa/operator_table.hpp"
#include "qfa/relation.hpp"
#include "qfa/superposition.hpp"

namespace qfa {

/// Measure-many one-way automaton: one operator per working symbol, with an
/// accept/reject/continue observation after each.
struct MeasureManyQfa {
    std::vector<std::string> states;
    std::set<StateIndex> accepting;
    std::set<StateIndex> rejecting;
    StateIndex start = 0;
    std::vector<Symbol> alphabet;
    std::map<Symbol, Rows> operators;

    StateIndex state_index(const std::string& name) const;
    /// Defines V_symbol|source> from `(target, amplitude-expression)` pairs.
    void set_row(const Symbol& symbol, const std::string& source,
                 const std::vector<std::pair<std::string, std::string>>& targets);

    bool operator==(const MeasureManyQfa&) const = default;
};

enum class HeadMode {
    two_tape,   // one head per tape, tape 2 drawn from rho
    two_head,   // two heads on the single input tape
};

/// Two-tape one-way quantum automaton. In two-head mode the second head
/// reads the first tape and rho is the identity.
struct TwoTapeQfa {
    OperatorTable table;
    std::set<StateIndex> accepting;
    std::set<StateIndex> rejecting;
    Superposition<StateIndex> start;
    std::vector<Symbol> input_alphabet;
    std::vector<Symbol> tape2_alphabet;
    SymbolRelation rho;
    HeadMode mode = HeadMode::two_tape;

    bool is_halting(StateIndex q) const { return accepting.count(q) || rejecting.count(q); }

    bool operator==(const TwoTapeQfa&) const = default;
};

struct Configuration {
    StateIndex state = 0;
    int head1 = 0;
    int head2 = 0;

    auto operator<=>(const Configuration&) const = default;
};

std::string to_string(const Configuration& c, const OperatorTable& table);

struct TraceStep {
    std::size_t step = 0;
    std::vector<std::pair<Configuration, Complex>> live;
    double acc_mass = 0.0;
    double rej_mass = 0.0;
    double sink_mass = 0.0;
};

struct RunResult {
    double p_acc = 0.0;
    /// Includes sink mass.
    double p_rej = 0.0;
    double p_sink = 0.0;
    double p_live = 0.0;
    std::size_t steps = 0;
    /// Live mass remained when the step budget ran out.
    bool livelock = false;
    std::vector<TraceStep> trace;
};

RunResult run_mm1qfa(const MeasureManyQfa& m, const Word& word, bool trace = false);

struct Tapes {
    Word first;
    Word second;
};

/// Builds `#w1$` / `#w2$`, checking alphabets and rho. In two-head mode
/// `w2` is ignored and both tapes are `#w1$`.
Tapes make_tapes(const TwoTapeQfa& m, const Word& w1, const Word& w2);

struct EvolveResult {
    Superposition<Configuration> state;
    double sink_mass = 0.0;
};

/// One unitary step without measurement. Halting configurations in `psi`
/// are skipped.
EvolveResult evolve_twotape(const TwoTapeQfa& m, const Tapes& tapes, const Superposition<Configuration>& psi);

struct StepResult {
    Superposition<Configuration> state;
    double acc_mass = 0.0;
    double rej_mass = 0.0;
    double sink_mass = 0.0;
};

/// One step followed by measurement of the halting classes.
StepResult step_twotape(const TwoTapeQfa& m, const Tapes& tapes, const Superposition<Configuration>& psi);

/// |Q| * (|w1|+2) * (|w2|+2).
std::size_t default_max_steps(const TwoTapeQfa& m, std::size_t len1, std::size_t len2);

RunResult run_twotape(const TwoTapeQfa& m, const Word& w1, const Word& w2,
                      std::optional<std::size_t> max_steps = std::nullopt, bool trace = false);

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;
    std::vector<std::string> warnings;

    bool passed() const;
    void add(std::string name, bool ok, std::string detail = {});
};

ValidationReport validate_automaton(const TwoTapeQfa& m);
ValidationReport validate_automaton(const MeasureManyQfa& m);

/// States not reachable from the start support through any defined row.
std::vector<std::string> unreachable_states(const TwoTapeQfa& m);

}  // namespace qfa
