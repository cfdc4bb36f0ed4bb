#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qfa/amplitude.hpp"
#include "qfa/superposition.hpp"
#include "qfa/symbols.hpp"

namespace qfa {

using StateIndex = int;

/// One `(target, amplitude)` term of an operator row. `expr` keeps the text
/// the amplitude was written as, so exports preserve exact values.
struct Entry {
    StateIndex target = 0;
    Complex value;
    std::string expr;

    bool operator==(const Entry&) const = default;
};

/// Defined images of an operator: source state -> V|source>.
using Rows = std::map<StateIndex, std::vector<Entry>>;

/// Per-head movement applied when a state is entered.
struct HeadMove {
    int first = 0;
    int second = 0;

    bool operator==(const HeadMove&) const = default;
};

/// The V_{sigma,tau} family plus the head-move map D over a shared state set.
///
/// Both alphabets always contain the endmarkers. Rows are partial: a source
/// state without a row under a pair is routed to the reject sink.
class OperatorTable {
public:
    OperatorTable() = default;
    OperatorTable(std::vector<std::string> states, std::vector<Symbol> alphabet1,
                  std::vector<Symbol> alphabet2);

    StateIndex add_state(const std::string& name, HeadMove move = {});
    void add_symbol(int tape, const Symbol& symbol);

    /// Defines V_pair|source>. Replaces an existing row.
    void set_row(const SymbolPair& pair, StateIndex source, std::vector<Entry> entries);
    void set_row(const SymbolPair& pair, const std::string& source,
                 const std::vector<std::pair<std::string, std::string>>& targets);
    void set_move(StateIndex state, HeadMove move);

    const std::vector<std::string>& states() const { return states_; }
    std::size_t state_count() const { return states_.size(); }
    std::optional<StateIndex> find_state(const std::string& name) const;
    StateIndex state_index(const std::string& name) const;
    const std::string& state_name(StateIndex index) const { return states_.at(index); }

    const std::vector<Symbol>& alphabet(int tape) const { return tape == 0 ? alphabet1_ : alphabet2_; }
    bool has_symbol(int tape, const Symbol& symbol) const;

    HeadMove move(StateIndex state) const { return moves_.at(state); }
    const std::vector<HeadMove>& moves() const { return moves_; }

    const std::map<SymbolPair, Rows>& operators() const { return ops_; }
    /// nullptr when V_pair|source> is undefined.
    const std::vector<Entry>* row(const SymbolPair& pair, StateIndex source) const;

    bool operator==(const OperatorTable&) const = default;

private:
    void check_pair(const SymbolPair& pair) const;

    std::vector<std::string> states_;
    std::vector<Symbol> alphabet1_;
    std::vector<Symbol> alphabet2_;
    std::vector<HeadMove> moves_;
    std::map<SymbolPair, Rows> ops_;
};

struct ApplyResult {
    Superposition<StateIndex> state;
    double sink_mass = 0.0;
};

/// Sum over psi(q) V_pair|q>, with mass on undefined rows reported as sink.
ApplyResult apply_operator(const OperatorTable& table, const SymbolPair& pair,
                           const Superposition<StateIndex>& psi);

/// Same, for a bare row family (used by measure-many automata).
ApplyResult apply_rows(const Rows& rows, const Superposition<StateIndex>& psi);

struct GramDeviation {
    std::string label;       // symbol pair or symbol the rows belong to
    double max_deviation = 0.0;
    StateIndex worst_first = -1;
    StateIndex worst_second = -1;
};

struct GramReport {
    std::vector<GramDeviation> operators;
    double max_deviation = 0.0;
    bool passed = true;
    /// D is a function of the target state, so the zero-entry condition for
    /// mismatched moves holds by construction.
    bool move_condition_by_construction = true;

    const GramDeviation* worst() const;
};

/// Largest |<V q1|V q2> - delta(q1,q2)| over defined sources of one family.
GramDeviation gram_deviation(const Rows& rows, std::string label);

GramReport check_gram_wellformed(const OperatorTable& table, double tol = kValidationTolerance);

struct CompletionResult {
    OperatorTable table;
    std::vector<std::string> added_reject_states;
};

/// Extends a well-formed partial table to one whose every symbol-pair matrix
/// is square and unitary. Undefined source rows are sent to fresh reject
/// states (move (0,0)); the images of the fresh states are filled in by
/// Gram-Schmidt over the standard basis in index order. Throws GramError if
/// the input fails the Gram check at 1e-9.
CompletionResult unitary_complete(const OperatorTable& table);

/// Dense view: rows are source states, columns are targets, declared order.
/// Undefined rows are zero.
Eigen::MatrixXcd symbol_pair_matrix(const OperatorTable& table, const SymbolPair& pair);

/// Dense view of a row family over `n` states.
Eigen::MatrixXcd rows_matrix(const Rows& rows, std::size_t n);

}  // namespace qfa
