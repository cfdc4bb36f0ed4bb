#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qfa/symbols.hpp"

namespace qfa {

/// Complete single-head deterministic automaton.
class Dfa {
public:
    /// `delta` maps (state, symbol) to a state and must be total.
    Dfa(std::vector<std::string> states, std::vector<Symbol> alphabet, const std::string& start,
        const std::set<std::string>& accepting,
        const std::map<std::pair<std::string, Symbol>, std::string>& delta);

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<Symbol>& alphabet() const { return alphabet_; }
    int start() const { return start_; }
    const std::set<int>& accepting() const { return accepting_; }
    bool is_accepting(int q) const { return accepting_.count(q) > 0; }
    int next(int q, std::size_t symbol) const { return delta_[q][symbol]; }
    std::optional<std::size_t> symbol_index(const Symbol& s) const;
    int state_index(const std::string& name) const;

    bool operator==(const Dfa&) const = default;

private:
    std::vector<std::string> states_;
    std::vector<Symbol> alphabet_;
    int start_ = 0;
    std::set<int> accepting_;
    std::vector<std::vector<int>> delta_;
};

bool run_dfa(const Dfa& d, const Word& word);

/// One-way k-head deterministic automaton on a single `#w$` tape.
class MultiHeadDfa {
public:
    struct Step {
        int target = 0;
        std::vector<int> moves;
        bool operator==(const Step&) const = default;
    };
    using Key = std::pair<int, Word>;

    MultiHeadDfa(std::vector<std::string> states, std::vector<Symbol> alphabet, int heads,
                 const std::string& start, const std::set<std::string>& accepting);

    /// Adds delta(from, reads) = (to, moves). Throws on redefinition, bad
    /// arity, moves outside {0,1} or unknown symbols.
    void add_transition(const std::string& from, const Word& reads, const std::string& to,
                        const std::vector<int>& moves);

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<Symbol>& alphabet() const { return alphabet_; }
    int heads() const { return heads_; }
    int start() const { return start_; }
    const std::set<int>& accepting() const { return accepting_; }
    const std::map<Key, Step>& transitions() const { return delta_; }
    int state_index(const std::string& name) const;
    bool in_alphabet(const Symbol& s) const;
    const Step* find(int state, const Word& reads) const;

    bool operator==(const MultiHeadDfa&) const = default;

private:
    std::vector<std::string> states_;
    std::vector<Symbol> alphabet_;
    int heads_ = 1;
    int start_ = 0;
    std::set<int> accepting_;
    std::map<Key, Step> delta_;
};

enum class RunOutcome { accepted, rejected, livelock };

const char* to_string(RunOutcome outcome);

struct MultiHeadRun {
    RunOutcome outcome = RunOutcome::rejected;
    std::size_t steps = 0;
    int final_state = 0;
    std::vector<int> positions;
};

/// Default budget |Q| * (n+2)^k, the number of configurations.
std::size_t default_step_budget(const MultiHeadDfa& m, std::size_t word_length);

/// Runs until no transition applies. Heads never move past `$`.
MultiHeadRun run_mhdfa(const MultiHeadDfa& m, const Word& word,
                       std::optional<std::size_t> max_steps = std::nullopt);

struct ReversibilityReport {
    bool move_consistent = true;
    bool predecessor_unique = true;
    /// Human-readable descriptions of every violation found.
    std::vector<std::string> witnesses;

    bool reversible() const { return move_consistent && predecessor_unique; }
};

/// Transition-level check: equal targets carry equal moves, and no target
/// has two predecessors under one symbol tuple.
ReversibilityReport check_reversible(const MultiHeadDfa& m);

/// Matrix-level check: move consistency plus pairwise-orthogonal rows of
/// every symbol-tuple matrix.
bool reversible_by_matrices(const MultiHeadDfa& m);

/// 0/1 matrix of one symbol tuple: rows are sources, columns targets.
Eigen::MatrixXcd symbol_pair_matrix(const MultiHeadDfa& m, const Word& reads);

/// 0/1 matrix of a DFA's single-symbol transition.
Eigen::MatrixXcd symbol_matrix(const Dfa& d, const Symbol& symbol);

/// Every symbol tuple with at least one transition, in key order.
std::vector<Word> defined_tuples(const MultiHeadDfa& m);

/// One-head automaton that reads `#`, then the word, and halts on `$`.
MultiHeadDfa as_multihead(const Dfa& d);

}  // namespace qfa
