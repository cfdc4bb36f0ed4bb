#include "qfa/classical.hpp"

#include <algorithm>

#include "qfa/errors.hpp"

namespace qfa {
namespace {

int index_of(const std::vector<std::string>& names, const std::string& name, const char* what) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw MachineError(std::string("unknown ") + what + " '" + name + "'");
    return static_cast<int>(it - names.begin());
}

std::string tuple_text(const Word& reads) {
    std::string out = "(";
    for (std::size_t i = 0; i < reads.size(); ++i) out += (i ? "," : "") + reads[i];
    return out + ")";
}

}  // namespace

Dfa::Dfa(std::vector<std::string> states, std::vector<Symbol> alphabet, const std::string& start,
         const std::set<std::string>& accepting,
         const std::map<std::pair<std::string, Symbol>, std::string>& delta)
    : states_(std::move(states)), alphabet_(std::move(alphabet)) {
    if (states_.empty()) throw MachineError("DFA needs at least one state");
    for (const auto& s : alphabet_) {
        if (is_endmarker(s)) throw AlphabetError("endmarkers cannot be DFA input symbols");
    }
    start_ = index_of(states_, start, "state");
    for (const auto& f : accepting) accepting_.insert(index_of(states_, f, "state"));
    delta_.assign(states_.size(), std::vector<int>(alphabet_.size(), -1));
    for (const auto& [key, to] : delta) {
        const int q = index_of(states_, key.first, "state");
        auto a = symbol_index(key.second);
        if (!a) throw AlphabetError("symbol '" + key.second + "' not in DFA alphabet");
        delta_[q][*a] = index_of(states_, to, "state");
    }
    for (std::size_t q = 0; q < states_.size(); ++q) {
        for (std::size_t a = 0; a < alphabet_.size(); ++a) {
            if (delta_[q][a] < 0) {
                throw MachineError("DFA transition missing for (" + states_[q] + ", " + alphabet_[a] + ")");
            }
        }
    }
}

std::optional<std::size_t> Dfa::symbol_index(const Symbol& s) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), s);
    if (it == alphabet_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - alphabet_.begin());
}

int Dfa::state_index(const std::string& name) const { return index_of(states_, name, "state"); }

bool run_dfa(const Dfa& d, const Word& word) {
    int q = d.start();
    for (const auto& s : word) {
        auto a = d.symbol_index(s);
        if (!a) throw AlphabetError("symbol '" + s + "' not in DFA alphabet");
        q = d.next(q, *a);
    }
    return d.is_accepting(q);
}

MultiHeadDfa::MultiHeadDfa(std::vector<std::string> states, std::vector<Symbol> alphabet, int heads,
                           const std::string& start, const std::set<std::string>& accepting)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), heads_(heads) {
    if (heads_ < 1) throw MachineError("head count must be at least 1");
    for (const auto& s : alphabet_) {
        if (is_endmarker(s)) throw AlphabetError("endmarkers cannot be input symbols");
    }
    start_ = index_of(states_, start, "state");
    for (const auto& f : accepting) accepting_.insert(index_of(states_, f, "state"));
}

int MultiHeadDfa::state_index(const std::string& name) const { return index_of(states_, name, "state"); }

bool MultiHeadDfa::in_alphabet(const Symbol& s) const {
    return is_endmarker(s) || std::find(alphabet_.begin(), alphabet_.end(), s) != alphabet_.end();
}

void MultiHeadDfa::add_transition(const std::string& from, const Word& reads, const std::string& to,
                                  const std::vector<int>& moves) {
    if (static_cast<int>(reads.size()) != heads_ || static_cast<int>(moves.size()) != heads_) {
        throw MachineError("transition arity does not match head count");
    }
    for (const auto& s : reads) {
        if (!in_alphabet(s)) throw AlphabetError("symbol '" + s + "' not in alphabet");
    }
    for (int d : moves) {
        if (d != 0 && d != 1) throw MachineError("moves must be 0 or 1");
    }
    Key key{index_of(states_, from, "state"), reads};
    if (delta_.count(key)) throw MachineError("duplicate transition from " + from + " on " + tuple_text(reads));
    delta_.emplace(std::move(key), Step{index_of(states_, to, "state"), moves});
}

const MultiHeadDfa::Step* MultiHeadDfa::find(int state, const Word& reads) const {
    auto it = delta_.find(Key{state, reads});
    return it == delta_.end() ? nullptr : &it->second;
}

const char* to_string(RunOutcome outcome) {
    switch (outcome) {
        case RunOutcome::accepted: return "accepted";
        case RunOutcome::rejected: return "rejected";
        case RunOutcome::livelock: return "livelock";
    }
    return "?";
}

std::size_t default_step_budget(const MultiHeadDfa& m, std::size_t word_length) {
    std::size_t budget = m.states().size();
    for (int i = 0; i < m.heads(); ++i) budget *= word_length + 2;
    return budget;
}

MultiHeadRun run_mhdfa(const MultiHeadDfa& m, const Word& word, std::optional<std::size_t> max_steps) {
    for (const auto& s : word) {
        if (is_endmarker(s) || !m.in_alphabet(s)) throw AlphabetError("symbol '" + s + "' not in alphabet");
    }
    const Word tape = with_endmarkers(word);
    const int last = static_cast<int>(tape.size()) - 1;
    const std::size_t budget = max_steps.value_or(default_step_budget(m, word.size()));

    MultiHeadRun run;
    run.final_state = m.start();
    run.positions.assign(m.heads(), 0);
    Word reads(m.heads());
    for (;;) {
        for (int h = 0; h < m.heads(); ++h) reads[h] = tape[run.positions[h]];
        const auto* step = m.find(run.final_state, reads);
        if (!step) {
            run.outcome = m.accepting().count(run.final_state) ? RunOutcome::accepted : RunOutcome::rejected;
            return run;
        }
        if (run.steps == budget) {
            run.outcome = RunOutcome::livelock;
            return run;
        }
        run.final_state = step->target;
        for (int h = 0; h < m.heads(); ++h) {
            run.positions[h] = std::min(last, run.positions[h] + step->moves[h]);
        }
        ++run.steps;
    }
}

ReversibilityReport check_reversible(const MultiHeadDfa& m) {
    ReversibilityReport report;
    std::map<int, std::pair<std::vector<int>, MultiHeadDfa::Key>> move_of;
    std::map<std::pair<Word, int>, std::vector<int>> sources;
    for (const auto& [key, step] : m.transitions()) {
        auto [it, inserted] = move_of.try_emplace(step.target, step.moves, key);
        if (!inserted && it->second.first != step.moves) {
            report.move_consistent = false;
            report.witnesses.push_back("target " + m.states()[step.target] + " entered with different moves from " +
                                       m.states()[it->second.second.first] + " on " +
                                       tuple_text(it->second.second.second) + " and from " +
                                       m.states()[key.first] + " on " + tuple_text(key.second));
        }
        sources[{key.second, step.target}].push_back(key.first);
    }
    for (const auto& [key, from] : sources) {
        if (from.size() < 2) continue;
        report.predecessor_unique = false;
        std::string list;
        for (std::size_t i = 0; i < from.size(); ++i) list += (i ? ", " : "") + m.states()[from[i]];
        std::string name;
        for (const auto& s : key.first) name += s;
        report.witnesses.push_back("column " + m.states()[key.second] + " of M_" + name + " has " +
                                   std::to_string(from.size()) + " entries (rows " + list + ")");
    }
    return report;
}

std::vector<Word> defined_tuples(const MultiHeadDfa& m) {
    std::set<Word> tuples;
    for (const auto& [key, _] : m.transitions()) tuples.insert(key.second);
    return {tuples.begin(), tuples.end()};
}

Eigen::MatrixXcd symbol_pair_matrix(const MultiHeadDfa& m, const Word& reads) {
    if (static_cast<int>(reads.size()) != m.heads()) throw MachineError("tuple arity does not match head count");
    for (const auto& s : reads) {
        if (!m.in_alphabet(s)) throw AlphabetError("symbol '" + s + "' not in alphabet");
    }
    const auto n = static_cast<Eigen::Index>(m.states().size());
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [key, step] : m.transitions()) {
        if (key.second == reads) mat(key.first, step.target) = 1.0;
    }
    return mat;
}

bool reversible_by_matrices(const MultiHeadDfa& m) {
    // D must be a function of the target state.
    std::map<int, std::vector<int>> move_of;
    for (const auto& [key, step] : m.transitions()) {
        auto [it, inserted] = move_of.try_emplace(step.target, step.moves);
        if (!inserted && it->second != step.moves) return false;
    }
    for (const auto& reads : defined_tuples(m)) {
        const Eigen::MatrixXcd mat = symbol_pair_matrix(m, reads);
        const Eigen::MatrixXcd gram = mat * mat.adjoint();
        for (Eigen::Index i = 0; i < gram.rows(); ++i) {
            for (Eigen::Index j = 0; j < gram.cols(); ++j) {
                if (i != j && std::abs(gram(i, j)) > 0.5) return false;
            }
        }
    }
    return true;
}

Eigen::MatrixXcd symbol_matrix(const Dfa& d, const Symbol& symbol) {
    auto a = d.symbol_index(symbol);
    if (!a) throw AlphabetError("symbol '" + symbol + "' not in DFA alphabet");
    const auto n = static_cast<Eigen::Index>(d.states().size());
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index q = 0; q < n; ++q) mat(q, d.next(static_cast<int>(q), *a)) = 1.0;
    return mat;
}

MultiHeadDfa as_multihead(const Dfa& d) {
    std::set<std::string> accepting;
    for (int f : d.accepting()) accepting.insert(d.states()[f]);
    MultiHeadDfa m(d.states(), d.alphabet(), 1, d.states()[d.start()], accepting);
    m.add_transition(d.states()[d.start()], {kLeftEnd}, d.states()[d.start()], {1});
    for (std::size_t q = 0; q < d.states().size(); ++q) {
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
            m.add_transition(d.states()[q], {d.alphabet()[a]}, d.states()[d.next(static_cast<int>(q), a)], {1});
        }
    }
    return m;
}

}  // namespace qfa
