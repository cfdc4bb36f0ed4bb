#include "qfa/operator_table.hpp"

#include <algorithm>
#include <cmath>

#include "qfa/errors.hpp"

namespace qfa {

OperatorTable::OperatorTable(std::vector<std::string> states, std::vector<Symbol> alphabet1,
                             std::vector<Symbol> alphabet2) {
    for (const auto& s : states) add_state(s);
    for (const auto& s : alphabet1) add_symbol(0, s);
    for (const auto& s : alphabet2) add_symbol(1, s);
}

StateIndex OperatorTable::add_state(const std::string& name, HeadMove move) {
    if (find_state(name)) throw MachineError("duplicate state '" + name + "'");
    if (move.first < 0 || move.first > 1 || move.second < 0 || move.second > 1) {
        throw MachineError("head move for '" + name + "' must be 0 or 1");
    }
    states_.push_back(name);
    moves_.push_back(move);
    return static_cast<StateIndex>(states_.size() - 1);
}

void OperatorTable::add_symbol(int tape, const Symbol& symbol) {
    auto& alphabet = tape == 0 ? alphabet1_ : alphabet2_;
    if (std::find(alphabet.begin(), alphabet.end(), symbol) == alphabet.end()) {
        alphabet.push_back(symbol);
    }
}

bool OperatorTable::has_symbol(int tape, const Symbol& symbol) const {
    if (is_endmarker(symbol)) return true;
    const auto& alphabet = tape == 0 ? alphabet1_ : alphabet2_;
    return std::find(alphabet.begin(), alphabet.end(), symbol) != alphabet.end();
}

std::optional<StateIndex> OperatorTable::find_state(const std::string& name) const {
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) return std::nullopt;
    return static_cast<StateIndex>(it - states_.begin());
}

StateIndex OperatorTable::state_index(const std::string& name) const {
    auto idx = find_state(name);
    if (!idx) throw MachineError("unknown state '" + name + "'");
    return *idx;
}

void OperatorTable::check_pair(const SymbolPair& pair) const {
    if (!has_symbol(0, pair.first)) throw AlphabetError("symbol '" + pair.first + "' not in tape-1 alphabet");
    if (!has_symbol(1, pair.second)) throw AlphabetError("symbol '" + pair.second + "' not in tape-2 alphabet");
}

void OperatorTable::set_row(const SymbolPair& pair, StateIndex source, std::vector<Entry> entries) {
    check_pair(pair);
    const auto n = static_cast<StateIndex>(states_.size());
    if (source < 0 || source >= n) throw MachineError("row source out of range");
    for (auto& e : entries) {
        if (e.target < 0 || e.target >= n) throw MachineError("row target out of range");
        if (e.expr.empty()) e.expr = format_amplitude(e.value);
    }
    ops_[pair][source] = std::move(entries);
}

void OperatorTable::set_row(const SymbolPair& pair, const std::string& source,
                            const std::vector<std::pair<std::string, std::string>>& targets) {
    std::vector<Entry> entries;
    entries.reserve(targets.size());
    for (const auto& [target, expr] : targets) {
        entries.push_back(Entry{state_index(target), parse_amplitude(expr), expr});
    }
    set_row(pair, state_index(source), std::move(entries));
}

void OperatorTable::set_move(StateIndex state, HeadMove move) {
    if (move.first < 0 || move.first > 1 || move.second < 0 || move.second > 1) {
        throw MachineError("head move must be 0 or 1");
    }
    moves_.at(state) = move;
}

const std::vector<Entry>* OperatorTable::row(const SymbolPair& pair, StateIndex source) const {
    auto op = ops_.find(pair);
    if (op == ops_.end()) return nullptr;
    auto r = op->second.find(source);
    return r == op->second.end() ? nullptr : &r->second;
}

ApplyResult apply_rows(const Rows& rows, const Superposition<StateIndex>& psi) {
    ApplyResult out;
    for (const auto& [q, amp] : psi) {
        auto r = rows.find(q);
        if (r == rows.end()) {
            out.sink_mass += std::norm(amp);
            continue;
        }
        for (const auto& e : r->second) out.state.add(e.target, amp * e.value);
    }
    return out;
}

ApplyResult apply_operator(const OperatorTable& table, const SymbolPair& pair,
                           const Superposition<StateIndex>& psi) {
    if (!table.has_symbol(0, pair.first)) throw AlphabetError("symbol '" + pair.first + "' not in tape-1 alphabet");
    if (!table.has_symbol(1, pair.second)) throw AlphabetError("symbol '" + pair.second + "' not in tape-2 alphabet");
    static const Rows kEmpty;
    auto op = table.operators().find(pair);
    return apply_rows(op == table.operators().end() ? kEmpty : op->second, psi);
}

GramDeviation gram_deviation(const Rows& rows, std::string label) {
    GramDeviation dev{std::move(label)};
    std::vector<std::pair<StateIndex, std::map<StateIndex, Complex>>> images;
    for (const auto& [src, entries] : rows) {
        std::map<StateIndex, Complex> v;
        for (const auto& e : entries) v[e.target] += e.value;
        images.emplace_back(src, std::move(v));
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i; j < images.size(); ++j) {
            Complex inner{};
            const auto& a = images[i].second;
            const auto& b = images[j].second;
            for (const auto& [t, x] : a) {
                auto it = b.find(t);
                if (it != b.end()) inner += std::conj(x) * it->second;
            }
            const double d = std::abs(inner - (i == j ? Complex{1.0, 0.0} : Complex{}));
            if (d > dev.max_deviation) {
                dev.max_deviation = d;
                dev.worst_first = images[i].first;
                dev.worst_second = images[j].first;
            }
        }
    }
    return dev;
}

const GramDeviation* GramReport::worst() const {
    const GramDeviation* best = nullptr;
    for (const auto& op : operators) {
        if (!best || op.max_deviation > best->max_deviation) best = &op;
    }
    return best;
}

GramReport check_gram_wellformed(const OperatorTable& table, double tol) {
    GramReport report;
    for (const auto& [pair, rows] : table.operators()) {
        report.operators.push_back(gram_deviation(rows, to_string(pair)));
        report.max_deviation = std::max(report.max_deviation, report.operators.back().max_deviation);
    }
    report.passed = report.max_deviation <= tol;
    return report;
}

namespace {

Eigen::MatrixXcd dense_rows(const Rows& rows, std::size_t n) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& [src, entries] : rows) {
        for (const auto& e : entries) m(src, e.target) += e.value;
    }
    return m;
}

std::string fresh_name(const OperatorTable& table, std::size_t k) {
    std::string name = "q_rej_c" + std::to_string(k);
    while (table.find_state(name)) name += "'";
    return name;
}

}  // namespace

Eigen::MatrixXcd rows_matrix(const Rows& rows, std::size_t n) { return dense_rows(rows, n); }

Eigen::MatrixXcd symbol_pair_matrix(const OperatorTable& table, const SymbolPair& pair) {
    if (!table.has_symbol(0, pair.first)) throw AlphabetError("symbol '" + pair.first + "' not in tape-1 alphabet");
    if (!table.has_symbol(1, pair.second)) throw AlphabetError("symbol '" + pair.second + "' not in tape-2 alphabet");
    auto op = table.operators().find(pair);
    if (op == table.operators().end()) return Eigen::MatrixXcd::Zero(table.state_count(), table.state_count());
    return dense_rows(op->second, table.state_count());
}

CompletionResult unitary_complete(const OperatorTable& table) {
    const auto gram = check_gram_wellformed(table, kValidationTolerance);
    if (!gram.passed) {
        const auto* w = gram.worst();
        throw GramError("operator " + w->label + " violates orthonormality (deviation " +
                        std::to_string(w->max_deviation) + ")");
    }

    std::vector<SymbolPair> pairs;
    auto full1 = table.alphabet(0);
    auto full2 = table.alphabet(1);
    for (const auto& s : {kLeftEnd, kRightEnd}) {
        if (std::find(full1.begin(), full1.end(), s) == full1.end()) full1.push_back(s);
        if (std::find(full2.begin(), full2.end(), s) == full2.end()) full2.push_back(s);
    }
    for (const auto& a : full1)
        for (const auto& b : full2) pairs.push_back({a, b});

    const std::size_t n = table.state_count();
    std::size_t extra = 0;
    for (const auto& pair : pairs) {
        auto op = table.operators().find(pair);
        const std::size_t defined = op == table.operators().end() ? 0 : op->second.size();
        extra = std::max(extra, n - defined);
    }

    CompletionResult result{table, {}};
    OperatorTable& out = result.table;
    for (std::size_t k = 0; k < extra; ++k) {
        auto name = fresh_name(out, k);
        out.add_state(name, HeadMove{0, 0});
        result.added_reject_states.push_back(name);
    }
    if (extra == 0) return result;

    const std::size_t total = n + extra;
    for (const auto& pair : pairs) {
        static const Rows kEmpty;
        auto op = table.operators().find(pair);
        const Rows& rows = op == table.operators().end() ? kEmpty : op->second;

        // Orthonormal columns collected so far; original images live in the
        // first n coordinates, fresh reject targets in the rest.
        std::vector<Eigen::VectorXcd> basis;
        for (const auto& [src, entries] : rows) {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(total);
            for (const auto& e : entries) v(e.target) += e.value;
            basis.push_back(v);
        }
        std::size_t next_reject = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (rows.count(static_cast<StateIndex>(q))) continue;
            const auto target = static_cast<StateIndex>(n + next_reject++);
            out.set_row(pair, static_cast<StateIndex>(q), {Entry{target, {1.0, 0.0}, "1"}});
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(total);
            v(target) = 1.0;
            basis.push_back(v);
        }
        // Remaining sources are the fresh states; extend the basis
        // deterministically from e_0, e_1, ...
        std::size_t candidate = 0;
        for (std::size_t q = n; q < total; ++q) {
            Eigen::VectorXcd v;
            for (;;) {
                if (candidate >= total) throw GramError("basis extension failed for " + to_string(pair));
                v = Eigen::VectorXcd::Unit(total, candidate++);
                for (int pass = 0; pass < 2; ++pass) {
                    for (const auto& b : basis) v -= b * b.dot(v);
                }
                if (v.norm() > 1e-6) break;
            }
            v /= v.norm();
            basis.push_back(v);
            std::vector<Entry> entries;
            for (std::size_t t = 0; t < total; ++t) {
                if (std::abs(v(t)) >= kPruneThreshold) {
                    entries.push_back(Entry{static_cast<StateIndex>(t), v(t), {}});
                }
            }
            out.set_row(pair, static_cast<StateIndex>(q), std::move(entries));
        }
    }
    return result;
}

}  // namespace qfa
