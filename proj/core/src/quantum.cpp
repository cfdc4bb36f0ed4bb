#include "qfa/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "qfa/errors.hpp"

namespace qfa {

StateIndex MeasureManyQfa::state_index(const std::string& name) const {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) throw MachineError("unknown state '" + name + "'");
    return static_cast<StateIndex>(it - states.begin());
}

void MeasureManyQfa::set_row(const Symbol& symbol, const std::string& source,
                             const std::vector<std::pair<std::string, std::string>>& targets) {
    if (!is_endmarker(symbol) && std::find(alphabet.begin(), alphabet.end(), symbol) == alphabet.end()) {
        throw AlphabetError("symbol '" + symbol + "' not in alphabet");
    }
    std::vector<Entry> entries;
    for (const auto& [t, expr] : targets) entries.push_back(Entry{state_index(t), parse_amplitude(expr), expr});
    operators[symbol][state_index(source)] = std::move(entries);
}

std::string to_string(const Configuration& c, const OperatorTable& table) {
    return "(" + table.state_name(c.state) + "," + std::to_string(c.head1) + "," + std::to_string(c.head2) + ")";
}

RunResult run_mm1qfa(const MeasureManyQfa& m, const Word& word, bool trace) {
    for (const auto& s : word) {
        if (is_endmarker(s) || std::find(m.alphabet.begin(), m.alphabet.end(), s) == m.alphabet.end()) {
            throw AlphabetError("symbol '" + s + "' not in alphabet");
        }
    }
    static const Rows kEmpty;
    RunResult result;
    auto psi = Superposition<StateIndex>::basis(m.start);
    for (const auto& symbol : with_endmarkers(word)) {
        auto op = m.operators.find(symbol);
        auto applied = apply_rows(op == m.operators.end() ? kEmpty : op->second, psi);
        TraceStep ts;
        ts.step = result.steps + 1;
        ts.sink_mass = applied.sink_mass;
        Superposition<StateIndex> rest;
        for (const auto& [q, amp] : applied.state) {
            if (m.accepting.count(q)) {
                ts.acc_mass += std::norm(amp);
            } else if (m.rejecting.count(q)) {
                ts.rej_mass += std::norm(amp);
            } else {
                rest.add(q, amp);
            }
        }
        result.p_acc += ts.acc_mass;
        result.p_rej += ts.rej_mass + ts.sink_mass;
        result.p_sink += ts.sink_mass;
        psi = std::move(rest);
        ++result.steps;
        if (trace) {
            for (const auto& [q, amp] : psi) ts.live.emplace_back(Configuration{q, 0, 0}, amp);
            result.trace.push_back(std::move(ts));
        }
    }
    result.p_live = psi.norm_squared();
    return result;
}

Tapes make_tapes(const TwoTapeQfa& m, const Word& w1, const Word& w2) {
    for (const auto& s : w1) {
        if (is_endmarker(s) ||
            std::find(m.input_alphabet.begin(), m.input_alphabet.end(), s) == m.input_alphabet.end()) {
            throw AlphabetError("symbol '" + s + "' not in input alphabet");
        }
    }
    Tapes tapes;
    tapes.first = with_endmarkers(w1);
    if (m.mode == HeadMode::two_head) {
        tapes.second = tapes.first;
        return tapes;
    }
    for (const auto& s : w2) {
        if (is_endmarker(s) ||
            std::find(m.tape2_alphabet.begin(), m.tape2_alphabet.end(), s) == m.tape2_alphabet.end()) {
            throw AlphabetError("symbol '" + s + "' not in tape-2 alphabet");
        }
    }
    if (!rho_compatible(m.rho, w1, w2)) {
        throw AlphabetError("tape pair is not compatible with the symbol relation");
    }
    tapes.second = with_endmarkers(w2);
    return tapes;
}

EvolveResult evolve_twotape(const TwoTapeQfa& m, const Tapes& tapes, const Superposition<Configuration>& psi) {
    EvolveResult out;
    const Word& second = m.mode == HeadMode::two_head ? tapes.first : tapes.second;
    const int last1 = static_cast<int>(tapes.first.size()) - 1;
    const int last2 = static_cast<int>(second.size()) - 1;
    for (const auto& [c, amp] : psi) {
        if (m.is_halting(c.state)) continue;
        const SymbolPair pair{tapes.first.at(c.head1), second.at(c.head2)};
        const auto* row = m.table.row(pair, c.state);
        if (!row) {
            out.sink_mass += std::norm(amp);
            continue;
        }
        for (const auto& e : *row) {
            const HeadMove d = m.table.move(e.target);
            out.state.add(Configuration{e.target, std::min(last1, c.head1 + d.first),
                                        std::min(last2, c.head2 + d.second)},
                          amp * e.value);
        }
    }
    return out;
}

StepResult step_twotape(const TwoTapeQfa& m, const Tapes& tapes, const Superposition<Configuration>& psi) {
    auto evolved = evolve_twotape(m, tapes, psi);
    StepResult out;
    out.sink_mass = evolved.sink_mass;
    for (const auto& [c, amp] : evolved.state) {
        if (m.accepting.count(c.state)) {
            out.acc_mass += std::norm(amp);
        } else if (m.rejecting.count(c.state)) {
            out.rej_mass += std::norm(amp);
        } else {
            out.state.add(c, amp);
        }
    }
    return out;
}

std::size_t default_max_steps(const TwoTapeQfa& m, std::size_t len1, std::size_t len2) {
    return m.table.state_count() * (len1 + 2) * (len2 + 2);
}

RunResult run_twotape(const TwoTapeQfa& m, const Word& w1, const Word& w2,
                      std::optional<std::size_t> max_steps, bool trace) {
    const Tapes tapes = make_tapes(m, w1, w2);
    const std::size_t budget =
        max_steps.value_or(default_max_steps(m, w1.size(), tapes.second.size() - 2));

    RunResult result;
    Superposition<Configuration> psi;
    for (const auto& [q, amp] : m.start) {
        if (m.accepting.count(q)) {
            result.p_acc += std::norm(amp);
        } else if (m.rejecting.count(q)) {
            result.p_rej += std::norm(amp);
        } else {
            psi.add(Configuration{q, 0, 0}, amp);
        }
    }
    constexpr double kLiveFloor = 1e-12;
    while (psi.norm_squared() >= kLiveFloor && result.steps < budget) {
        auto step = step_twotape(m, tapes, psi);
        result.p_acc += step.acc_mass;
        result.p_rej += step.rej_mass + step.sink_mass;
        result.p_sink += step.sink_mass;
        psi = std::move(step.state);
        ++result.steps;
        if (trace) {
            TraceStep ts{result.steps, {}, step.acc_mass, step.rej_mass, step.sink_mass};
            for (const auto& [c, amp] : psi) ts.live.emplace_back(c, amp);
            result.trace.push_back(std::move(ts));
        }
    }
    result.p_live = psi.norm_squared();
    result.livelock = result.p_live >= kLiveFloor;
    return result;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void ValidationReport::add(std::string name, bool ok, std::string detail) {
    checks.push_back(Check{std::move(name), ok, std::move(detail)});
}

namespace {

std::string gram_detail(const std::vector<GramDeviation>& ops, const std::vector<std::string>& names, double tol) {
    std::string detail;
    double worst = 0.0;
    for (const auto& op : ops) {
        worst = std::max(worst, op.max_deviation);
        if (op.max_deviation > tol) {
            if (!detail.empty()) detail += "; ";
            detail += "operator (" + op.label + ") deviation " + std::to_string(op.max_deviation) + " at (" +
                      names.at(op.worst_first) + "," + names.at(op.worst_second) + ")";
        }
    }
    if (detail.empty()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max deviation %.3g over %zu operators", worst, ops.size());
        detail = buf;
    }
    return detail;
}

bool contains(const std::vector<Symbol>& alphabet, const Symbol& s) {
    return std::find(alphabet.begin(), alphabet.end(), s) != alphabet.end();
}

}  // namespace

ValidationReport validate_automaton(const TwoTapeQfa& m) {
    ValidationReport report;

    auto gram = check_gram_wellformed(m.table, kValidationTolerance);
    report.add("gram", gram.passed, gram_detail(gram.operators, m.table.states(), kValidationTolerance));

    std::string overlap;
    for (StateIndex q : m.accepting) {
        if (m.rejecting.count(q)) overlap += (overlap.empty() ? "" : ", ") + m.table.state_name(q);
    }
    report.add("partition", overlap.empty(), overlap.empty() ? "accepting and rejecting sets disjoint"
                                                             : "in both halting sets: " + overlap);

    std::string moving;
    for (StateIndex q = 0; q < static_cast<StateIndex>(m.table.state_count()); ++q) {
        if (m.is_halting(q) && m.table.move(q) != HeadMove{0, 0}) {
            moving += (moving.empty() ? "" : ", ") + m.table.state_name(q);
        }
    }
    report.add("halting-moves", moving.empty(),
               moving.empty() ? "halting states keep both heads" : "halting states with nonzero move: " + moving);

    const double norm = m.start.norm_squared();
    char buf[64];
    std::snprintf(buf, sizeof buf, "start squared norm %.12g", norm);
    report.add("start-normalized", !m.start.empty() && std::abs(norm - 1.0) <= kValidationTolerance, buf);

    std::string bad;
    for (const auto& s : m.input_alphabet) {
        if (is_endmarker(s)) bad += " endmarker in input alphabet;";
    }
    for (const auto& [a, b] : m.rho.pairs()) {
        if (!contains(m.input_alphabet, a)) bad += " rho domain symbol '" + a + "' not in input alphabet;";
        if (!contains(m.tape2_alphabet, b)) bad += " rho codomain symbol '" + b + "' not in tape-2 alphabet;";
    }
    if (m.mode == HeadMode::two_head) {
        if (!m.rho.empty() && !m.rho.is_identity()) bad += " two-head mode requires identity rho;";
        if (m.tape2_alphabet != m.input_alphabet) bad += " two-head mode requires equal alphabets;";
    }
    report.add("rho", bad.empty(), bad.empty() ? "relation alphabets consistent" : bad);

    std::string stray;
    for (const auto& s : m.table.alphabet(0)) {
        if (!is_endmarker(s) && !contains(m.input_alphabet, s)) stray += " tape-1 '" + s + "';";
    }
    for (const auto& s : m.table.alphabet(1)) {
        if (!is_endmarker(s) && !contains(m.tape2_alphabet, s)) stray += " tape-2 '" + s + "';";
    }
    report.add("alphabets", stray.empty(), stray.empty() ? "operator symbols declared" : "undeclared symbols:" + stray);

    for (const auto& name : unreachable_states(m)) report.warnings.push_back("unreachable state " + name);
    return report;
}

ValidationReport validate_automaton(const MeasureManyQfa& m) {
    ValidationReport report;
    std::vector<GramDeviation> ops;
    for (const auto& [symbol, rows] : m.operators) ops.push_back(gram_deviation(rows, symbol));
    const bool gram_ok = std::all_of(ops.begin(), ops.end(),
                                     [](const GramDeviation& d) { return d.max_deviation <= kValidationTolerance; });
    report.add("gram", gram_ok, gram_detail(ops, m.states, kValidationTolerance));

    bool disjoint = true;
    for (StateIndex q : m.accepting) disjoint = disjoint && !m.rejecting.count(q);
    report.add("partition", disjoint, disjoint ? "accepting and rejecting sets disjoint" : "halting sets overlap");

    const bool start_ok = m.start >= 0 && m.start < static_cast<StateIndex>(m.states.size());
    report.add("start-normalized", start_ok, start_ok ? "start is a basis state" : "start state out of range");

    std::string stray;
    for (const auto& [symbol, _] : m.operators) {
        if (!is_endmarker(symbol) && !contains(m.alphabet, symbol)) stray += " '" + symbol + "'";
    }
    report.add("alphabets", stray.empty(), stray.empty() ? "operator symbols declared" : "undeclared symbols:" + stray);
    return report;
}

std::vector<std::string> unreachable_states(const TwoTapeQfa& m) {
    const auto n = m.table.state_count();
    std::vector<bool> seen(n, false);
    std::deque<StateIndex> queue;
    for (const auto& [q, _] : m.start) {
        if (!seen[q]) {
            seen[q] = true;
            queue.push_back(q);
        }
    }
    while (!queue.empty()) {
        const StateIndex q = queue.front();
        queue.pop_front();
        for (const auto& [pair, rows] : m.table.operators()) {
            auto r = rows.find(q);
            if (r == rows.end()) continue;
            for (const auto& e : r->second) {
                if (!seen[e.target]) {
                    seen[e.target] = true;
                    queue.push_back(e.target);
                }
            }
        }
    }
    std::vector<std::string> out;
    for (std::size_t q = 0; q < n; ++q) {
        if (!seen[q]) out.push_back(m.table.state_name(static_cast<StateIndex>(q)));
    }
    return out;
}

}  // namespace qfa
