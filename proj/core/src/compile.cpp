#include "qfa/compile.hpp"

#include "qfa/errors.hpp"

namespace qfa {

std::string numbered_symbol(const Symbol& p, std::size_t i) { return p + "_" + std::to_string(i); }

TransitionNumbering TransitionNumbering::of(const Dfa& d) {
    TransitionNumbering n;
    for (std::size_t s = 0; s < d.alphabet().size(); ++s) {
        const Symbol& p = d.alphabet()[s];
        auto& list = n.by_symbol[p];
        for (int q = 0; q < static_cast<int>(d.states().size()); ++q) {
            list.push_back(Numbered{q, d.next(q, s), numbered_symbol(p, list.size() + 1)});
        }
    }
    return n;
}

std::vector<Symbol> TransitionNumbering::fresh_symbols(const Dfa& d) const {
    std::vector<Symbol> out;
    for (const auto& p : d.alphabet()) {
        for (const auto& t : by_symbol.at(p)) out.push_back(t.numbered);
    }
    return out;
}

TwoTapeQfa compile_dfa(const Dfa& d) {
    const auto numbering = TransitionNumbering::of(d);

    TwoTapeQfa m;
    m.mode = HeadMode::two_tape;
    m.input_alphabet = d.alphabet();
    m.tape2_alphabet = d.alphabet();
    for (const auto& s : numbering.fresh_symbols(d)) m.tape2_alphabet.push_back(s);

    OperatorTable table({}, m.input_alphabet, m.tape2_alphabet);
    const StateIndex start = table.add_state("q0'", {1, 1});
    std::vector<StateIndex> index;
    for (const auto& name : d.states()) index.push_back(table.add_state(name, {1, 1}));

    // One accept state per final state keeps the ($,$) images orthogonal.
    std::map<int, StateIndex> accept;
    if (d.accepting().size() == 1) {
        accept[*d.accepting().begin()] = table.add_state("q_acc", {0, 0});
    } else {
        for (int f : d.accepting()) accept[f] = table.add_state("q_acc_" + d.states()[f], {0, 0});
    }

    auto one = [](StateIndex t) { return std::vector<Entry>{Entry{t, Complex(1.0, 0.0), "1"}}; };
    table.set_row({kLeftEnd, kLeftEnd}, start, one(index[d.start()]));
    for (const auto& p : d.alphabet()) {
        for (const auto& t : numbering.by_symbol.at(p)) {
            m.rho.add(p, t.numbered);
            table.set_row({p, t.numbered}, index[t.source], one(index[t.target]));
        }
    }
    for (const auto& [f, acc] : accept) {
        table.set_row({kRightEnd, kRightEnd}, index[f], one(acc));
        m.accepting.insert(acc);
    }
    m.table = std::move(table);
    m.start = Superposition<StateIndex>::basis(start);
    return m;
}

TwoTapeQfa lift_rmfa(const MultiHeadDfa& d) {
    if (d.heads() != 2) throw MachineError("lift needs a 2-head automaton");
    const auto report = check_reversible(d);
    if (!report.reversible()) {
        std::string why = "automaton is not reversible";
        if (!report.witnesses.empty()) why += ": " + report.witnesses.front();
        throw MachineError(why);
    }

    TwoTapeQfa m;
    m.mode = HeadMode::two_head;
    m.input_alphabet = d.alphabet();
    m.tape2_alphabet = d.alphabet();
    m.rho = SymbolRelation::identity(d.alphabet());

    OperatorTable table({}, m.input_alphabet, m.tape2_alphabet);
    for (const auto& name : d.states()) table.add_state(name, {0, 0});
    for (const auto& [key, step] : d.transitions()) {
        table.set_move(step.target, HeadMove{step.moves[0], step.moves[1]});
    }
    for (const auto& [key, step] : d.transitions()) {
        const auto& [source, reads] = key;
        table.set_row({reads[0], reads[1]}, source, {Entry{step.target, Complex(1.0, 0.0), "1"}});
    }
    for (int f : d.accepting()) m.accepting.insert(f);
    m.table = std::move(table);
    m.start = Superposition<StateIndex>::basis(d.start());
    return m;
}

}  // namespace qfa
