#include "qfa/registry.hpp"

#include <functional>
#include <map>

#include "qfa/errors.hpp"

namespace qfa {

namespace {

using Targets = std::vector<std::pair<std::string, std::string>>;

Dfa even_a() {
    return Dfa({"even", "odd"}, {"a"}, "even", {"even"},
               {{{"even", "a"}, "odd"}, {{"odd", "a"}, "even"}});
}

Dfa ends_in_b() {
    return Dfa({"s0", "s1"}, {"a", "b"}, "s0", {"s1"},
               {{{"s0", "a"}, "s0"}, {{"s0", "b"}, "s1"}, {{"s1", "a"}, "s0"}, {{"s1", "b"}, "s1"}});
}

Dfa a_mod_3() {
    return Dfa({"r0", "r1", "r2"}, {"a", "b"}, "r0", {"r0"},
               {{{"r0", "a"}, "r1"},
                {{"r1", "a"}, "r2"},
                {{"r2", "a"}, "r0"},
                {{"r0", "b"}, "r0"},
                {{"r1", "b"}, "r1"},
                {{"r2", "b"}, "r2"}});
}

MultiHeadDfa anbn_dfa2() {
    MultiHeadDfa m({"q0", "q1", "q2"}, {"a", "b"}, 2, "q0", {"q2"});
    m.add_transition("q0", {"#", "#"}, "q0", {0, 1});
    m.add_transition("q0", {"#", "a"}, "q0", {0, 1});
    m.add_transition("q0", {"#", "b"}, "q1", {1, 0});
    m.add_transition("q0", {"a", "a"}, "q0", {1, 0});
    m.add_transition("q0", {"b", "a"}, "q1", {1, 1});
    m.add_transition("q1", {"a", "b"}, "q1", {1, 1});
    m.add_transition("q1", {"b", "a"}, "q1", {1, 0});
    m.add_transition("q1", {"b", "$"}, "q2", {0, 0});
    m.add_transition("q1", {"b", "b"}, "q2", {0, 0});
    m.add_transition("q2", {"b", "b"}, "q2", {1, 0});
    m.add_transition("q2", {"a", "b"}, "q0", {0, 0});
    m.add_transition("q2", {"$", "b"}, "q0", {0, 0});
    return m;
}

MultiHeadDfa anbncn_rev2() {
    MultiHeadDfa m({"q0", "q1", "q2", "q3", "q_f"}, {"a", "b", "c"}, 2, "q0", {"q_f"});
    m.add_transition("q0", {"#", "#"}, "q0", {0, 1});
    m.add_transition("q0", {"#", "a"}, "q0", {0, 1});
    m.add_transition("q0", {"#", "b"}, "q1", {1, 1});
    m.add_transition("q1", {"a", "b"}, "q1", {1, 1});
    m.add_transition("q1", {"a", "c"}, "q2", {1, 1});
    m.add_transition("q2", {"b", "c"}, "q2", {1, 1});
    m.add_transition("q2", {"b", "$"}, "q3", {1, 0});
    m.add_transition("q3", {"c", "$"}, "q3", {1, 0});
    m.add_transition("q3", {"$", "$"}, "q_f", {0, 0});
    return m;
}

TwoTapeQfa make_qfa(const std::vector<std::pair<std::string, HeadMove>>& states, std::vector<Symbol> sigma,
                    std::vector<Symbol> sigma2, const std::vector<std::pair<Symbol, Symbol>>& rho) {
    TwoTapeQfa m;
    m.input_alphabet = std::move(sigma);
    m.tape2_alphabet = std::move(sigma2);
    m.rho = SymbolRelation(rho);
    m.table = OperatorTable({}, m.input_alphabet, m.tape2_alphabet);
    for (const auto& [name, move] : states) m.table.add_state(name, move);
    m.start = Superposition<StateIndex>::basis(0);
    return m;
}

TwoTapeQfa anbncn_2t1qfa() {
    auto m = make_qfa({{"q0", {0, 1}}, {"q1", {1, 1}}, {"q2", {1, 1}}, {"q3", {1, 0}}, {"q_acc", {0, 0}}},
                      {"a", "b", "c"}, {"a", "b", "c"}, {{"a", "a"}, {"b", "b"}, {"c", "c"}});
    auto& t = m.table;
    t.set_row({"#", "#"}, "q0", Targets{{"q0", "1"}});
    t.set_row({"#", "a"}, "q0", Targets{{"q0", "1"}});
    t.set_row({"#", "b"}, "q0", Targets{{"q1", "1"}});
    t.set_row({"a", "b"}, "q1", Targets{{"q1", "1"}});
    t.set_row({"a", "c"}, "q1", Targets{{"q2", "1"}});
    t.set_row({"b", "c"}, "q2", Targets{{"q2", "1"}});
    t.set_row({"b", "$"}, "q2", Targets{{"q3", "1"}});
    t.set_row({"c", "$"}, "q3", Targets{{"q3", "1"}});
    t.set_row({"$", "$"}, "q3", Targets{{"q_acc", "1"}});
    m.accepting = {t.state_index("q_acc")};
    return m;
}

TwoTapeQfa ww_machine() {
    auto m = make_qfa({{"q0", {0, 1}},
                       {"q1", {0, 0}},
                       {"q2", {0, 0}},
                       {"q3", {1, 1}},
                       {"q4", {1, 0}},
                       {"q5", {0, 0}},
                       {"q6", {1, 1}},
                       {"q7", {1, 0}},
                       {"q8", {0, 0}},
                       {"q_rej", {0, 0}},
                       {"q_rej1", {0, 0}},
                       {"q_rej2", {0, 0}},
                       {"s1", {0, 0}},
                       {"s2", {0, 0}}},
                      {"a", "b"}, {"a", "b", "m"}, {{"a", "a"}, {"a", "m"}, {"b", "b"}, {"b", "m"}});
    auto& t = m.table;
    for (const Symbol y : {"#", "a", "b"}) t.set_row({"#", y}, "q0", Targets{{"q0", "1"}});
    t.set_row({"#", "m"}, "q0", Targets{{"q1", "1/sqrt(2)"}, {"q2", "1/sqrt(2)"}});
    t.set_row({"#", "m"}, "q1", Targets{{"q3", "1"}});
    t.set_row({"#", "m"}, "q2", Targets{{"q6", "1"}});
    for (const Symbol x : {"a", "b"}) {
        for (const Symbol y : {"a", "b"}) {
            t.set_row({x, y}, "q3", Targets{{x == y ? "q3" : "q_rej", "1"}});
            t.set_row({x, y}, "q6", Targets{{"q7", "1"}});
            t.set_row({x, y}, "q7", Targets{{"q6", "1"}});
        }
        t.set_row({x, "$"}, "q3", Targets{{"q3", "1"}});
        t.set_row({x, "$"}, "q4", Targets{{"q4", "1"}});
        t.set_row({x, "$"}, "q6", Targets{{"q_rej2", "1"}});
        t.set_row({x, "$"}, "q7", Targets{{"q_rej1", "1"}});
        t.set_row({"$", x}, "q6", Targets{{"q_rej2", "1"}});
        t.set_row({"$", x}, "q7", Targets{{"q_rej1", "1"}});
    }
    t.set_row({"$", "$"}, "q3", Targets{{"q5", "1"}});
    t.set_row({"$", "$"}, "q6", Targets{{"q8", "1"}});
    t.set_row({"$", "$"}, "q7", Targets{{"q_rej1", "1"}});
    // 2-point transform F[j,l] = exp(2 pi i j l / 2) / sqrt(2), j = 1 for q5, 2 for q8.
    t.set_row({"$", "$"}, "q5", Targets{{"s1", "exp(i*pi*1*1)/sqrt(2)"}, {"s2", "exp(i*pi*1*2)/sqrt(2)"}});
    t.set_row({"$", "$"}, "q8", Targets{{"s1", "exp(i*pi*2*1)/sqrt(2)"}, {"s2", "exp(i*pi*2*2)/sqrt(2)"}});
    m.accepting = {t.state_index("s2")};
    m.rejecting = {t.state_index("s1"), t.state_index("q_rej"), t.state_index("q_rej1"), t.state_index("q_rej2")};
    return m;
}

TwoTapeQfa percent_machine() {
    auto m = make_qfa({{"q0", {1, 1}}, {"q1", {0, 1}}, {"q2", {1, 1}}, {"q3", {1, 1}}, {"q4", {0, 0}}, {"q5", {0, 0}}},
                      {"a", "b", "*", "%"}, {"a", "b", "*", "%", "v_p1", "v_p2"},
                      {{"a", "a"}, {"%", "%"}, {"%", "v_p1"}, {"%", "v_p2"}, {"b", "b"}, {"*", "*"}});
    auto& t = m.table;
    for (const Symbol s : {"#", "%", "a", "b", "*"}) t.set_row({s, s}, "q0", Targets{{"q0", "1"}});
    t.set_row({"%", "v_p1"}, "q0", Targets{{"q1", "1"}});
    for (const Symbol y : {"a", "b", "*", "%"}) t.set_row({"%", y}, "q1", Targets{{"q1", "1"}});
    t.set_row({"%", "v_p2"}, "q1", Targets{{"q2", "1"}});
    t.set_row({"a", "a"}, "q2", Targets{{"q2", "1"}});
    t.set_row({"b", "b"}, "q2", Targets{{"q2", "1"}});
    t.set_row({"*", "*"}, "q2", Targets{{"q3", "1"}});
    t.set_row({"a", "a"}, "q3", Targets{{"q3", "1"}});
    t.set_row({"b", "b"}, "q3", Targets{{"q3", "1"}});
    for (const auto& [x, y] : std::vector<std::pair<Symbol, Symbol>>{{"a", "b"},
                                                                     {"b", "a"},
                                                                     {"a", "%"},
                                                                     {"b", "%"},
                                                                     {"a", "$"},
                                                                     {"b", "$"},
                                                                     {"%", "a"},
                                                                     {"%", "b"},
                                                                     {"%", "*"}}) {
        t.set_row({x, y}, "q3", Targets{{"q5", "1"}});
    }
    t.set_row({"%", "%"}, "q3", Targets{{"q4", "1"}});
    t.set_row({"%", "$"}, "q3", Targets{{"q4", "1"}});
    m.accepting = {t.state_index("q5")};
    m.rejecting = {t.state_index("q4")};
    return m;
}

struct Builder {
    std::string locus;
    std::string language;
    std::vector<std::string> repairs;
    std::vector<std::string> notes;
    std::function<Machine()> build;
};

const std::map<std::string, Builder>& builders() {
    static const std::map<std::string, Builder> table = {
        {"anbn-dfa2",
         {"two-head deterministic automaton, worked classical example",
          "a^n b^n, n >= 1",
          {},
          {"printed with a transition diagram and the matrices M_aa, M_ba, M_bb",
           "not reversible: two rows of M_ba reach q1",
           "rows for (q0,a,a), (q0,b,a), (q2,a,b), (q2,$,b) are unreachable from the start but listed"},
          [] { return Machine{anbn_dfa2()}; }}},
        {"anbncn-rev2",
         {"two-head reversible automaton, worked classical example",
          "a^n b^n c^n, n >= 1",
          {},
          {"transition function used verbatim"},
          [] { return Machine{anbncn_rev2()}; }}},
        {"anbncn-2t1qfa",
         {"two-tape quantum automaton with identity relation, first quantum example",
          "a^n b^n c^n, n >= 1",
          {},
          {"Q_rej is declared empty; rejection happens through the sink on undefined reads"},
          [] { return Machine{anbncn_2t1qfa()}; }}},
        {"ww",
         {"two-tape quantum automaton with non-injective relation, ww theorem",
          "ww, w in {a,b}+",
          {"(x,$) from q3 goes to q3 instead of q4: rows q3 and q4 both mapped to q4, breaking orthogonality; "
           "head 2 stays on $ by clamping",
           "($,$) from q3 goes to q5, since q3 now reaches ($,$) itself; q4 is kept but unreachable",
           "($,$) from q6 goes to q8 instead of from q7: with speed 2 against 1 the branch reaches ($,$) in q6",
           "($,$) from q7 goes to q_rej1 (undefined in print)",
           "the garbled transform exponents are read as F[j,l] = exp(2 pi i j l / 2) / sqrt(2), j=1 for q5, "
           "j=2 for q8, l=1 for s1, l=2 for s2"},
          {"tape 2 alphabet is {a,b,m}; the input alphabet is {a,b}",
           "the empty word has no guess tape carrying m and is rejected",
           "for a non-member every guess tape accepts with probability at most 1/4"},
          [] { return Machine{ww_machine()}; }}},
        {"percent",
         {"two-tape quantum automaton for the block language",
          "%w1*x1%...%wn*xn with some i,j: wi = wj, xi != xj",
          {"(*,*) from q2 goes to q3 instead of q2, so the x parts are compared in q3",
           "(a,a) from q3 stays in q3 instead of accepting, and (b,b) from q3 to q3 is added",
           "(a,b) from q3 to q5 is added so every letter mismatch accepts",
           "the printed q3 self-loops on (%,a), (%,b), (%,*), (%,%) are dropped: they duplicate rows that "
           "go to q5 or q4",
           "(a,*), (b,*), (*,a), (*,b), (*,%), (*,$) from q3 are dropped: head 2 never reads * or head 1 "
           "never reads * in q3",
           "v_p1 and v_p2 are tape-2 symbols only"},
          {"only well-formed words (leading %, one * per block) are meaningful"},
          [] { return Machine{percent_machine()}; }}},
        {"even-a",
         {"test DFA", "even number of a over {a}", {}, {}, [] { return Machine{even_a()}; }}},
        {"ends-in-b",
         {"test DFA", "words over {a,b} ending in b", {}, {}, [] { return Machine{ends_in_b()}; }}},
        {"a-mod-3",
         {"test DFA", "number of a divisible by 3 over {a,b}", {}, {}, [] { return Machine{a_mod_3()}; }}},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : builders()) out.push_back(name);
        return out;
    }();
    return names;
}

RegistryEntry build_example(const std::string& name) {
    auto it = builders().find(name);
    if (it == builders().end()) throw Error("unknown example '" + name + "'");
    const auto& b = it->second;
    return RegistryEntry{name, b.locus, b.language, b.repairs, b.notes, b.build()};
}

WwTransform ww_transform_states(const TwoTapeQfa& ww) {
    const auto& t = ww.table;
    return WwTransform{t.state_index("q5"), t.state_index("q8"), t.state_index("s1"), t.state_index("s2")};
}

}  // namespace qfa
