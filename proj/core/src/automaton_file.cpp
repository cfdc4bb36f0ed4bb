#include "qfa/automaton_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qfa/errors.hpp"

namespace qfa {

using Json = nlohmann::ordered_json;

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw FormatError("field '" + field + "': " + what);
}

const Json& require(const Json& doc, const std::string& key) {
    if (!doc.contains(key)) field_error(key, "missing");
    return doc.at(key);
}

std::string get_string(const Json& j, const std::string& field) {
    if (!j.is_string()) field_error(field, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> get_strings(const Json& j, const std::string& field) {
    if (!j.is_array()) field_error(field, "expected a list");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_string(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::string> optional_strings(const Json& doc, const std::string& key) {
    return doc.contains(key) ? get_strings(doc.at(key), key) : std::vector<std::string>{};
}

int get_move(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) field_error(field, "expected 0 or 1");
    const int v = j.get<int>();
    if (v != 0 && v != 1) field_error(field, "expected 0 or 1");
    return v;
}

void check_declared(const std::vector<std::string>& states, const std::string& name, const std::string& field) {
    if (std::find(states.begin(), states.end(), name) == states.end()) {
        field_error(field, "undeclared state '" + name + "'");
    }
}

void check_alphabet(const std::vector<Symbol>& alphabet, const std::string& field) {
    for (const auto& s : alphabet) {
        if (is_endmarker(s)) field_error(field, "endmarker '" + s + "' is reserved for reads");
        if (s.empty()) field_error(field, "empty symbol");
    }
}

void check_read(const std::vector<Symbol>& alphabet, const Symbol& s, const std::string& field) {
    if (!is_endmarker(s) && std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end()) {
        field_error(field, "undeclared symbol '" + s + "'");
    }
}

Word get_read(const Json& t, std::size_t arity, const std::string& field) {
    auto read = get_strings(require(t, "read"), field + ".read");
    if (read.size() != arity) field_error(field + ".read", "expected " + std::to_string(arity) + " symbols");
    return read;
}

std::vector<std::pair<std::string, std::string>> get_targets(const Json& t, const std::vector<std::string>& states,
                                                             const std::string& field) {
    const auto& to = require(t, "to");
    if (!to.is_array()) field_error(field + ".to", "expected a list of [state, amplitude]");
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < to.size(); ++i) {
        const std::string f = field + ".to[" + std::to_string(i) + "]";
        if (!to[i].is_array() || to[i].size() != 2) field_error(f, "expected [state, amplitude]");
        auto state = get_string(to[i][0], f);
        check_declared(states, state, f);
        std::string expr = to[i][1].is_number() ? to[i][1].dump() : get_string(to[i][1], f);
        try {
            parse_amplitude(expr);
        } catch (const ParseError& e) {
            field_error(f, std::string("bad amplitude: ") + e.what());
        }
        out.emplace_back(std::move(state), std::move(expr));
    }
    return out;
}

std::set<StateIndex> index_set(const std::vector<std::string>& names, const std::vector<std::string>& states,
                               const std::string& field) {
    std::set<StateIndex> out;
    for (const auto& n : names) {
        check_declared(states, n, field);
        out.insert(static_cast<StateIndex>(std::find(states.begin(), states.end(), n) - states.begin()));
    }
    return out;
}

const Json& transitions_of(const Json& doc) {
    const auto& t = require(doc, "transitions");
    if (!t.is_array()) field_error("transitions", "expected a list");
    return t;
}

Dfa parse_dfa(const Json& doc, const std::vector<std::string>& states) {
    auto sigma = get_strings(require(doc, "input_alphabet"), "input_alphabet");
    check_alphabet(sigma, "input_alphabet");
    auto start = get_string(require(doc, "start"), "start");
    check_declared(states, start, "start");
    auto accept = optional_strings(doc, "accept");
    for (const auto& a : accept) check_declared(states, a, "accept");
    std::map<std::pair<std::string, Symbol>, std::string> delta;
    const auto& ts = transitions_of(doc);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string f = "transitions[" + std::to_string(i) + "]";
        auto from = get_string(require(ts[i], "from"), f + ".from");
        check_declared(states, from, f + ".from");
        auto read = get_read(ts[i], 1, f);
        if (is_endmarker(read[0])) field_error(f + ".read", "DFA transitions cannot read endmarkers");
        check_read(sigma, read[0], f + ".read");
        auto to = get_string(require(ts[i], "to"), f + ".to");
        check_declared(states, to, f + ".to");
        delta[{from, read[0]}] = to;
    }
    try {
        return Dfa(states, sigma, start, {accept.begin(), accept.end()}, delta);
    } catch (const Error& e) {
        throw FormatError(e.what());
    }
}

MultiHeadDfa parse_mhdfa(const Json& doc, const std::vector<std::string>& states) {
    auto sigma = get_strings(require(doc, "input_alphabet"), "input_alphabet");
    check_alphabet(sigma, "input_alphabet");
    const auto& heads_json = require(doc, "heads");
    if (!heads_json.is_number_integer() || heads_json.get<int>() < 1) field_error("heads", "expected a positive integer");
    const int heads = heads_json.get<int>();
    auto start = get_string(require(doc, "start"), "start");
    check_declared(states, start, "start");
    auto accept = optional_strings(doc, "accept");
    for (const auto& a : accept) check_declared(states, a, "accept");
    MultiHeadDfa m(states, sigma, heads, start, {accept.begin(), accept.end()});
    const auto& ts = transitions_of(doc);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string f = "transitions[" + std::to_string(i) + "]";
        auto from = get_string(require(ts[i], "from"), f + ".from");
        check_declared(states, from, f + ".from");
        auto read = get_read(ts[i], static_cast<std::size_t>(heads), f);
        for (const auto& s : read) check_read(sigma, s, f + ".read");
        auto to = get_string(require(ts[i], "to"), f + ".to");
        check_declared(states, to, f + ".to");
        const auto& mv = require(ts[i], "move");
        if (!mv.is_array() || mv.size() != static_cast<std::size_t>(heads)) {
            field_error(f + ".move", "expected " + std::to_string(heads) + " moves");
        }
        std::vector<int> moves;
        for (std::size_t h = 0; h < mv.size(); ++h) moves.push_back(get_move(mv[h], f + ".move"));
        try {
            m.add_transition(from, read, to, moves);
        } catch (const Error& e) {
            field_error(f, e.what());
        }
    }
    return m;
}

MeasureManyQfa parse_mm1qfa(const Json& doc, const std::vector<std::string>& states) {
    MeasureManyQfa m;
    m.states = states;
    m.alphabet = get_strings(require(doc, "input_alphabet"), "input_alphabet");
    check_alphabet(m.alphabet, "input_alphabet");
    auto start = get_string(require(doc, "start"), "start");
    check_declared(states, start, "start");
    m.start = m.state_index(start);
    m.accepting = index_set(optional_strings(doc, "accept"), states, "accept");
    m.rejecting = index_set(optional_strings(doc, "reject"), states, "reject");
    const auto& ts = transitions_of(doc);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string f = "transitions[" + std::to_string(i) + "]";
        auto from = get_string(require(ts[i], "from"), f + ".from");
        check_declared(states, from, f + ".from");
        auto read = get_read(ts[i], 1, f);
        check_read(m.alphabet, read[0], f + ".read");
        m.set_row(read[0], from, get_targets(ts[i], states, f));
    }
    return m;
}

TwoTapeQfa parse_twotape(const Json& doc, const std::vector<std::string>& states, HeadMode mode) {
    TwoTapeQfa m;
    m.mode = mode;
    m.input_alphabet = get_strings(require(doc, "input_alphabet"), "input_alphabet");
    check_alphabet(m.input_alphabet, "input_alphabet");
    if (doc.contains("tape2_alphabet")) {
        m.tape2_alphabet = get_strings(doc.at("tape2_alphabet"), "tape2_alphabet");
        check_alphabet(m.tape2_alphabet, "tape2_alphabet");
    } else {
        m.tape2_alphabet = m.input_alphabet;
    }
    if (doc.contains("rho")) {
        const auto& rho = doc.at("rho");
        if (!rho.is_array()) field_error("rho", "expected a list of pairs");
        for (std::size_t i = 0; i < rho.size(); ++i) {
            const std::string f = "rho[" + std::to_string(i) + "]";
            auto pair = get_strings(rho[i], f);
            if (pair.size() != 2) field_error(f, "expected a pair");
            check_read(m.input_alphabet, pair[0], f);
            check_read(m.tape2_alphabet, pair[1], f);
            try {
                m.rho.add(pair[0], pair[1]);
            } catch (const Error& e) {
                field_error(f, e.what());
            }
        }
    } else if (mode == HeadMode::two_head) {
        m.rho = SymbolRelation::identity(m.input_alphabet);
    }

    m.table = OperatorTable({}, m.input_alphabet, m.tape2_alphabet);
    const auto& moves = require(doc, "head_moves");
    if (!moves.is_object()) field_error("head_moves", "expected an object of state -> [d1, d2]");
    for (const auto& [name, _] : moves.items()) check_declared(states, name, "head_moves");
    for (const auto& s : states) {
        HeadMove hm;
        if (moves.contains(s)) {
            const auto& d = moves.at(s);
            const std::string f = "head_moves." + s;
            if (!d.is_array() || d.size() != 2) field_error(f, "expected [d1, d2]");
            hm = HeadMove{get_move(d[0], f), get_move(d[1], f)};
        }
        m.table.add_state(s, hm);
    }

    const auto& start = require(doc, "start");
    if (start.is_string()) {
        auto s = start.get<std::string>();
        check_declared(states, s, "start");
        m.start = Superposition<StateIndex>::basis(m.table.state_index(s));
    } else if (start.is_object()) {
        for (const auto& [name, amp] : start.items()) {
            check_declared(states, name, "start");
            const std::string expr = amp.is_number() ? amp.dump() : get_string(amp, "start." + name);
            try {
                m.start.add(m.table.state_index(name), parse_amplitude(expr));
            } catch (const ParseError& e) {
                field_error("start." + name, std::string("bad amplitude: ") + e.what());
            }
        }
    } else {
        field_error("start", "expected a state or an object of state -> amplitude");
    }
    m.accepting = index_set(optional_strings(doc, "accept"), states, "accept");
    m.rejecting = index_set(optional_strings(doc, "reject"), states, "reject");

    const auto& ts = transitions_of(doc);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string f = "transitions[" + std::to_string(i) + "]";
        auto from = get_string(require(ts[i], "from"), f + ".from");
        check_declared(states, from, f + ".from");
        auto read = get_read(ts[i], 2, f);
        check_read(m.input_alphabet, read[0], f + ".read");
        check_read(m.tape2_alphabet, read[1], f + ".read");
        m.table.set_row({read[0], read[1]}, from, get_targets(ts[i], states, f));
    }
    return m;
}

std::vector<std::string> warnings_for(const Machine& machine) {
    std::vector<std::string> out;
    auto collect = [&](const ValidationReport& r) {
        for (const auto& c : r.checks) {
            if (!c.passed) out.push_back(c.name + ": " + c.detail);
        }
        for (const auto& w : r.warnings) out.push_back(w);
    };
    std::visit(Overloaded{[&](const TwoTapeQfa& m) { collect(validate_automaton(m)); },
                             [&](const MeasureManyQfa& m) { collect(validate_automaton(m)); },
                             [](const auto&) {}},
               machine);
    return out;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

Json moves_json(const std::vector<int>& moves) {
    Json j = Json::array();
    for (int m : moves) j.push_back(m);
    return j;
}

Json targets_json(const std::vector<Entry>& entries, const std::vector<std::string>& names) {
    Json to = Json::array();
    for (const auto& e : entries) to.push_back(Json::array({names.at(e.target), e.expr}));
    return to;
}

Json names_json(const std::set<StateIndex>& set, const std::vector<std::string>& names) {
    Json j = Json::array();
    for (auto q : set) j.push_back(names.at(q));
    return j;
}

Json to_json(const Dfa& d) {
    Json doc;
    doc["model"] = "dfa";
    doc["states"] = d.states();
    doc["start"] = d.states()[d.start()];
    Json acc = Json::array();
    for (int q : d.accepting()) acc.push_back(d.states()[q]);
    doc["accept"] = acc;
    doc["input_alphabet"] = d.alphabet();
    Json ts = Json::array();
    for (std::size_t q = 0; q < d.states().size(); ++q) {
        for (std::size_t s = 0; s < d.alphabet().size(); ++s) {
            ts.push_back(Json{{"from", d.states()[q]},
                              {"read", Json::array({d.alphabet()[s]})},
                              {"to", d.states()[d.next(static_cast<int>(q), s)]}});
        }
    }
    doc["transitions"] = ts;
    return doc;
}

Json to_json(const MultiHeadDfa& m) {
    Json doc;
    doc["model"] = "mhdfa";
    doc["states"] = m.states();
    doc["heads"] = m.heads();
    doc["start"] = m.states()[m.start()];
    Json acc = Json::array();
    for (int q : m.accepting()) acc.push_back(m.states()[q]);
    doc["accept"] = acc;
    doc["input_alphabet"] = m.alphabet();
    Json ts = Json::array();
    for (const auto& [key, step] : m.transitions()) {
        ts.push_back(Json{{"from", m.states()[key.first]},
                          {"read", key.second},
                          {"to", m.states()[step.target]},
                          {"move", moves_json(step.moves)}});
    }
    doc["transitions"] = ts;
    return doc;
}

Json to_json(const MeasureManyQfa& m) {
    Json doc;
    doc["model"] = "mm1qfa";
    doc["states"] = m.states;
    doc["start"] = m.states.at(m.start);
    doc["accept"] = names_json(m.accepting, m.states);
    doc["reject"] = names_json(m.rejecting, m.states);
    doc["input_alphabet"] = m.alphabet;
    Json ts = Json::array();
    for (const auto& [symbol, rows] : m.operators) {
        for (const auto& [src, entries] : rows) {
            ts.push_back(Json{{"from", m.states.at(src)},
                              {"read", Json::array({symbol})},
                              {"to", targets_json(entries, m.states)}});
        }
    }
    doc["transitions"] = ts;
    return doc;
}

Json to_json(const TwoTapeQfa& m) {
    const auto& names = m.table.states();
    Json doc;
    doc["model"] = m.mode == HeadMode::two_head ? "1qfa2" : "2t1qfa";
    doc["states"] = names;
    const auto& start = m.start;
    if (start.size() == 1 && start.begin()->second == Complex(1.0, 0.0)) {
        doc["start"] = names.at(start.begin()->first);
    } else {
        Json s = Json::object();
        for (const auto& [q, amp] : start) s[names.at(q)] = format_amplitude(amp);
        doc["start"] = s;
    }
    doc["accept"] = names_json(m.accepting, names);
    doc["reject"] = names_json(m.rejecting, names);
    doc["input_alphabet"] = m.input_alphabet;
    doc["tape2_alphabet"] = m.tape2_alphabet;
    Json rho = Json::array();
    for (const auto& [a, b] : m.rho.pairs()) rho.push_back(Json::array({a, b}));
    doc["rho"] = rho;
    Json moves = Json::object();
    for (std::size_t q = 0; q < names.size(); ++q) {
        const auto d = m.table.move(static_cast<StateIndex>(q));
        moves[names[q]] = Json::array({d.first, d.second});
    }
    doc["head_moves"] = moves;
    Json ts = Json::array();
    for (const auto& [pair, rows] : m.table.operators()) {
        for (const auto& [src, entries] : rows) {
            ts.push_back(Json{{"from", names.at(src)},
                              {"read", Json::array({pair.first, pair.second})},
                              {"to", targets_json(entries, names)}});
        }
    }
    doc["transitions"] = ts;
    return doc;
}

}  // namespace

std::string model_name(const Machine& m) {
    return std::visit(Overloaded{[](const Dfa&) { return std::string("dfa"); },
                                    [](const MultiHeadDfa&) { return std::string("mhdfa"); },
                                    [](const MeasureManyQfa&) { return std::string("mm1qfa"); },
                                    [](const TwoTapeQfa& q) {
                                        return std::string(q.mode == HeadMode::two_head ? "1qfa2" : "2t1qfa");
                                    }},
                      m);
}

LoadedAutomaton parse_automaton(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
    if (!doc.is_object()) throw FormatError("expected a JSON object");
    const auto model = get_string(require(doc, "model"), "model");
    const auto states = get_strings(require(doc, "states"), "states");
    if (states.empty()) field_error("states", "no states declared");
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (std::count(states.begin(), states.end(), states[i]) > 1) {
            field_error("states", "duplicate state '" + states[i] + "'");
        }
    }

    auto build = [&]() -> Machine {
        if (model == "dfa") return parse_dfa(doc, states);
        if (model == "mhdfa") return parse_mhdfa(doc, states);
        if (model == "mm1qfa") return parse_mm1qfa(doc, states);
        if (model == "2t1qfa") return parse_twotape(doc, states, HeadMode::two_tape);
        if (model == "1qfa2") return parse_twotape(doc, states, HeadMode::two_head);
        field_error("model", "unknown model '" + model + "'");
    };
    LoadedAutomaton out{build(), {}, optional_strings(doc, "notes")};
    out.warnings = warnings_for(out.machine);
    return out;
}

LoadedAutomaton load_automaton(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_automaton(buf.str());
}

std::string dump_automaton(const Machine& m, const std::vector<std::string>& notes) {
    Json doc = std::visit([](const auto& x) { return to_json(x); }, m);
    if (!notes.empty()) doc["notes"] = notes;
    return doc.dump(2) + "\n";
}

void save_automaton(const Machine& m, const std::string& path, const std::vector<std::string>& notes) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << dump_automaton(m, notes);
    if (!out) throw FormatError("write failed for '" + path + "'");
}

}  // namespace qfa
