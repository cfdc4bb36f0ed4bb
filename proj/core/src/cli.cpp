#include "qfa/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfa/automaton_file.hpp"
#include "qfa/compile.hpp"
#include "qfa/errors.hpp"
#include "qfa/lang.hpp"

namespace qfa {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string prob(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", std::abs(p) < 5e-7 ? 0.0 : p);
    return buf;
}

std::string number(double v) {
    if (std::abs(v - std::round(v)) < 1e-12) return std::to_string(static_cast<long long>(std::round(v)));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string cell(Complex z) {
    const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
    if (im == 0.0) return number(re);
    if (re == 0.0) return number(im) + "i";
    return number(re) + (im < 0 ? "-" : "+") + number(std::abs(im)) + "i";
}

std::string amplitude_text(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", z.real(), z.imag());
    return buf;
}

struct MachineRef {
    std::string name;
    Machine machine;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
};

MachineRef resolve(const std::string& ref) {
    const std::string prefix = "examples:";
    if (ref.rfind(prefix, 0) == 0) {
        auto entry = build_example(ref.substr(prefix.size()));
        auto notes = entry.repairs;
        notes.insert(notes.end(), entry.notes.begin(), entry.notes.end());
        return MachineRef{entry.name, std::move(entry.machine), {}, std::move(notes)};
    }
    auto loaded = load_automaton(ref);
    return MachineRef{ref, std::move(loaded.machine), std::move(loaded.warnings), std::move(loaded.notes)};
}

Json word_json(const Word& w) { return w; }

void render_matrix(std::ostream& out, const std::string& title, const Eigen::MatrixXcd& m,
                   const std::vector<std::string>& names) {
    std::size_t width = 1;
    for (const auto& n : names) width = std::max(width, n.size());
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            cells[r].push_back(cell(m(r, c)));
            width = std::max(width, cells[r].back().size());
        }
    }
    out << title << "\n" << std::setw(static_cast<int>(width)) << "";
    for (const auto& n : names) out << "  " << std::setw(static_cast<int>(width)) << n;
    out << "\n";
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out << std::setw(static_cast<int>(width)) << names[r];
        for (const auto& c : cells[r]) out << "  " << std::setw(static_cast<int>(width)) << c;
        out << "\n";
    }
}

Json matrix_json(const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(cell(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

SymbolPair parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw Error("--pair expects 'sigma,tau'");
    return SymbolPair{text.substr(0, comma), text.substr(comma + 1)};
}

const TwoTapeQfa& need_quantum(const MachineRef& ref, const std::string& command) {
    if (const auto* q = std::get_if<TwoTapeQfa>(&ref.machine)) return *q;
    throw Error(command + " needs a two-tape quantum machine, got " + model_name(ref.machine));
}

struct Options {
    bool json = false;
    std::string machine;
    std::string input;
    std::optional<std::string> tape2;
    bool trace = false;
    std::optional<std::size_t> max_steps;
    std::string semantics = "exists";
    double cutpoint = 0.5;
    std::string output;
    std::string oracle;
    std::size_t max_len = 6;
    std::size_t min_len = 0;
    bool well_formed = false;
    std::optional<std::string> pair;
    std::string example;
};

int cmd_validate(const Options& o, std::ostream& out) {
    auto ref = resolve(o.machine);
    Json j{{"machine", ref.name}, {"model", model_name(ref.machine)}};
    bool ok = true;
    std::ostringstream text;
    auto report_checks = [&](const ValidationReport& r) {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            text << (c.passed ? "  ok    " : "  FAIL  ") << c.name << ": " << c.detail << "\n";
            checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        j["checks"] = checks;
        ok = r.passed();
        for (const auto& w : r.warnings) ref.warnings.push_back(w);
    };
    std::visit(Overloaded{[&](const TwoTapeQfa& m) { report_checks(validate_automaton(m)); },
                          [&](const MeasureManyQfa& m) { report_checks(validate_automaton(m)); },
                          [&](const MultiHeadDfa& m) {
                              auto r = check_reversible(m);
                              text << (r.move_consistent ? "  ok    " : "  FAIL  ") << "move-consistent\n";
                              text << (r.predecessor_unique ? "  ok    " : "  FAIL  ") << "predecessor-unique\n";
                              for (const auto& w : r.witnesses) text << "        " << w << "\n";
                              j["move_consistent"] = r.move_consistent;
                              j["predecessor_unique"] = r.predecessor_unique;
                              j["witnesses"] = r.witnesses;
                              ok = r.reversible();
                          },
                          [&](const Dfa&) { text << "  ok    total transition function\n"; }},
               ref.machine);
    for (const auto& w : ref.warnings) text << "  warn  " << w << "\n";
    j["warnings"] = ref.warnings;
    j["result"] = ok ? "PASS" : "FAIL";
    if (o.json) {
        out << j.dump(2) << "\n";
    } else {
        out << text.str() << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kOk : kReject;
}

int cmd_run(const Options& o, std::ostream& out) {
    auto ref = resolve(o.machine);
    const Word w = split_word(o.input);
    Json j{{"machine", ref.name}, {"input", word_json(w)}};
    std::ostringstream text;
    int code = kOk;

    auto report = [&](const RunResult& r, auto&& describe) {
        j["p_acc"] = r.p_acc;
        j["p_rej"] = r.p_rej;
        j["p_sink"] = r.p_sink;
        j["p_live"] = r.p_live;
        j["steps"] = r.steps;
        j["livelock"] = r.livelock;
        text << "p_acc  " << prob(r.p_acc) << "\np_rej  " << prob(r.p_rej) << "\np_sink " << prob(r.p_sink)
             << "\np_live " << prob(r.p_live) << "\nsteps  " << r.steps << (r.livelock ? " (budget exhausted)" : "")
             << "\n";
        if (!o.trace) return;
        Json steps = Json::array();
        for (const auto& s : r.trace) {
            text << "step " << s.step << ": acc " << prob(s.acc_mass) << " rej " << prob(s.rej_mass) << " sink "
                 << prob(s.sink_mass) << "\n";
            Json live = Json::array();
            for (const auto& [c, amp] : s.live) {
                const auto label = describe(c);
                text << "  " << label << " " << amplitude_text(amp) << "\n";
                live.push_back(Json{{"configuration", label}, {"re", amp.real()}, {"im", amp.imag()}});
            }
            steps.push_back(Json{{"step", s.step},
                                 {"acc", s.acc_mass},
                                 {"rej", s.rej_mass},
                                 {"sink", s.sink_mass},
                                 {"live", live}});
        }
        j["trace"] = steps;
    };

    std::visit(Overloaded{[&](const TwoTapeQfa& m) {
                              Word w2 = w;
                              if (o.tape2) {
                                  w2 = split_word(*o.tape2);
                              } else if (m.mode == HeadMode::two_tape && !rho_compatible(m.rho, w, w)) {
                                  throw Error("--tape2 is required: the input is not its own guess tape");
                              }
                              j["tape2"] = word_json(m.mode == HeadMode::two_head ? w : w2);
                              auto r = run_twotape(m, w, w2, o.max_steps, o.trace);
                              report(r, [&](const Configuration& c) { return to_string(c, m.table); });
                          },
                          [&](const MeasureManyQfa& m) {
                              auto r = run_mm1qfa(m, w, o.trace);
                              report(r, [&](const Configuration& c) { return m.states.at(c.state); });
                          },
                          [&](const Dfa& d) {
                              const bool acc = run_dfa(d, w);
                              j["accepted"] = acc;
                              text << (acc ? "accepted" : "rejected") << "\n";
                              code = acc ? kOk : kReject;
                          },
                          [&](const MultiHeadDfa& m) {
                              auto r = run_mhdfa(m, w, o.max_steps);
                              j["outcome"] = to_string(r.outcome);
                              j["steps"] = r.steps;
                              j["final_state"] = m.states()[r.final_state];
                              j["positions"] = r.positions;
                              text << to_string(r.outcome) << " in " << m.states()[r.final_state] << " after "
                                   << r.steps << " steps\n";
                              code = r.outcome == RunOutcome::accepted ? kOk : kReject;
                          }},
               ref.machine);
    if (o.json) {
        out << j.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return code;
}

AcceptanceSemantics semantics_of(const Options& o) {
    AcceptanceSemantics sem;
    sem.mode = parse_acceptance_mode(o.semantics);
    sem.cutpoint = o.cutpoint;
    if (sem.cutpoint < 0.0 || sem.cutpoint > 1.0) throw Error("--cutpoint must lie in [0,1]");
    if (o.tape2) sem.tape = split_word(*o.tape2);
    sem.max_steps = o.max_steps;
    return sem;
}

int cmd_accept(const Options& o, std::ostream& out) {
    auto ref = resolve(o.machine);
    const auto& m = need_quantum(ref, "accept");
    const Word w = split_word(o.input);
    const auto sem = semantics_of(o);
    const auto a = accept_probability(m, w, sem);
    const auto d = decide(a, sem);
    if (o.json) {
        Json j{{"machine", ref.name},
               {"input", word_json(w)},
               {"semantics", to_string(sem.mode)},
               {"cutpoint", sem.cutpoint},
               {"probability", a.probability},
               {"witness", a.witness ? Json(*a.witness) : Json(nullptr)},
               {"p_live", a.p_live},
               {"tapes", a.tapes_evaluated},
               {"decision", to_string(d)}};
        if (!a.diagnostic.empty()) j["diagnostic"] = a.diagnostic;
        out << j.dump(2) << "\n";
    } else {
        out << "probability " << prob(a.probability) << "\n";
        out << "witness     " << (a.witness ? join_word(*a.witness) : std::string("(none)")) << "\n";
        if (a.p_live > kUnresolvedLive) out << "undecided   " << prob(a.p_live) << "\n";
        if (!a.diagnostic.empty()) out << "note        " << a.diagnostic << "\n";
        out << "decision    " << to_string(d) << "\n";
    }
    return d == Decision::accept ? kOk : kReject;
}

int write_machine(const Options& o, std::ostream& out, const Machine& m, const std::string& what) {
    save_automaton(m, o.output);
    if (o.json) {
        out << Json{{"written", o.output}, {"model", model_name(m)}}.dump(2) << "\n";
    } else {
        out << what << " written to " << o.output << "\n";
    }
    return kOk;
}

int cmd_compile(const Options& o, std::ostream& out) {
    auto ref = resolve(o.machine);
    const auto* d = std::get_if<Dfa>(&ref.machine);
    if (!d) throw Error("compile-dfa needs a dfa, got " + model_name(ref.machine));
    return write_machine(o, out, compile_dfa(*d), "two-tape machine");
}

int cmd_lift(const Options& o, std::ostream& out) {
    auto ref = resolve(o.machine);
    const auto* m = std::get_if<MultiHeadDfa>(&ref.machine);
    if (!m) throw Error("lift-rmfa needs an mhdfa, got " + model_name(ref.machine));
    return write_machine(o, out, lift_rmfa(*m), "two-head machine");
}

int cmd_lang_test(const Options& o, std::ostream& out) {
    auto ref = resolve(o.machine);
    const auto& m = need_quantum(ref, "lang-test");
    const auto id = OracleId::parse(o.oracle);
    const auto sem = semantics_of(o);
    EquivalenceOptions opts;
    opts.min_len = o.min_len;
    if (o.well_formed) opts.filter = percent_well_formed;
    const auto report = bounded_equivalence(m, id, o.max_len, sem, opts);
    if (o.json) {
        Json rows = Json::array();
        for (const auto& dis : report.disagreements) {
            rows.push_back(Json{{"word", word_json(dis.word)},
                                {"expected", dis.expected},
                                {"decision", to_string(dis.decision)},
                                {"probability", dis.probability}});
        }
        out << Json{{"machine", ref.name},
                    {"oracle", id.name()},
                    {"max_len", o.max_len},
                    {"words", report.words_checked},
                    {"truncated", report.truncated},
                    {"disagreements", rows}}
                   .dump(2)
            << "\n";
    } else {
        out << "words checked " << report.words_checked << (report.truncated ? " (truncated)" : "") << "\n";
        out << "disagreements " << report.disagreements.size() << "\n";
        for (const auto& dis : report.disagreements) {
            const auto word = dis.word.empty() ? std::string("(empty)") : join_word(dis.word);
            out << "  " << std::left << std::setw(14) << word << std::right << " expected "
                << (dis.expected ? "member    " : "non-member") << "  got " << std::setw(8) << to_string(dis.decision)
                << "  p=" << prob(dis.probability) << "\n";
        }
    }
    return report.disagreements.empty() && !report.truncated ? kOk : kReject;
}

int cmd_matrices(const Options& o, std::ostream& out) {
    auto ref = resolve(o.machine);
    std::vector<std::pair<std::string, Eigen::MatrixXcd>> mats;
    std::vector<std::string> names;
    std::visit(Overloaded{[&](const TwoTapeQfa& m) {
                              names = m.table.states();
                              if (o.pair) {
                                  auto p = parse_pair(*o.pair);
                                  if (!m.table.has_symbol(0, p.first) || !m.table.has_symbol(1, p.second)) {
                                      throw AlphabetError("pair (" + to_string(p) + ") uses undeclared symbols");
                                  }
                                  mats.emplace_back(to_string(p), symbol_pair_matrix(m.table, p));
                              } else {
                                  for (const auto& [p, _] : m.table.operators()) {
                                      mats.emplace_back(to_string(p), symbol_pair_matrix(m.table, p));
                                  }
                              }
                          },
                          [&](const MultiHeadDfa& m) {
                              names = m.states();
                              if (o.pair) {
                                  Word reads;
                                  std::stringstream ss(*o.pair);
                                  for (std::string s; std::getline(ss, s, ',');) reads.push_back(s);
                                  mats.emplace_back(*o.pair, symbol_pair_matrix(m, reads));
                              } else {
                                  for (const auto& t : defined_tuples(m)) {
                                      std::string label;
                                      for (const auto& s : t) label += (label.empty() ? "" : ",") + s;
                                      mats.emplace_back(label, symbol_pair_matrix(m, t));
                                  }
                              }
                          },
                          [&](const MeasureManyQfa& m) {
                              names = m.states;
                              for (const auto& [s, rows] : m.operators) {
                                  if (!o.pair || *o.pair == s) mats.emplace_back(s, rows_matrix(rows, m.states.size()));
                              }
                          },
                          [&](const Dfa& d) {
                              names = d.states();
                              for (const auto& s : d.alphabet()) {
                                  if (!o.pair || *o.pair == s) mats.emplace_back(s, symbol_matrix(d, s));
                              }
                          }},
               ref.machine);
    if (o.json) {
        Json j = Json::object();
        j["states"] = names;
        Json ms = Json::array();
        for (const auto& [label, mat] : mats) ms.push_back(Json{{"read", label}, {"matrix", matrix_json(mat)}});
        j["matrices"] = ms;
        out << j.dump(2) << "\n";
    } else {
        bool first = true;
        for (const auto& [label, mat] : mats) {
            if (!first) out << "\n";
            first = false;
            render_matrix(out, "M[" + label + "]", mat, names);
        }
    }
    return kOk;
}

int cmd_examples(const Options& o, const std::string& action, std::ostream& out) {
    if (action == "list") {
        if (o.json) {
            Json rows = Json::array();
            for (const auto& n : example_names()) {
                auto e = build_example(n);
                rows.push_back(Json{{"name", n}, {"model", model_name(e.machine)}, {"language", e.language}});
            }
            out << rows.dump(2) << "\n";
        } else {
            for (const auto& n : example_names()) {
                auto e = build_example(n);
                out << std::left << std::setw(15) << n << std::setw(8) << model_name(e.machine) << std::right
                    << e.language << "\n";
            }
        }
        return kOk;
    }
    auto e = build_example(o.example);
    if (action == "show") {
        if (o.json) {
            out << Json{{"name", e.name},
                        {"model", model_name(e.machine)},
                        {"locus", e.locus},
                        {"language", e.language},
                        {"repairs", e.repairs},
                        {"notes", e.notes}}
                       .dump(2)
                << "\n";
        } else {
            out << "name      " << e.name << "\nmodel     " << model_name(e.machine) << "\nsource    " << e.locus
                << "\nlanguage  " << e.language << "\n";
            for (const auto& r : e.repairs) out << "repair    " << r << "\n";
            for (const auto& n : e.notes) out << "note      " << n << "\n";
        }
        return kOk;
    }
    auto notes = e.repairs;
    notes.insert(notes.end(), e.notes.begin(), e.notes.end());
    save_automaton(e.machine, o.output, notes);
    if (o.json) {
        out << Json{{"written", o.output}, {"name", e.name}}.dump(2) << "\n";
    } else {
        out << e.name << " written to " << o.output << "\n";
    }
    return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum and classical finite automata workbench", "qfa"};
    app.require_subcommand(1);
    Options o;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };
    auto add_machine = [&](CLI::App* sub) {
        sub->add_option("machine", o.machine, "Automaton file or examples:<name>")->required();
        add_json(sub);
    };

    auto* validate = app.add_subcommand("validate", "Well-formedness and reversibility report");
    add_machine(validate);

    auto* run = app.add_subcommand("run", "Run one input and print outcome probabilities");
    add_machine(run);
    run->add_option("--input", o.input, "Input word")->required();
    run->add_option("--tape2", o.tape2, "Second tape word");
    run->add_flag("--trace", o.trace, "Print configurations after every step");
    run->add_option("--max-steps", o.max_steps, "Step budget");

    auto* accept = app.add_subcommand("accept", "Acceptance probability over guess tapes");
    add_machine(accept);
    accept->add_option("--input", o.input, "Input word")->required();
    accept->add_option("--semantics", o.semantics, "exists, forall or fixed")
        ->check(CLI::IsMember({"exists", "forall", "fixed"}));
    accept->add_option("--cutpoint", o.cutpoint, "Strict acceptance threshold");
    accept->add_option("--tape2", o.tape2, "Tape for fixed semantics");
    accept->add_option("--max-steps", o.max_steps, "Step budget per tape");

    auto* compile = app.add_subcommand("compile-dfa", "Compile a DFA to a two-tape quantum machine");
    add_machine(compile);
    compile->add_option("-o,--output", o.output, "Output file")->required();

    auto* lift = app.add_subcommand("lift-rmfa", "Lift a reversible two-head DFA to a quantum machine");
    add_machine(lift);
    lift->add_option("-o,--output", o.output, "Output file")->required();

    auto* lang = app.add_subcommand("lang-test", "Compare a machine with a language oracle on all short words");
    add_machine(lang);
    lang->add_option("--oracle", o.oracle, "anbn, anbncn, ww, percent-lang or dfa:<example>")->required();
    lang->add_option("--max-len", o.max_len, "Longest word")->required();
    lang->add_option("--min-len", o.min_len, "Shortest word");
    lang->add_option("--semantics", o.semantics, "exists or forall")->check(CLI::IsMember({"exists", "forall"}));
    lang->add_option("--cutpoint", o.cutpoint, "Strict acceptance threshold");
    lang->add_flag("--well-formed", o.well_formed, "Only %-block words");

    auto* matrices = app.add_subcommand("matrices", "Print transition matrices");
    add_machine(matrices);
    matrices->add_option("--pair", o.pair, "Symbol pair 'sigma,tau'");

    auto* examples = app.add_subcommand("examples", "Built-in machines");
    examples->require_subcommand(1);
    auto* ex_list = examples->add_subcommand("list", "List built-in machines");
    add_json(ex_list);
    auto* ex_show = examples->add_subcommand("show", "Describe a built-in machine");
    ex_show->add_option("name", o.example, "Example name")->required();
    add_json(ex_show);
    auto* ex_export = examples->add_subcommand("export", "Write a built-in machine to a file");
    ex_export->add_option("name", o.example, "Example name")->required();
    ex_export->add_option("-o,--output", o.output, "Output file")->required();
    add_json(ex_export);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.back()->help());
        return kUsage;
    }

    try {
        if (*validate) return cmd_validate(o, out);
        if (*run) return cmd_run(o, out);
        if (*accept) return cmd_accept(o, out);
        if (*compile) return cmd_compile(o, out);
        if (*lift) return cmd_lift(o, out);
        if (*lang) return cmd_lang_test(o, out);
        if (*matrices) return cmd_matrices(o, out);
        if (*ex_list) return cmd_examples(o, "list", out);
        if (*ex_show) return cmd_examples(o, "show", out);
        if (*ex_export) return cmd_examples(o, "export", out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qfa
