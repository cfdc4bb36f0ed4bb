#include "qfa/lang.hpp"

#include <algorithm>

#include "qfa/classical.hpp"
#include "qfa/errors.hpp"
#include "qfa/registry.hpp"

namespace qfa {

const char* to_string(AcceptanceMode mode) {
    switch (mode) {
        case AcceptanceMode::exists_max: return "exists";
        case AcceptanceMode::forall_min: return "forall";
        case AcceptanceMode::fixed_tape: return "fixed";
    }
    return "?";
}

AcceptanceMode parse_acceptance_mode(const std::string& text) {
    if (text == "exists" || text == "exists-max") return AcceptanceMode::exists_max;
    if (text == "forall" || text == "forall-min") return AcceptanceMode::forall_min;
    if (text == "fixed" || text == "fixed-tape") return AcceptanceMode::fixed_tape;
    throw Error("unknown semantics '" + text + "'");
}

const char* to_string(Decision d) {
    switch (d) {
        case Decision::accept: return "accept";
        case Decision::reject: return "reject";
        case Decision::marginal: return "marginal";
    }
    return "?";
}

Acceptance accept_probability(const TwoTapeQfa& m, const Word& w, const AcceptanceSemantics& sem) {
    for (const auto& s : w) {
        if (is_endmarker(s) ||
            std::find(m.input_alphabet.begin(), m.input_alphabet.end(), s) == m.input_alphabet.end()) {
            throw AlphabetError("symbol '" + s + "' not in input alphabet");
        }
    }
    Acceptance out;
    if (m.mode == HeadMode::two_head) {
        auto r = run_twotape(m, w, w, sem.max_steps);
        out.probability = r.p_acc;
        out.p_live = r.p_live;
        out.witness = w;
        out.tapes_evaluated = 1;
        return out;
    }
    if (sem.mode == AcceptanceMode::fixed_tape) {
        if (!sem.tape) throw Error("fixed-tape semantics needs a tape");
        auto r = run_twotape(m, w, *sem.tape, sem.max_steps);
        out.probability = r.p_acc;
        out.p_live = r.p_live;
        out.witness = sem.tape;
        out.tapes_evaluated = 1;
        return out;
    }
    for (const auto& s : w) {
        if (!m.rho.in_domain(s)) {
            out.diagnostic = "symbol '" + s + "' has no related tape-2 symbol; no compatible tape";
            return out;
        }
    }
    GuessTapes tapes(m.rho, w);
    if (tapes.count() > sem.tape_cap) {
        throw BudgetError("word has " + std::to_string(tapes.count()) + " guess tapes, over the cap of " +
                          std::to_string(sem.tape_cap));
    }
    const bool maximize = sem.mode == AcceptanceMode::exists_max;
    while (auto tape = tapes.next()) {
        auto r = run_twotape(m, w, *tape, sem.max_steps);
        ++out.tapes_evaluated;
        // Strict comparison keeps the earliest tape, which is the least one.
        const bool better = !out.witness || (maximize ? r.p_acc > out.probability + 1e-12
                                                      : r.p_acc < out.probability - 1e-12);
        if (better) {
            out.probability = r.p_acc;
            out.p_live = r.p_live;
            out.witness = std::move(*tape);
        }
    }
    return out;
}

Decision decide(const Acceptance& a, const AcceptanceSemantics& sem) {
    if (a.probability > sem.cutpoint + kDecisionMargin) return Decision::accept;
    if (a.p_live > kUnresolvedLive && a.probability + a.p_live > sem.cutpoint - kDecisionMargin) {
        return Decision::marginal;
    }
    if (a.probability < sem.cutpoint - kDecisionMargin) return Decision::reject;
    return Decision::marginal;
}

Decision decide(const TwoTapeQfa& m, const Word& w, const AcceptanceSemantics& sem) {
    return decide(accept_probability(m, w, sem), sem);
}

OracleId OracleId::parse(const std::string& text) {
    OracleId id;
    if (text == "anbn") {
        id.kind = Kind::anbn;
    } else if (text == "anbncn") {
        id.kind = Kind::anbncn;
    } else if (text == "ww") {
        id.kind = Kind::ww;
    } else if (text == "percent-lang") {
        id.kind = Kind::percent;
    } else if (text.rfind("dfa:", 0) == 0) {
        id.kind = Kind::dfa;
        id.machine = text.substr(4);
        auto entry = build_example(id.machine);
        if (!std::holds_alternative<Dfa>(entry.machine)) {
            throw Error("example '" + id.machine + "' is not a DFA");
        }
    } else {
        throw Error("unknown oracle '" + text + "'");
    }
    return id;
}

std::string OracleId::name() const {
    switch (kind) {
        case Kind::anbn: return "anbn";
        case Kind::anbncn: return "anbncn";
        case Kind::ww: return "ww";
        case Kind::percent: return "percent-lang";
        case Kind::dfa: return "dfa:" + machine;
    }
    return "?";
}

std::optional<std::vector<PercentBlock>> percent_blocks(const Word& word) {
    if (word.empty() || word.front() != "%") return std::nullopt;
    std::vector<PercentBlock> blocks;
    PercentBlock current;
    bool star = false;
    for (std::size_t i = 1; i <= word.size(); ++i) {
        if (i == word.size() || word[i] == "%") {
            if (!star) return std::nullopt;
            blocks.push_back(std::move(current));
            current = {};
            star = false;
        } else if (word[i] == "*") {
            if (star) return std::nullopt;
            star = true;
        } else if (word[i] == "a" || word[i] == "b") {
            (star ? current.x : current.w).push_back(word[i]);
        } else {
            return std::nullopt;
        }
    }
    return blocks;
}

bool percent_well_formed(const Word& word) { return percent_blocks(word).has_value(); }

namespace {

bool count_blocks(const Word& w, const std::vector<Symbol>& letters) {
    // letters[0]^n letters[1]^n ... with n >= 1
    if (w.empty() || w.size() % letters.size() != 0) return false;
    const std::size_t n = w.size() / letters.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != letters[i / n]) return false;
    }
    return true;
}

}  // namespace

bool oracle_membership(const OracleId& id, const Word& w) {
    switch (id.kind) {
        case OracleId::Kind::anbn: return count_blocks(w, {"a", "b"});
        case OracleId::Kind::anbncn: return count_blocks(w, {"a", "b", "c"});
        case OracleId::Kind::ww: {
            if (w.size() % 2 != 0) return false;
            const auto half = static_cast<std::ptrdiff_t>(w.size() / 2);
            return std::equal(w.begin(), w.begin() + half, w.begin() + half);
        }
        case OracleId::Kind::percent: {
            auto blocks = percent_blocks(w);
            if (!blocks) return false;
            for (std::size_t i = 0; i < blocks->size(); ++i) {
                for (std::size_t j = i + 1; j < blocks->size(); ++j) {
                    if ((*blocks)[i].w == (*blocks)[j].w && (*blocks)[i].x != (*blocks)[j].x) return true;
                }
            }
            return false;
        }
        case OracleId::Kind::dfa: {
            auto entry = build_example(id.machine);
            return run_dfa(std::get<Dfa>(entry.machine), w);
        }
    }
    return false;
}

void for_each_word(const std::vector<Symbol>& alphabet, std::size_t min_len, std::size_t max_len,
                   const std::function<bool(const Word&)>& fn) {
    for (std::size_t len = min_len; len <= max_len; ++len) {
        if (alphabet.empty() && len > 0) return;
        std::vector<std::size_t> digits(len, 0);
        Word word(len, alphabet.empty() ? Symbol{} : alphabet[0]);
        while (true) {
            if (!fn(word)) return;
            std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(len) - 1;
            while (pos >= 0 && ++digits[pos] == alphabet.size()) {
                digits[pos] = 0;
                word[pos] = alphabet[0];
                --pos;
            }
            if (pos < 0) break;
            word[pos] = alphabet[digits[pos]];
        }
    }
}

EquivalenceReport bounded_equivalence(const TwoTapeQfa& m, const OracleId& id, std::size_t max_len,
                                      const AcceptanceSemantics& sem, const EquivalenceOptions& opts) {
    EquivalenceReport report;
    // Resolve DFA oracles once rather than per word.
    std::optional<Dfa> dfa;
    if (id.kind == OracleId::Kind::dfa) dfa = std::get<Dfa>(build_example(id.machine).machine);

    for_each_word(m.input_alphabet, opts.min_len, max_len, [&](const Word& w) {
        if (opts.filter && !opts.filter(w)) return true;
        if (report.words_checked >= opts.word_cap) {
            report.truncated = true;
            return false;
        }
        ++report.words_checked;
        const bool expected = dfa ? run_dfa(*dfa, w) : oracle_membership(id, w);
        const auto a = accept_probability(m, w, sem);
        const auto d = decide(a, sem);
        if (d == Decision::marginal || (d == Decision::accept) != expected) {
            report.disagreements.push_back(Disagreement{w, expected, d, a.probability});
        }
        return true;
    });
    return report;
}

}  // namespace qfa
