#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qfa/quantum.hpp"

namespace qfa {

enum class AcceptanceMode { exists_max, forall_min, fixed_tape };

const char* to_string(AcceptanceMode mode);
AcceptanceMode parse_acceptance_mode(const std::string& text);

struct AcceptanceSemantics {
    AcceptanceMode mode = AcceptanceMode::exists_max;
    double cutpoint = 0.5;
    /// Tape 2 for fixed-tape mode.
    std::optional<Word> tape;
    /// Guess tapes beyond this count raise BudgetError.
    std::uint64_t tape_cap = 1'000'000;
    std::optional<std::size_t> max_steps;
};

struct Acceptance {
    double probability = 0.0;
    std::optional<Word> witness;
    /// Undecided mass of the run behind `probability`.
    double p_live = 0.0;
    std::uint64_t tapes_evaluated = 0;
    std::string diagnostic;
};

Acceptance accept_probability(const TwoTapeQfa& m, const Word& w, const AcceptanceSemantics& sem = {});

enum class Decision { accept, reject, marginal };

const char* to_string(Decision d);

constexpr double kDecisionMargin = 1e-9;
constexpr double kUnresolvedLive = 1e-6;

Decision decide(const Acceptance& a, const AcceptanceSemantics& sem = {});
Decision decide(const TwoTapeQfa& m, const Word& w, const AcceptanceSemantics& sem = {});

struct OracleId {
    enum class Kind { dfa, anbn, anbncn, ww, percent };
    Kind kind = Kind::anbn;
    std::string machine;  // registry name for dfa oracles

    static OracleId parse(const std::string& text);
    std::string name() const;
};

/// Blocks of a percent-language word: "%w1*x1%w2*x2...".
struct PercentBlock {
    Word w;
    Word x;
};

/// Nullopt unless the word is a leading-% block list, every block over
/// {a,b,*} with exactly one *.
std::optional<std::vector<PercentBlock>> percent_blocks(const Word& word);
bool percent_well_formed(const Word& word);

bool oracle_membership(const OracleId& id, const Word& w);

/// Calls `fn` for every word over `alphabet` with length in [min_len, max_len],
/// shortest first, then in alphabet order. Stops early when `fn` returns false.
void for_each_word(const std::vector<Symbol>& alphabet, std::size_t min_len, std::size_t max_len,
                   const std::function<bool(const Word&)>& fn);

struct Disagreement {
    Word word;
    bool expected = false;
    Decision decision = Decision::reject;
    double probability = 0.0;
};

struct EquivalenceOptions {
    std::size_t min_len = 0;
    std::uint64_t word_cap = 10'000'000;
    /// Words failing the filter are skipped.
    std::function<bool(const Word&)> filter;
};

struct EquivalenceReport {
    std::vector<Disagreement> disagreements;
    std::uint64_t words_checked = 0;
    /// The word cap stopped the enumeration early.
    bool truncated = false;
};

EquivalenceReport bounded_equivalence(const TwoTapeQfa& m, const OracleId& id, std::size_t max_len,
                                      const AcceptanceSemantics& sem = {}, const EquivalenceOptions& opts = {});

}  // namespace qfa
