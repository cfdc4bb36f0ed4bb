#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qfa/symbols.hpp"

namespace qfa {

/// The relation rho between tape-1 and tape-2 symbols.
///
/// Codomain symbols are indexed in order of first appearance; every image
/// list is sorted by that index, which fixes the guess-tape enumeration
/// order.
class SymbolRelation {
public:
    SymbolRelation() = default;
    explicit SymbolRelation(const std::vector<std::pair<Symbol, Symbol>>& pairs);

    static SymbolRelation identity(const std::vector<Symbol>& alphabet);

    /// Throws AlphabetError on endmarkers.
    void add(const Symbol& first, const Symbol& second);

    bool contains(const Symbol& first, const Symbol& second) const;
    bool in_domain(const Symbol& first) const;
    /// Image of `first`, ordered by codomain index. Empty if not in domain.
    std::vector<Symbol> image(const Symbol& first) const;

    const std::vector<std::pair<Symbol, Symbol>>& pairs() const { return pairs_; }
    const std::vector<Symbol>& domain() const { return domain_; }
    const std::vector<Symbol>& codomain() const { return codomain_; }
    bool is_identity() const;
    bool empty() const { return pairs_.empty(); }

    bool operator==(const SymbolRelation&) const = default;

private:
    std::size_t codomain_index(const Symbol& s) const;

    std::vector<std::pair<Symbol, Symbol>> pairs_;
    std::vector<Symbol> domain_;
    std::vector<Symbol> codomain_;
};

/// Lazy odometer over every word compatible with a tape-1 word.
class GuessTapes {
public:
    /// Throws AlphabetError if a symbol of `word` is outside rho's domain.
    GuessTapes(const SymbolRelation& rel, const Word& word);

    /// Next tape in lexicographic order of codomain indices, or nullopt.
    std::optional<Word> next();

    /// Number of tapes; saturates at UINT64_MAX.
    std::uint64_t count() const { return count_; }

private:
    std::vector<std::vector<Symbol>> images_;
    std::vector<std::size_t> cursor_;
    std::uint64_t count_ = 1;
    bool done_ = false;
};

/// Every compatible tape-2 word, materialized.
std::vector<Word> rho_expand(const SymbolRelation& rel, const Word& word);

/// True iff |w2| = |w1| and each position is related.
bool rho_compatible(const SymbolRelation& rel, const Word& w1, const Word& w2);

}  // namespace qfa
