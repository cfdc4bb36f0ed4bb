#include "qfa/relation.hpp"

#include <algorithm>
#include <limits>

#include "qfa/errors.hpp"

namespace qfa {

SymbolRelation::SymbolRelation(const std::vector<std::pair<Symbol, Symbol>>& pairs) {
    for (const auto& [a, b] : pairs) add(a, b);
}

SymbolRelation SymbolRelation::identity(const std::vector<Symbol>& alphabet) {
    SymbolRelation rel;
    for (const auto& s : alphabet) rel.add(s, s);
    return rel;
}

void SymbolRelation::add(const Symbol& first, const Symbol& second) {
    if (is_endmarker(first) || is_endmarker(second)) {
        throw AlphabetError("endmarkers cannot appear in the symbol relation");
    }
    if (contains(first, second)) return;
    pairs_.emplace_back(first, second);
    if (!in_domain(first)) domain_.push_back(first);
    if (std::find(codomain_.begin(), codomain_.end(), second) == codomain_.end()) codomain_.push_back(second);
}

bool SymbolRelation::contains(const Symbol& first, const Symbol& second) const {
    return std::find(pairs_.begin(), pairs_.end(), std::pair{first, second}) != pairs_.end();
}

bool SymbolRelation::in_domain(const Symbol& first) const {
    return std::find(domain_.begin(), domain_.end(), first) != domain_.end();
}

std::size_t SymbolRelation::codomain_index(const Symbol& s) const {
    return static_cast<std::size_t>(std::find(codomain_.begin(), codomain_.end(), s) - codomain_.begin());
}

std::vector<Symbol> SymbolRelation::image(const Symbol& first) const {
    std::vector<Symbol> out;
    for (const auto& [a, b] : pairs_) {
        if (a == first) out.push_back(b);
    }
    std::sort(out.begin(), out.end(),
              [this](const Symbol& x, const Symbol& y) { return codomain_index(x) < codomain_index(y); });
    return out;
}

bool SymbolRelation::is_identity() const {
    return std::all_of(pairs_.begin(), pairs_.end(), [](const auto& p) { return p.first == p.second; });
}

GuessTapes::GuessTapes(const SymbolRelation& rel, const Word& word) {
    images_.reserve(word.size());
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (const auto& s : word) {
        auto img = rel.image(s);
        if (img.empty()) throw AlphabetError("symbol '" + s + "' is outside the relation's domain");
        const std::uint64_t k = img.size();
        count_ = count_ > kMax / k ? kMax : count_ * k;
        images_.push_back(std::move(img));
    }
    cursor_.assign(word.size(), 0);
}

std::optional<Word> GuessTapes::next() {
    if (done_) return std::nullopt;
    Word out;
    out.reserve(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.push_back(images_[i][cursor_[i]]);
    // Advance the odometer; the last position varies fastest.
    std::size_t i = images_.size();
    for (;;) {
        if (i == 0) {
            done_ = true;
            break;
        }
        --i;
        if (++cursor_[i] < images_[i].size()) break;
        cursor_[i] = 0;
    }
    return out;
}

std::vector<Word> rho_expand(const SymbolRelation& rel, const Word& word) {
    GuessTapes tapes(rel, word);
    std::vector<Word> out;
    while (auto t = tapes.next()) out.push_back(std::move(*t));
    return out;
}

bool rho_compatible(const SymbolRelation& rel, const Word& w1, const Word& w2) {
    if (w1.size() != w2.size()) return false;
    for (std::size_t i = 0; i < w1.size(); ++i) {
        if (!rel.contains(w1[i], w2[i])) return false;
    }
    return true;
}

}  // namespace qfa
