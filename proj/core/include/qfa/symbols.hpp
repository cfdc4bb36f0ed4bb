#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qfa {

/// Tape symbols are short strings so that derived symbols such as `a_1` or
/// `v_p1` are first-class.
using Symbol = std::string;
using Word = std::vector<Symbol>;

inline const Symbol kLeftEnd = "#";
inline const Symbol kRightEnd = "$";

inline bool is_endmarker(std::string_view s) { return s == "#" || s == "$"; }

/// Ordered pair of symbols read by the two heads.
struct SymbolPair {
    Symbol first;
    Symbol second;

    auto operator<=>(const SymbolPair&) const = default;
    bool operator==(const SymbolPair&) const = default;
};

std::string to_string(const SymbolPair& pair);

/// Splits user text into symbols. Text containing whitespace or commas is
/// split on those separators; otherwise each character is one symbol.
Word split_word(std::string_view text);

/// Joins symbols back to text: concatenated when every symbol is a single
/// character, space-separated otherwise.
std::string join_word(const Word& word);

/// `#` + word + `$`.
Word with_endmarkers(const Word& word);

}  // namespace qfa
