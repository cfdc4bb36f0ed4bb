#include "qfa/symbols.hpp"

#include <algorithm>
#include <cctype>

namespace qfa {

std::string to_string(const SymbolPair& pair) { return pair.first + "," + pair.second; }

Word split_word(std::string_view text) {
    Word out;
    const bool separated = std::any_of(text.begin(), text.end(), [](char c) {
        return c == ',' || std::isspace(static_cast<unsigned char>(c));
    });
    if (!separated) {
        for (char c : text) out.emplace_back(1, c);
        return out;
    }
    std::string current;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

std::string join_word(const Word& word) {
    const bool single = std::all_of(word.begin(), word.end(),
                                    [](const Symbol& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!single && i > 0) out.push_back(' ');
        out += word[i];
    }
    return out;
}

Word with_endmarkers(const Word& word) {
    Word tape;
    tape.reserve(word.size() + 2);
    tape.push_back(kLeftEnd);
    tape.insert(tape.end(), word.begin(), word.end());
    tape.push_back(kRightEnd);
    return tape;
}

}  // namespace qfa
