#pragma once

#include <map>
#include <string>
#include <vector>

#include "qfa/classical.hpp"
#include "qfa/quantum.hpp"

namespace qfa {

/// Per-symbol numbering of DFA transitions. For each symbol p the
/// transitions on p are listed by source-state index and the i-th one gets
/// the fresh tape-2 symbol "p_i".
struct TransitionNumbering {
    struct Numbered {
        int source = 0;
        int target = 0;
        Symbol numbered;
    };
    std::map<Symbol, std::vector<Numbered>> by_symbol;

    static TransitionNumbering of(const Dfa& d);
    /// All numbered symbols, grouped by input symbol in alphabet order.
    std::vector<Symbol> fresh_symbols(const Dfa& d) const;
};

std::string numbered_symbol(const Symbol& p, std::size_t i);

/// Two-tape quantum machine accepting, for some guess tape, exactly the
/// words the DFA accepts. Entries are all 0/1.
TwoTapeQfa compile_dfa(const Dfa& d);

/// Two-head quantum machine with the same 0/1 matrices as a reversible
/// 2-head DFA. Throws MachineError if `m` is not reversible or k != 2.
TwoTapeQfa lift_rmfa(const MultiHeadDfa& m);

}  // namespace qfa
