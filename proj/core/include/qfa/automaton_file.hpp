#pragma once

#include <string>
#include <vector>

#include "qfa/registry.hpp"

namespace qfa {

/// Model tag written to the "model" field.
std::string model_name(const Machine& m);

struct LoadedAutomaton {
    Machine machine;
    /// Gram deviations and unreachable states; structural errors throw.
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
};

/// Parses a JSON automaton document. Throws FormatError (with line or field)
/// and ParseError for bad amplitude expressions.
LoadedAutomaton parse_automaton(const std::string& text);
LoadedAutomaton load_automaton(const std::string& path);

/// Pretty-printed JSON; `notes` go to the "notes" field.
std::string dump_automaton(const Machine& m, const std::vector<std::string>& notes = {});
void save_automaton(const Machine& m, const std::string& path, const std::vector<std::string>& notes = {});

}  // namespace qfa
