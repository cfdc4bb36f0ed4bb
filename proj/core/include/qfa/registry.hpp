#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qfa/classical.hpp"
#include "qfa/quantum.hpp"

namespace qfa {

using Machine = std::variant<Dfa, MultiHeadDfa, TwoTapeQfa, MeasureManyQfa>;

struct RegistryEntry {
    std::string name;
    /// Where the machine comes from, in words.
    std::string locus;
    std::string language;
    /// Deviations from the printed tables; empty when used verbatim.
    std::vector<std::string> repairs;
    std::vector<std::string> notes;
    Machine machine;
};

const std::vector<std::string>& example_names();

/// Throws Error for unknown names.
RegistryEntry build_example(const std::string& name);

/// Two arrival states of the ww machine and the 2-point transform applied
/// to them, exposed for the interference check.
struct WwTransform {
    StateIndex arrival1;
    StateIndex arrival2;
    StateIndex reject;
    StateIndex accept;
};
WwTransform ww_transform_states(const TwoTapeQfa& ww);

}  // namespace qfa
