#pragma once

#include <cmath>
#include <map>
#include <utility>

#include "qfa/amplitude.hpp"

namespace qfa {

/// Amplitudes with magnitude below this are dropped.
inline constexpr double kPruneThreshold = 1e-15;
/// Tolerance used by every validator.
inline constexpr double kValidationTolerance = 1e-9;
/// Tolerance for unitary completion.
inline constexpr double kCompletionTolerance = 1e-12;

/// Finite map from basis label to amplitude. Ordered so that iteration and
/// printing are deterministic.
template <typename Label>
class Superposition {
public:
    using Map = std::map<Label, Complex>;
    using const_iterator = typename Map::const_iterator;

    Superposition() = default;

    static Superposition basis(const Label& label) {
        Superposition s;
        s.add(label, Complex{1.0, 0.0});
        return s;
    }

    /// Accumulates `amplitude` onto `label`, pruning if the sum vanishes.
    void add(const Label& label, Complex amplitude) {
        auto [it, inserted] = amps_.try_emplace(label, amplitude);
        if (!inserted) it->second += amplitude;
        if (std::abs(it->second) < kPruneThreshold) amps_.erase(it);
    }

    void set(const Label& label, Complex amplitude) {
        if (std::abs(amplitude) < kPruneThreshold) {
            amps_.erase(label);
        } else {
            amps_[label] = amplitude;
        }
    }

    Complex at(const Label& label) const {
        auto it = amps_.find(label);
        return it == amps_.end() ? Complex{} : it->second;
    }

    void erase(const Label& label) { amps_.erase(label); }

    double norm_squared() const {
        double total = 0.0;
        for (const auto& [_, a] : amps_) total += std::norm(a);
        return total;
    }

    Superposition scaled(Complex factor) const {
        Superposition out;
        for (const auto& [label, a] : amps_) out.add(label, a * factor);
        return out;
    }

    Superposition& operator+=(const Superposition& other) {
        for (const auto& [label, a] : other.amps_) add(label, a);
        return *this;
    }

    bool empty() const { return amps_.empty(); }
    std::size_t size() const { return amps_.size(); }
    const_iterator begin() const { return amps_.begin(); }
    const_iterator end() const { return amps_.end(); }
    const Map& amplitudes() const { return amps_; }

    bool operator==(const Superposition&) const = default;

private:
    Map amps_;
};

}  // namespace qfa
