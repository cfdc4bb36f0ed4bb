#pragma once

// Independent reference oracles and random machine generators shared by the
// unit, property and acceptance tests.

#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qfa/quantum.hpp"

namespace support {

inline std::string flat(const qfa::Word& w) {
    std::string s;
    for (const auto& x : w) s += x;
    return s;
}

inline qfa::Word word(const std::string& s) {
    qfa::Word w;
    for (char c : s) w.emplace_back(1, c);
    return w;
}

// Every split point, not just the middle.
inline bool ww_brute(const std::string& s) {
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (s.substr(0, i) == s.substr(i)) return true;
    }
    return false;
}

inline bool anbncn_brute(const std::string& s) {
    const auto a = std::count(s.begin(), s.end(), 'a');
    const auto b = std::count(s.begin(), s.end(), 'b');
    const auto c = std::count(s.begin(), s.end(), 'c');
    return a >= 1 && a == b && b == c && std::is_sorted(s.begin(), s.end()) &&
           a + b + c == static_cast<long>(s.size());
}

inline bool anbn_brute(const std::string& s) {
    const auto a = std::count(s.begin(), s.end(), 'a');
    return a >= 1 && 2 * a == static_cast<long>(s.size()) && s == std::string(a, 'a') + std::string(a, 'b');
}

// Pairwise block comparison over string pieces, written without the library
// block parser.
inline bool percent_brute(const std::string& s) {
    if (s.empty() || s[0] != '%') return false;
    std::vector<std::pair<std::string, std::string>> blocks;
    std::size_t start = 1;
    while (true) {
        const auto end = s.find('%', start);
        const std::string block = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
        const auto star = block.find('*');
        if (star == std::string::npos || block.find('*', star + 1) != std::string::npos) return false;
        blocks.emplace_back(block.substr(0, star), block.substr(star + 1));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    for (const auto& [w1, x1] : blocks) {
        for (const auto& [w2, x2] : blocks) {
            if (w1 == w2 && x1 != x2) return true;
        }
    }
    return false;
}

inline bool even_a_brute(const std::string& s) { return std::count(s.begin(), s.end(), 'a') % 2 == 0; }
inline bool ends_in_b_brute(const std::string& s) { return !s.empty() && s.back() == 'b'; }
inline bool a_mod_3_brute(const std::string& s) { return std::count(s.begin(), s.end(), 'a') % 3 == 0; }

inline std::vector<std::string> all_strings(const std::string& alphabet, std::size_t max_len) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == max_len) continue;
        for (char c : alphabet) out.push_back(out[i] + c);
    }
    return out;
}

// `k` orthonormal vectors in C^n (k <= n) from the QR factor of a Gaussian matrix.
inline Eigen::MatrixXcd random_orthonormal_rows(std::mt19937_64& rng, int k, int n) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a(r, c) = qfa::Complex(g(rng), g(rng));
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    return q.transpose().topRows(k);
}

inline std::string amplitude_expr(qfa::Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g+%.17g*i", z.real(), z.imag());
    return buf;
}

// Well-formed two-tape machine. Heads never move off `$`, so the $-clamp
// cannot merge configurations.
inline qfa::TwoTapeQfa random_machine(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> states_dist(2, 6);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    qfa::TwoTapeQfa m;
    m.input_alphabet = {"a", "b"};
    m.tape2_alphabet = {"a", "b", "x"};
    m.rho.add("a", "a");
    m.rho.add("b", "b");
    if (bit(rng)) m.rho.add("a", "x");
    if (bit(rng)) m.rho.add("b", "x");
    m.table = qfa::OperatorTable({}, m.input_alphabet, m.tape2_alphabet);

    const int n = states_dist(rng);
    for (int q = 0; q < n; ++q) {
        const double kind = unit(rng);
        qfa::HeadMove move{bit(rng), bit(rng)};
        if (q > 0 && kind < 0.15) {
            m.accepting.insert(q);
            move = {0, 0};
        } else if (q > 0 && kind < 0.3) {
            m.rejecting.insert(q);
            move = {0, 0};
        }
        m.table.add_state("s" + std::to_string(q), move);
    }
    m.start = qfa::Superposition<qfa::StateIndex>::basis(0);

    std::vector<qfa::Symbol> s1{"#", "a", "b", "$"};
    std::vector<qfa::Symbol> s2{"#", "a", "b", "x", "$"};
    for (const auto& sigma : s1) {
        for (const auto& tau : s2) {
            std::vector<qfa::StateIndex> targets;
            for (int q = 0; q < n; ++q) {
                const auto d = m.table.move(q);
                if ((sigma == "$" && d.first) || (tau == "$" && d.second)) continue;
                targets.push_back(q);
            }
            std::vector<qfa::StateIndex> sources;
            for (int q = 0; q < n; ++q) {
                if (!m.is_halting(q) && unit(rng) < 0.8) sources.push_back(q);
            }
            std::shuffle(sources.begin(), sources.end(), rng);
            sources.resize(std::min(sources.size(), targets.size()));
            if (sources.empty()) continue;
            const auto rows = random_orthonormal_rows(rng, static_cast<int>(sources.size()),
                                                      static_cast<int>(targets.size()));
            for (std::size_t r = 0; r < sources.size(); ++r) {
                std::vector<qfa::Entry> entries;
                for (std::size_t c = 0; c < targets.size(); ++c) {
                    const auto z = rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
                    entries.push_back(qfa::Entry{targets[c], z, amplitude_expr(z)});
                }
                m.table.set_row({sigma, tau}, sources[r], entries);
            }
        }
    }
    return m;
}

inline qfa::Word random_word(std::mt19937_64& rng, const std::vector<qfa::Symbol>& alphabet, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    qfa::Word w(len(rng));
    for (auto& s : w) s = alphabet[pick(rng)];
    return w;
}

// Random compatible second tape for `w`.
inline qfa::Word random_tape(std::mt19937_64& rng, const qfa::SymbolRelation& rho, const qfa::Word& w) {
    qfa::Word out;
    for (const auto& s : w) {
        auto image = rho.image(s);
        std::uniform_int_distribution<std::size_t> pick(0, image.size() - 1);
        out.push_back(image[pick(rng)]);
    }
    return out;
}

// Partial table with orthonormal defined rows and no move constraints.
inline qfa::OperatorTable random_partial_table(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> states_dist(1, 5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    qfa::OperatorTable t({}, {"a"}, {"a", "b"});
    const int n = states_dist(rng);
    for (int q = 0; q < n; ++q) t.add_state("s" + std::to_string(q));
    for (const auto& sigma : {"#", "a", "$"}) {
        for (const auto& tau : {"#", "a", "b", "$"}) {
            if (unit(rng) < 0.3) continue;
            std::vector<qfa::StateIndex> sources;
            for (int q = 0; q < n; ++q) {
                if (unit(rng) < 0.6) sources.push_back(q);
            }
            if (sources.empty()) continue;
            const auto rows = random_orthonormal_rows(rng, static_cast<int>(sources.size()), n);
            for (std::size_t r = 0; r < sources.size(); ++r) {
                std::vector<qfa::Entry> entries;
                for (int c = 0; c < n; ++c) {
                    const auto z = rows(static_cast<Eigen::Index>(r), c);
                    entries.push_back(qfa::Entry{c, z, amplitude_expr(z)});
                }
                t.set_row({sigma, tau}, sources[r], entries);
            }
        }
    }
    return t;
}

// Largest |acc + rej + live - 1| over the steps of a traced run; rej
// already counts sink mass.
inline double conservation_error(const qfa::RunResult& r) {
    double acc = 0.0, rej = 0.0, worst = 0.0;
    for (const auto& s : r.trace) {
        acc += s.acc_mass;
        rej += s.rej_mass + s.sink_mass;
        double live = 0.0;
        for (const auto& [c, amp] : s.live) live += std::norm(amp);
        worst = std::max(worst, std::abs(acc + rej + live - 1.0));
    }
    return std::max(worst, std::abs(r.p_acc + r.p_rej + r.p_live - 1.0));
}

// Evolves each basis configuration alone and returns the largest deviation of
// the image inner products from delta * (1 - sink).
inline double stepped_orthogonality(const qfa::TwoTapeQfa& m, const qfa::Tapes& tapes,
                                    const std::vector<qfa::Configuration>& configs) {
    std::vector<qfa::EvolveResult> images;
    for (const auto& c : configs) {
        images.push_back(qfa::evolve_twotape(m, tapes, qfa::Superposition<qfa::Configuration>::basis(c)));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i; j < images.size(); ++j) {
            qfa::Complex dot{};
            for (const auto& [c, amp] : images[i].state) dot += std::conj(amp) * images[j].state.at(c);
            const double expected = i == j ? 1.0 - images[i].sink_mass : 0.0;
            worst = std::max(worst, std::abs(dot - expected));
        }
    }
    return worst;
}

// Distinct live configurations seen in a traced run, at most `cap`.
inline std::vector<qfa::Configuration> trace_configurations(const qfa::RunResult& r, std::size_t cap) {
    std::set<qfa::Configuration> seen;
    for (const auto& s : r.trace) {
        for (const auto& [c, amp] : s.live) {
            if (seen.size() < cap) seen.insert(c);
        }
    }
    return {seen.begin(), seen.end()};
}

inline double completion_residual(const qfa::OperatorTable& completed) {
    const auto n = static_cast<Eigen::Index>(completed.state_count());
    double worst = 0.0;
    for (const auto& [pair, rows] : completed.operators()) {
        const auto m = qfa::symbol_pair_matrix(completed, pair);
        worst = std::max(worst, (m * m.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
        worst = std::max(worst, (m.adjoint() * m - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
    }
    return worst;
}

}  // namespace support
