// Copyright 2026 The platgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLATGATE_PLAT_HPP
#define PLATGATE_PLAT_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <compare>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "platgate/cable.hpp"

namespace platgate {

inline constexpr int kCables = 4;

/// One signed braid generator sigma_position^sign on four cables.
struct Generator {
    int position = 1;  // 1, 2 or 3: crosses the cables at positions p and p+1
    int sign = 1;      // +1 or -1

    int encoded() const { return position * sign; }
    Generator inverse() const { return {position, -sign}; }
    auto operator<=>(const Generator&) const = default;
};

/// Braid word, bottom to top: generators[0] acts first.
struct BraidWord {
    std::vector<Generator> generators;

    std::size_t size() const { return generators.size(); }
    bool empty() const { return generators.empty(); }
    auto begin() const { return generators.begin(); }
    auto end() const { return generators.end(); }
    const Generator& operator[](std::size_t i) const { return generators[i]; }

    bool operator==(const BraidWord&) const = default;
    /// Shorter words first, then lexicographic in (position, sign).
    std::strong_ordering operator<=>(const BraidWord& other) const {
        if (auto c = size() <=> other.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(generators.begin(), generators.end(),
                                                      other.generators.begin(), other.generators.end());
    }
};

inline Generator generator_from_int(int value) {
    if (value == 0 || value < -3 || value > 3) {
        throw InvalidInput("braid generator must be one of +-1, +-2, +-3, got " + std::to_string(value));
    }
    return {std::abs(value), value > 0 ? 1 : -1};
}

inline BraidWord word_from_ints(const std::vector<int>& values) {
    BraidWord w;
    w.generators.reserve(values.size());
    for (int v : values) w.generators.push_back(generator_from_int(v));
    return w;
}

inline std::vector<int> word_to_ints(const BraidWord& word) {
    std::vector<int> out;
    out.reserve(word.size());
    for (const auto& g : word) out.push_back(g.encoded());
    return out;
}

/// Whitespace-separated signed positions, e.g. "2 2 -1 -1 3 3".
inline BraidWord parse_word(std::string_view text) {
    BraidWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string_view tok = text.substr(i, j - i);
        if (tok.front() == '+') tok.remove_prefix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw InvalidInput("cannot parse braid generator '" + std::string(text.substr(i, j - i)) + "'");
        }
        w.generators.push_back(generator_from_int(v));
        i = j;
    }
    return w;
}

inline std::string format_word(const BraidWord& word) {
    std::string out;
    for (const auto& g : word) {
        if (!out.empty()) out += ' ';
        out += std::to_string(g.encoded());
    }
    return out;
}

using CableLayout = std::array<int, kCables>;  // cable id at each position

inline constexpr CableLayout kIdentityLayout{0, 1, 2, 3};

inline void apply_generator(CableLayout& layout, const Generator& g) {
    std::swap(layout[g.position - 1], layout[g.position]);
}

/// Minimal number of adjacent transpositions that restore the identity layout.
inline int inversion_count(const CableLayout& layout) {
    int n = 0;
    for (int i = 0; i < kCables; ++i) {
        for (int j = i + 1; j < kCables; ++j) n += layout[i] > layout[j] ? 1 : 0;
    }
    return n;
}

enum class Orientation { Up, Down };

/// Connectivity of the plat closure: bottom cups join cables (0,1) and (2,3),
/// top caps join whatever cables end at positions (1,2) and (3,4).
struct PlatDiagram {
    BraidWord word;
    std::array<int, kCables> perm{};  // perm[cable] = final position (0-based)
    std::vector<CableLayout> cable_at;  // cable_at[t] = layout before generator t; back() is final
    std::array<Orientation, kCables> orientation{};
    std::array<int, kCables> component{};  // smallest cable id of the component
    int component_count = 0;

    bool identity_permutation() const { return cable_at.back() == kIdentityLayout; }
};

inline PlatDiagram plat_connectivity(const BraidWord& word) {
    PlatDiagram d;
    d.word = word;
    d.cable_at.reserve(word.size() + 1);
    CableLayout layout = kIdentityLayout;
    d.cable_at.push_back(layout);
    for (const auto& g : word) {
        if (g.position < 1 || g.position > 3 || (g.sign != 1 && g.sign != -1)) {
            throw InvalidInput("malformed generator in braid word");
        }
        apply_generator(layout, g);
        d.cable_at.push_back(layout);
    }
    for (int pos = 0; pos < kCables; ++pos) d.perm[layout[pos]] = pos;
    for (int c = 0; c < kCables; ++c) d.orientation[c] = c % 2 == 0 ? Orientation::Up : Orientation::Down;

    std::array<int, kCables> parent{0, 1, 2, 3};
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    unite(0, 1);
    unite(2, 3);
    unite(layout[0], layout[1]);
    unite(layout[2], layout[3]);
    for (int c = 0; c < kCables; ++c) d.component[c] = find(c);
    std::array<int, kCables> roots = d.component;
    std::sort(roots.begin(), roots.end());
    d.component_count = static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
    return d;
}

using CrossingAssignment = std::vector<CrossingKind>;

inline CrossingKind crossing_kind(const PlatDiagram& d, int a, int b) {
    if (d.component[a] != d.component[b]) return CrossingKind::DifferentComponents;
    return d.orientation[a] == d.orientation[b] ? CrossingKind::SameComponentParallel
                                                : CrossingKind::SameComponentAntiparallel;
}

inline CrossingAssignment assign_crossing_kinds(const PlatDiagram& d) {
    CrossingAssignment kinds;
    kinds.reserve(d.word.size());
    for (std::size_t t = 0; t < d.word.size(); ++t) {
        int p = d.word[t].position;
        kinds.push_back(crossing_kind(d, d.cable_at[t][p - 1], d.cable_at[t][p]));
    }
    return kinds;
}

enum class EvalMode { Gate, Invariant };

struct EvalResult {
    Matrix3c b;
    complex amplitude;
    double probability = 0.0;  // |B_11|^2
    double phi = 0.0;          // Arg(B_11) in (-pi, pi]
    double leakage = 0.0;      // 1 - P
    CrossingAssignment kinds;
};

/// Arg in (-pi, pi].
inline double phase_of(complex z) {
    double phi = std::arg(z);
    return phi <= -std::numbers::pi ? std::numbers::pi : phi;
}

inline EvalResult make_result(const Matrix3c& b, CrossingAssignment kinds) {
    EvalResult r;
    r.b = b;
    r.amplitude = b(0, 0);
    r.probability = std::norm(r.amplitude);
    r.phi = phase_of(r.amplitude);
    r.leakage = 1.0 - r.probability;
    r.kinds = std::move(kinds);
    return r;
}

inline void require_identity(const PlatDiagram& d) {
    if (!d.identity_permutation()) {
        throw NonIdentityPermutation("braid word '" + format_word(d.word) +
                                     "' does not return every cable to its starting position");
    }
}

/// B = M_n ... M_2 M_1 over the word's crossings, each M chosen by position,
/// crossing kind and sign.
inline EvalResult evaluate_braid(const BraidWord& word, const CrossingTable& table, EvalMode mode = EvalMode::Gate) {
    PlatDiagram d = plat_connectivity(word);
    if (mode == EvalMode::Gate) require_identity(d);
    CrossingAssignment kinds = assign_crossing_kinds(d);
    Matrix3c b = Matrix3c::Identity();
    for (std::size_t t = 0; t < word.size(); ++t) {
        b = table(word[t].position, kinds[t], word[t].sign) * b;
    }
    return make_result(b, std::move(kinds));
}

inline EvalResult evaluate_braid(const BraidWord& word, const CableSet& set, EvalMode mode = EvalMode::Gate) {
    return evaluate_braid(word, CrossingTable(set), mode);
}

/// Approximate two-qubit gate diag(g_I, g_II, g_III, g_IV) over the four
/// channel cases (trivial/adjoint on the left and right qubit pairs).
struct DiagonalGate {
    std::array<complex, 4> entries{};
    double case_iv_leakage = 0.0;
};

inline DiagonalGate two_qubit_gate(const BraidWord& word, const CableSet& set) {
    PlatDiagram d = plat_connectivity(word);
    require_identity(d);
    CrossingAssignment kinds = assign_crossing_kinds(d);
    // Two adjoint cables of one qubit fuse to the trivial channel, whose R
    // eigenvalue is 1; each of their mutual crossings leaves only the kind's
    // scalar prefactor. Crossings with a trivial cable act as identity.
    auto pair_phase = [&](int c0, int c1) {
        complex g = 1.0;
        for (std::size_t t = 0; t < word.size(); ++t) {
            int p = word[t].position;
            int a = d.cable_at[t][p - 1];
            int b = d.cable_at[t][p];
            if ((a == c0 && b == c1) || (a == c1 && b == c0)) {
                complex f = set.prefactor(kinds[t]);
                g *= word[t].sign > 0 ? f : 1.0 / f;
            }
        }
        return g;
    };
    DiagonalGate gate;
    gate.entries[0] = 1.0;
    gate.entries[1] = pair_phase(2, 3);
    gate.entries[2] = pair_phase(0, 1);
    EvalResult r = evaluate_braid(word, set, EvalMode::Gate);
    gate.entries[3] = r.amplitude;
    gate.case_iv_leakage = 1.0 - r.probability;
    return gate;
}

namespace detail {
inline constexpr std::string_view kIdleRow = "|   |   |   |";
}

/// Four-strand diagram, one row per generator, time running upward (the
/// first generator is the bottom row). A crossing sigma_p^+ is drawn as
/// "\ + /" between strands p and p+1, sigma_p^- as "\ - /".
inline std::string render_ascii(const BraidWord& word) {
    if (word.empty()) return std::string(detail::kIdleRow) + "\n";
    std::string out;
    for (auto it = word.generators.rbegin(); it != word.generators.rend(); ++it) {
        std::string row(detail::kIdleRow);
        std::size_t c = 4 * static_cast<std::size_t>(it->position - 1);
        row.replace(c, 5, it->sign > 0 ? "\\ + /" : "\\ - /");
        out += row;
        out += '\n';
    }
    return out;
}

inline BraidWord parse_ascii(std::string_view diagram) {
    std::vector<Generator> rows;
    std::istringstream in{std::string(diagram)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
        if (line.empty() || line == detail::kIdleRow) continue;
        bool matched = false;
        for (int p = 1; p <= 3 && !matched; ++p) {
            for (int s : {1, -1}) {
                std::string row(detail::kIdleRow);
                row.replace(4 * static_cast<std::size_t>(p - 1), 5, s > 0 ? "\\ + /" : "\\ - /");
                if (line == row) {
                    rows.push_back({p, s});
                    matched = true;
                    break;
                }
            }
        }
        if (!matched) throw InvalidInput("unrecognized diagram row '" + line + "'");
    }
    std::reverse(rows.begin(), rows.end());
    return BraidWord{std::move(rows)};
}

}  // namespace platgate

#endif  // PLATGATE_PLAT_HPP
