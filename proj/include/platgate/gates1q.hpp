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

#ifndef PLATGATE_GATES1Q_HPP
#define PLATGATE_GATES1Q_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <limits>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "platgate/core.hpp"

namespace platgate {

using Matrix2c = Eigen::Matrix2cd;

/// Basis of a single 4-plat qubit: the pair channel is trivial (index 0)
/// or adjoint (index 1).
enum class QubitChannel { Trivial = 0, Adjoint = 1 };

enum class OneQubitOp { S, Sbar, T, Tbar };

struct OpToken {
    OneQubitOp op;
    int exponent = 1;

    bool operator==(const OpToken&) const = default;
};

using OpSequence = std::vector<OpToken>;

struct OneQubitSet {
    Matrix2c s;
    Matrix2c t;
    Matrix2c sbar;
    Matrix2c tbar;
    TheoryParams params;

    const Matrix2c& matrix(OneQubitOp op) const {
        switch (op) {
            case OneQubitOp::S:
                return s;
            case OneQubitOp::Sbar:
                return sbar;
            case OneQubitOp::T:
                return t;
            case OneQubitOp::Tbar:
                return tbar;
        }
        return s;
    }
};

namespace detail {

// Principal square root after removing rounding residue, so a radicand that
// is real (or imaginary) up to 1e-13 relative error takes a stable branch.
inline complex clean_sqrt(complex z) {
    double scale = std::abs(z);
    double re = std::abs(z.real()) <= 1e-13 * scale ? 0.0 : z.real();
    double im = std::abs(z.imag()) <= 1e-13 * scale ? 0.0 : z.imag();
    return std::sqrt(complex(re, im));
}

inline double unitarity_defect(const Eigen::MatrixXcd& m) {
    return (m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).norm();
}

}  // namespace detail

/// One-qubit operators S, T, S-bar, T-bar of the 4-plat with principal
/// square-root branches. Throws BranchInconsistency if the resulting S or
/// S-bar is not a unitary involution.
inline OneQubitSet one_qubit_matrices(const TheoryParams& params) {
    const complex q = params.q();
    const complex a = params.a();
    const complex a_over_q = a / q - q / a;
    const complex aq = a * q - 1.0 / (a * q);
    const complex a_diff = a - 1.0 / a;

    const complex norm = 1.0 / detail::clean_sqrt((q + 1.0 / q) * a_diff);
    const complex s_diag = detail::clean_sqrt(a_over_q);
    const complex s_off = detail::clean_sqrt(aq);
    Matrix2c s;
    s << norm * s_diag, norm * s_off, norm * s_off, -norm * s_diag;

    const complex sbar_diag = (q - 1.0 / q) / a_diff;
    const complex sbar_off = detail::clean_sqrt(aq * a_over_q) / a_diff;
    Matrix2c sbar;
    sbar << sbar_diag, sbar_off, sbar_off, -sbar_diag;

    Matrix2c t = Matrix2c::Zero();
    t(0, 0) = q / a;
    t(1, 1) = -1.0 / (q * a);
    Matrix2c tbar = Matrix2c::Zero();
    tbar(0, 0) = 1.0;
    tbar(1, 1) = -a;

    const std::string where = " at k=" + std::to_string(params.level()) + ", N=" + std::to_string(params.rank());
    for (auto [name, m] : {std::pair<const char*, const Matrix2c*>{"S", &s}, {"Sbar", &sbar}}) {
        if ((*m * *m - Matrix2c::Identity()).norm() > 1e-10) {
            throw BranchInconsistency(std::string(name) + "^2 != 1" + where);
        }
        if (detail::unitarity_defect(*m) > 1e-10) {
            throw BranchInconsistency(std::string(name) + " is not unitary" + where);
        }
    }
    return OneQubitSet{s, t, sbar, tbar, params};
}

namespace detail {

inline bool is_involution(OneQubitOp op) { return op == OneQubitOp::S || op == OneQubitOp::Sbar; }

inline Matrix2c token_matrix(const OpToken& tok, const OneQubitSet& set) {
    const Matrix2c& m = set.matrix(tok.op);
    if (is_involution(tok.op)) return m;
    Matrix2c out = Matrix2c::Zero();
    out(0, 0) = std::pow(m(0, 0), tok.exponent);
    out(1, 1) = std::pow(m(1, 1), tok.exponent);
    return out;
}

inline void check_token(const OpToken& tok) {
    if (tok.exponent == 0) throw MalformedSequence("operator exponent must be nonzero");
    if (is_involution(tok.op) && std::abs(tok.exponent) != 1) {
        throw MalformedSequence("S and Sbar are involutions; exponent must be +-1");
    }
}

}  // namespace detail

struct SequenceValue {
    Matrix2c product;
    complex amplitude;
};

/// Ordered product of a token sequence, first token applied first.
inline SequenceValue evaluate_sequence(const OpSequence& seq, const OneQubitSet& set) {
    Matrix2c acc = Matrix2c::Identity();
    for (const auto& tok : seq) {
        detail::check_token(tok);
        acc = detail::token_matrix(tok, set) * acc;
    }
    return {acc, acc(0, 0)};
}

/// Frobenius distance minimized over a global phase:
/// sqrt(|U|^2 + |V|^2 - 2 |tr(U^dagger V)|).
inline double gate_distance(const Matrix2c& u, const Matrix2c& v) {
    double d2 = u.squaredNorm() + v.squaredNorm() - 2.0 * std::abs((u.adjoint() * v).trace());
    return std::sqrt(std::max(0.0, d2));
}

inline std::string format_sequence(const OpSequence& seq) {
    std::string out;
    for (const auto& tok : seq) {
        if (!out.empty()) out += ' ';
        switch (tok.op) {
            case OneQubitOp::S:
                out += "S";
                break;
            case OneQubitOp::Sbar:
                out += "Sbar";
                break;
            case OneQubitOp::T:
                out += "T";
                break;
            case OneQubitOp::Tbar:
                out += "Tbar";
                break;
        }
        if (tok.exponent != 1) out += "^" + std::to_string(tok.exponent);
    }
    return out;
}

/// Parses "S T^2 Sbar Tbar^-1".
inline OpSequence parse_sequence(std::string_view text) {
    OpSequence seq;
    std::istringstream in{std::string(text)};
    std::string item;
    while (in >> item) {
        auto caret = item.find('^');
        std::string name = item.substr(0, caret);
        OpToken tok{};
        if (name == "S") {
            tok.op = OneQubitOp::S;
        } else if (name == "Sbar") {
            tok.op = OneQubitOp::Sbar;
        } else if (name == "T") {
            tok.op = OneQubitOp::T;
        } else if (name == "Tbar") {
            tok.op = OneQubitOp::Tbar;
        } else {
            throw MalformedSequence("unknown one-qubit operator '" + name + "'");
        }
        if (caret != std::string::npos) {
            std::string_view exp = std::string_view(item).substr(caret + 1);
            auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), tok.exponent);
            if (ec != std::errc{} || ptr != exp.data() + exp.size()) {
                throw MalformedSequence("bad exponent in '" + item + "'");
            }
        }
        detail::check_token(tok);
        seq.push_back(tok);
    }
    return seq;
}

struct Approximation {
    OpSequence sequence;
    double distance = 0.0;
    int length = 0;  // number of elementary letters
};

namespace detail {

// Elementary letters of the brute-force search, in tie-break order.
enum Letter : std::uint8_t { kS, kSbar, kT, kTinv, kTbar, kTbarInv, kLetterCount };

inline bool letter_allowed(int prev, int next) {
    if (prev < 0) return true;
    if (prev == next && (next == kS || next == kSbar)) return false;
    if ((prev == kT && next == kTinv) || (prev == kTinv && next == kT)) return false;
    if ((prev == kTbar && next == kTbarInv) || (prev == kTbarInv && next == kTbar)) return false;
    // T and Tbar commute: keep T-letters before Tbar-letters.
    if ((prev == kTbar || prev == kTbarInv) && (next == kT || next == kTinv)) return false;
    return true;
}

inline OpSequence letters_to_sequence(const std::vector<std::uint8_t>& letters) {
    OpSequence seq;
    for (auto l : letters) {
        OneQubitOp op = OneQubitOp::S;
        int e = 1;
        switch (l) {
            case kS:
                op = OneQubitOp::S;
                break;
            case kSbar:
                op = OneQubitOp::Sbar;
                break;
            case kT:
                op = OneQubitOp::T;
                break;
            case kTinv:
                op = OneQubitOp::T, e = -1;
                break;
            case kTbar:
                op = OneQubitOp::Tbar;
                break;
            default:
                op = OneQubitOp::Tbar, e = -1;
                break;
        }
        if (!seq.empty() && !is_involution(op) && seq.back().op == op) {
            seq.back().exponent += e;
        } else {
            seq.push_back({op, e});
        }
    }
    return seq;
}

struct NearBest {
    static constexpr double kTieTolerance = 1e-12;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, std::vector<std::uint8_t>>> ties;

    void offer(double d, const std::vector<std::uint8_t>& letters) {
        if (d > best + kTieTolerance) return;
        if (d < best) {
            best = d;
            std::erase_if(ties, [&](const auto& t) { return t.first > best + kTieTolerance; });
        }
        ties.emplace_back(d, letters);
    }

    void merge(const NearBest& other) {
        for (const auto& [d, l] : other.ties) offer(d, l);
    }
};

inline void approximate_dfs(const Matrix2c& target, const std::array<Matrix2c, kLetterCount>& mats, int max_len,
                            const Matrix2c& acc, std::vector<std::uint8_t>& letters, NearBest& out) {
    out.offer(gate_distance(target, acc), letters);
    if (static_cast<int>(letters.size()) == max_len) return;
    int prev = letters.empty() ? -1 : letters.back();
    for (int l = 0; l < kLetterCount; ++l) {
        if (!letter_allowed(prev, l)) continue;
        letters.push_back(static_cast<std::uint8_t>(l));
        approximate_dfs(target, mats, max_len, mats[l] * acc, letters, out);
        letters.pop_back();
    }
}

}  // namespace detail

/// Exhaustive search for the operator word of at most `max_len` letters that
/// best approximates `target` up to global phase. Among words within 1e-12 of
/// the optimum, the shortest and then lexicographically first (letter order
/// S, Sbar, T, T^-1, Tbar, Tbar^-1) wins, independent of `workers`.
inline Approximation approximate_gate(const Matrix2c& target, const OneQubitSet& set, int max_len,
                                      unsigned workers = 1) {
    using namespace detail;
    if (max_len < 0) throw InvalidInput("max_len must be >= 0");
    std::array<Matrix2c, kLetterCount> mats{set.s, set.sbar, set.t, set.t.inverse(), set.tbar, set.tbar.inverse()};

    NearBest total;
    total.offer(gate_distance(target, Matrix2c::Identity()), {});
    if (max_len > 0) {
        std::vector<NearBest> parts(kLetterCount);
        std::atomic<int> next{0};
        auto work = [&] {
            for (int l; (l = next++) < kLetterCount;) {
                std::vector<std::uint8_t> letters{static_cast<std::uint8_t>(l)};
                approximate_dfs(target, mats, max_len, mats[l], letters, parts[l]);
            }
        };
        unsigned n = std::clamp(workers, 1u, static_cast<unsigned>(kLetterCount));
        std::vector<std::jthread> pool;
        for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
        work();
        pool.clear();
        for (const auto& p : parts) total.merge(p);
    }

    const auto& winner = *std::min_element(total.ties.begin(), total.ties.end(), [](const auto& x, const auto& y) {
        if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
        return x.second < y.second;
    });
    return {letters_to_sequence(winner.second), winner.first, static_cast<int>(winner.second.size())};
}

}  // namespace platgate

#endif  // PLATGATE_GATES1Q_HPP
