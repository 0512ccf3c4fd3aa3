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

#include "platgate/gates1q.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace platgate;

namespace {

using cd = std::complex<double>;
using M2 = std::array<std::array<cd, 2>, 2>;

M2 mul(const M2& x, const M2& y) {
    M2 z{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return z;
}

M2 to_m2(const Matrix2c& m) { return {{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}}; }

double diff(const M2& x, const Matrix2c& y) {
    double d = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(x[i][j] - y(i, j)));
    return d;
}

Matrix2c random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::Matrix2cd z;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) z(i, j) = cd(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
    return qr.householderQ();
}

}  // namespace

TEST(one_qubit_matrices, tbar_is_diag_one_minus_a) {
    for (int n = 2; n <= 4; ++n) {
        for (int k : {9, 26, 42}) {
            auto p = theory_params(k, n);
            auto set = one_qubit_matrices(p);
            EXPECT_LT(std::abs(set.tbar(0, 0) - 1.0), 1e-15);
            EXPECT_LT(std::abs(set.tbar(1, 1) + p.a()), 1e-15);
            EXPECT_EQ(set.tbar(0, 1), 0.0);
            EXPECT_EQ(set.tbar(1, 0), 0.0);
        }
    }
}

TEST(one_qubit_matrices, t_diagonal) {
    auto p = theory_params(26, 2);
    auto set = one_qubit_matrices(p);
    EXPECT_LT(std::abs(set.t(0, 0) - p.q() / p.a()), 1e-15);
    EXPECT_LT(std::abs(set.t(1, 1) + 1.0 / (p.q() * p.a())), 1e-15);
}

TEST(one_qubit_matrices, s_squares_to_identity) {
    auto set = one_qubit_matrices(theory_params(26, 2));
    EXPECT_LT((set.s * set.s - Matrix2c::Identity()).norm(), 1e-10);
    EXPECT_LT((set.sbar * set.sbar - Matrix2c::Identity()).norm(), 1e-10);
}

TEST(one_qubit_matrices, sbar_real_symmetric) {
    auto set = one_qubit_matrices(theory_params(26, 2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_LT(std::abs(set.sbar(i, j).imag()), 1e-12);
    EXPECT_EQ(set.sbar(0, 1), set.sbar(1, 0));
}

TEST(one_qubit_matrices, s_matches_direct_formula) {
    auto p = theory_params(26, 2);
    cd q = p.q(), a = p.a();
    cd norm = 1.0 / std::sqrt((q + 1.0 / q) * (a - 1.0 / a));
    cd d = std::sqrt(a / q - q / a), o = std::sqrt(a * q - 1.0 / (a * q));
    M2 expect{{{norm * d, norm * o}, {norm * o, -norm * d}}};
    EXPECT_LT(diff(expect, one_qubit_matrices(p).s), 1e-13);
}

TEST(one_qubit_matrices, su2_t_proportional_to_tbar_inverse) {
    for (int k : {5, 26, 60}) {
        auto set = one_qubit_matrices(theory_params(k, 2));
        Matrix2c prod = set.t * set.tbar;
        EXPECT_LT(std::abs(prod(0, 0) - prod(1, 1)), 1e-13);
    }
}

TEST(one_qubit_matrices, valid_over_a_range) {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k <= 60; ++k) {
            TheoryParams p = theory_params(200, n);
            try {
                p = theory_params(k, n);
            } catch (const DegenerateParams&) {
                continue;
            }
            if (k < n + 2) {
                // Below k = N + 2 some radicands can leave the upper half plane.
                try {
                    one_qubit_matrices(p);
                } catch (const BranchInconsistency&) {
                    continue;
                }
            }
            auto set = one_qubit_matrices(p);
            EXPECT_LT(detail::unitarity_defect(set.s), 1e-10) << k << " " << n;
            EXPECT_LT(detail::unitarity_defect(set.sbar), 1e-10);
            EXPECT_LT(detail::unitarity_defect(set.t), 1e-10);
        }
    }
}

TEST(evaluate_sequence, empty) {
    auto set = one_qubit_matrices(theory_params(26, 2));
    auto v = evaluate_sequence({}, set);
    EXPECT_EQ(v.product, Matrix2c::Identity());
    EXPECT_EQ(v.amplitude, 1.0);
}

TEST(evaluate_sequence, inverse_pair) {
    auto set = one_qubit_matrices(theory_params(26, 2));
    auto v = evaluate_sequence({{OneQubitOp::T, 1}, {OneQubitOp::T, -1}}, set);
    EXPECT_LT((v.product - Matrix2c::Identity()).norm(), 1e-15);
    EXPECT_LT(std::abs(v.amplitude - 1.0), 1e-15);
}

TEST(evaluate_sequence, naive_product) {
    auto set = one_qubit_matrices(theory_params(26, 2));
    M2 s = to_m2(set.s), t = to_m2(set.t);
    M2 expect = mul(s, mul(mul(t, t), s));
    auto v = evaluate_sequence(parse_sequence("S T^2 S"), set);
    EXPECT_LT(diff(expect, v.product), 1e-12);
    EXPECT_LT(std::abs(v.amplitude - expect[0][0]), 1e-12);
}

TEST(evaluate_sequence, order_first_token_acts_first) {
    auto set = one_qubit_matrices(theory_params(26, 2));
    auto v = evaluate_sequence(parse_sequence("T S"), set);
    EXPECT_LT((v.product - set.s * set.t).norm(), 1e-14);
}

TEST(evaluate_sequence, malformed) {
    auto set = one_qubit_matrices(theory_params(26, 2));
    EXPECT_THROW(evaluate_sequence({{OneQubitOp::T, 0}}, set), MalformedSequence);
    EXPECT_THROW(evaluate_sequence({{OneQubitOp::S, 2}}, set), MalformedSequence);
    EXPECT_THROW(parse_sequence("S U"), MalformedSequence);
    EXPECT_THROW(parse_sequence("T^x"), MalformedSequence);
    EXPECT_THROW(parse_sequence("Sbar^3"), MalformedSequence);
}

TEST(evaluate_sequence, text_round_trip) {
    OpSequence seq{{OneQubitOp::S, 1}, {OneQubitOp::T, 2}, {OneQubitOp::Sbar, -1}, {OneQubitOp::Tbar, -3}};
    EXPECT_EQ(format_sequence(seq), "S T^2 Sbar^-1 Tbar^-3");
    EXPECT_EQ(parse_sequence(format_sequence(seq)), seq);
}

TEST(evaluate_sequence, long_products_stay_unitary) {
    std::mt19937_64 rng(7);
    auto set = one_qubit_matrices(theory_params(33, 2));
    for (int trial = 0; trial < 500; ++trial) {
        OpSequence seq;
        for (int i = 0; i < 20; ++i) {
            int which = static_cast<int>(rng() % 4);
            int e = (which < 2) ? 1 : static_cast<int>(rng() % 2) * 2 - 1;
            seq.push_back({static_cast<OneQubitOp>(which), e});
        }
        EXPECT_LT(detail::unitarity_defect(evaluate_sequence(seq, set).product), 1e-10);
    }
}

TEST(gate_distance, phase_invariant) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> beta(-4, 4);
    for (int i = 0; i < 100; ++i) {
        Matrix2c u = random_unitary(rng);
        EXPECT_LT(gate_distance(u, std::polar(1.0, beta(rng)) * u), 1e-7);
        EXPECT_GE(gate_distance(u, random_unitary(rng)), 0.0);
    }
}

TEST(approximate_gate, member_of_set) {
    auto set = one_qubit_matrices(theory_params(26, 2));
    auto r = approximate_gate(set.t, set, 3);
    EXPECT_EQ(r.sequence, (OpSequence{{OneQubitOp::T, 1}}));
    EXPECT_LE(r.distance, 1e-12);
}

TEST(approximate_gate, identity_is_empty) {
    auto set = one_qubit_matrices(theory_params(26, 2));
    auto r = approximate_gate(Matrix2c::Identity(), set, 4);
    EXPECT_TRUE(r.sequence.empty());
    EXPECT_EQ(r.distance, 0.0);
    EXPECT_EQ(r.length, 0);
}

TEST(approximate_gate, exchange_improves_with_length) {
    auto set = one_qubit_matrices(theory_params(42, 2));
    Matrix2c x;
    x << 0, 1, 1, 0;
    double prev = 1e9;
    for (int len = 2; len <= 8; ++len) {
        auto r = approximate_gate(x, set, len);
        EXPECT_LE(r.distance, prev + 1e-12) << len;
        EXPECT_NEAR(gate_distance(evaluate_sequence(r.sequence, set).product, x), r.distance, 1e-12);
        prev = r.distance;
    }
}

TEST(approximate_gate, monotone_for_random_targets) {
    std::mt19937_64 rng(3);
    auto set = one_qubit_matrices(theory_params(26, 2));
    for (int i = 0; i < 5; ++i) {
        Matrix2c u = random_unitary(rng);
        double prev = 1e9;
        for (int len = 0; len <= 6; ++len) {
            double d = approximate_gate(u, set, len).distance;
            EXPECT_LE(d, prev + 1e-12);
            prev = d;
        }
    }
}

TEST(approximate_gate, independent_of_workers) {
    std::mt19937_64 rng(5);
    auto set = one_qubit_matrices(theory_params(33, 2));
    Matrix2c u = random_unitary(rng);
    auto a = approximate_gate(u, set, 7, 1);
    auto b = approximate_gate(u, set, 7, 3);
    EXPECT_EQ(a.sequence, b.sequence);
    EXPECT_EQ(a.distance, b.distance);
}

TEST(approximate_gate, rejects_negative_length) {
    auto set = one_qubit_matrices(theory_params(26, 2));
    EXPECT_THROW(approximate_gate(Matrix2c::Identity(), set, -1), InvalidInput);
}
