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

#ifndef PLATGATE_TESTS_NAIVE_BRAID_HPP
#define PLATGATE_TESTS_NAIVE_BRAID_HPP

// A second, deliberately plain evaluator for 4-plat cable braids. It shares no
// code with the library: plain arrays, complex-form quantum integers, a
// graph search for link components and a hand-written 3x3 product.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace naive {

using cd = std::complex<double>;
using Mat = std::array<std::array<cd, 3>, 3>;

inline Mat identity() {
    Mat m{};
    for (int i = 0; i < 3; ++i) m[i][i] = 1.0;
    return m;
}

inline Mat mul(const Mat& x, const Mat& y) {
    Mat z{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) z[i][j] += x[i][l] * y[l][j];
    return z;
}

inline Mat diag(cd a, cd b, cd c) {
    Mat m{};
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    return m;
}

inline double max_diff(const Mat& x, const Mat& y) {
    double d = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(x[i][j] - y[i][j]));
    return d;
}

struct Model {
    cd q;
    Mat s;
    Mat s_inv;
    std::array<std::array<Mat, 2>, 3> diag_ops;  // [kind][sign>0]: kind 0 same/parallel, 1 same/anti, 2 different
};

// Quantum integer from its complex definition.
inline double qnum(int n, cd q) { return ((std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q)).real(); }

inline Model make_model(int k) {
    Model m;
    m.q = std::exp(cd(0, 2 * std::numbers::pi / (k + 2)));
    double n2 = qnum(2, m.q), n3 = qnum(3, m.q), n4 = qnum(4, m.q), n5 = qnum(5, m.q), n6 = qnum(6, m.q);
    double r3 = std::sqrt(n3), r35 = std::sqrt(n3 * n5), r5 = std::sqrt(n5);
    double rows[3][3] = {
        {1 / n3, r3 / n3, r5 / n3},
        {r3 / n3, n6 / (n3 * n4), -n2 * r35 / (n3 * n4)},
        {-r5 / n3, n2 * r35 / (n3 * n4), -n2 / (n3 * n4)},
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m.s[i][j] = rows[i][j];
            m.s_inv[j][i] = rows[i][j];
        }
    cd r1 = 1.0, r2 = -m.q * m.q, r3e = std::pow(m.q, 6);
    cd pre[3] = {std::pow(m.q, -4), 1.0, std::pow(m.q, -8)};
    for (int kind = 0; kind < 3; ++kind) {
        m.diag_ops[kind][1] = diag(pre[kind] * r1, pre[kind] * r2, pre[kind] * r3e);
        m.diag_ops[kind][0] = diag(1.0 / (pre[kind] * r1), 1.0 / (pre[kind] * r2), 1.0 / (pre[kind] * r3e));
    }
    return m;
}

// Link components of the plat closure by repeated label propagation.
inline std::array<int, 4> components(const std::vector<int>& word, std::array<int, 4>& final_at) {
    std::array<int, 4> at{0, 1, 2, 3};
    for (int g : word) {
        int p = std::abs(g) - 1;
        std::swap(at[p], at[p + 1]);
    }
    final_at = at;
    std::vector<std::pair<int, int>> edges{{0, 1}, {2, 3}, {at[0], at[1]}, {at[2], at[3]}};
    std::array<int, 4> label{0, 1, 2, 3};
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [a, b] : edges) {
            int lo = std::min(label[a], label[b]);
            if (label[a] != lo || label[b] != lo) {
                label[a] = label[b] = lo;
                changed = true;
            }
        }
    }
    return label;
}

struct Value {
    Mat b;
    bool closes = false;  // every cable returns to its start
};

inline Value evaluate(const std::vector<int>& word, const Model& m) {
    std::array<int, 4> final_at;
    std::array<int, 4> comp = components(word, final_at);
    Value v;
    v.closes = final_at == std::array<int, 4>{0, 1, 2, 3};
    v.b = identity();
    std::array<int, 4> at{0, 1, 2, 3};
    for (int g : word) {
        int p = std::abs(g) - 1;
        int a = at[p], c = at[p + 1];
        bool up_a = a % 2 == 0, up_c = c % 2 == 0;
        int kind = comp[a] != comp[c] ? 2 : (up_a == up_c ? 0 : 1);
        Mat op = m.diag_ops[kind][g > 0 ? 1 : 0];
        if (p == 1) op = mul(m.s, mul(op, m.s_inv));
        v.b = mul(op, v.b);
        std::swap(at[p], at[p + 1]);
    }
    return v;
}

}  // namespace naive

#endif  // PLATGATE_TESTS_NAIVE_BRAID_HPP
