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

#ifndef PLATGATE_FUSION_HPP
#define PLATGATE_FUSION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "platgate/errors.hpp"

namespace platgate {

/// Irreducible SU(N) representation as a reduced Young diagram: weakly
/// decreasing positive rows, at most N-1 of them (full columns removed).
class RepLabel {
   public:
    RepLabel() = default;

    /// Reduces `rows` for SU(n). Throws InvalidLabel on a negative or
    /// increasing row list, or more than n rows.
    static RepLabel from_rows(std::vector<int> rows, int n) {
        check_rank(n);
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] < 0 || (i > 0 && rows[i] > rows[i - 1])) {
                throw InvalidLabel("partition rows must be weakly decreasing and nonnegative");
            }
        }
        if (static_cast<int>(rows.size()) > n) {
            throw InvalidLabel("partition has more than N=" + std::to_string(n) + " rows");
        }
        if (static_cast<int>(rows.size()) == n) {
            int full = rows.back();
            for (auto& r : rows) r -= full;
            while (!rows.empty() && rows.back() == 0) rows.pop_back();
        }
        RepLabel l;
        l.rows_ = std::move(rows);
        return l;
    }

    static RepLabel trivial() { return {}; }
    static RepLabel fundamental(int n) { return from_rows({1}, n); }
    static RepLabel antifundamental(int n) { return from_rows(std::vector<int>(n - 1, 1), n); }
    static RepLabel adjoint(int n) {
        std::vector<int> rows(n - 1, 1);
        rows[0] = 2;
        return from_rows(rows, n);
    }
    /// SU(2) spin-2 representation [4].
    static RepLabel four_box() { return from_rows({4}, 2); }

    const std::vector<int>& rows() const { return rows_; }
    int boxes() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }
    bool is_trivial() const { return rows_.empty(); }

    std::string to_string() const {
        if (rows_.empty()) return "[]";
        std::string s = "[";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rows_[i]);
        }
        return s + "]";
    }

    auto operator<=>(const RepLabel&) const = default;

    static void check_rank(int n) {
        if (n < 2) throw InvalidLabel("SU(N) needs N >= 2, got " + std::to_string(n));
    }

   private:
    std::vector<int> rows_;
};

using Multiplicity = std::int64_t;
using RepMultiset = std::map<RepLabel, Multiplicity>;

/// Weyl dimension of an SU(n) irrep, exact.
inline std::int64_t weyl_dimension(const RepLabel& label, int n) {
    RepLabel::check_rank(n);
    std::vector<std::int64_t> l(static_cast<std::size_t>(n), 0);
    std::copy(label.rows().begin(), label.rows().end(), l.begin());
    // Product of (l_i - l_j + j - i) / (j - i), accumulated as an exact ratio.
    __int128 num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)] + (j - i);
            den *= j - i;
            __int128 g = std::gcd(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
            num /= g;
            den /= g;
        }
    }
    return static_cast<std::int64_t>(num / den);
}

namespace detail {

// Littlewood-Richardson: fill the boxes of `mu` into `lambda`, label j as a
// horizontal strip of mu[j] boxes, keeping at most n rows; then check the
// reverse reading word is a lattice word.
struct LrFiller {
    const std::vector<int>& mu;
    int n;
    std::map<std::vector<int>, Multiplicity>& out;
    std::vector<int> shape;
    // added[r][j] = boxes labeled j in row r
    std::vector<std::vector<int>> added;

    void place_label(std::size_t j) {
        if (j == mu.size()) {
            if (lattice_ok()) ++out[shape];
            return;
        }
        std::vector<int> before = shape;
        before.resize(static_cast<std::size_t>(n), 0);
        shape.resize(static_cast<std::size_t>(n), 0);
        added.resize(static_cast<std::size_t>(n), std::vector<int>(mu.size(), 0));
        distribute(j, 0, mu[j], before);
        shape = trim(shape);
    }

    // Distributes `left` boxes of label j over rows r.. so the new boxes form
    // a horizontal strip over `before` and no two label-j boxes share a column.
    void distribute(std::size_t j, std::size_t r, int left, const std::vector<int>& before) {
        if (r == static_cast<std::size_t>(n)) {
            if (left == 0) {
                std::vector<int> saved = shape;
                shape = trim(shape);
                place_label(j + 1);
                shape = saved;
            }
            return;
        }
        int cap = r == 0 ? left : std::min(left, before[r - 1] - before[r]);
        // Labels in row r must sit strictly below smaller labels above; the
        // strip condition against `before` enforces column strictness.
        for (int a = cap; a >= 0; --a) {
            shape[r] = before[r] + a;
            added[r][j] = a;
            distribute(j, r + 1, left - a, before);
        }
        shape[r] = before[r];
        added[r][j] = 0;
    }

    bool lattice_ok() const {
        std::vector<int> count(mu.size(), 0);
        for (std::size_t r = 0; r < added.size(); ++r) {
            for (std::size_t j = mu.size(); j-- > 0;) {
                count[j] += added[r][j];
                if (j > 0 && count[j] > count[j - 1]) return false;
            }
        }
        return true;
    }

    static std::vector<int> trim(std::vector<int> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }
};

inline RepMultiset littlewood_richardson(const RepLabel& a, const RepLabel& b, int n) {
    std::map<std::vector<int>, Multiplicity> raw;
    LrFiller f{b.rows(), n, raw, a.rows(), {}};
    f.place_label(0);
    RepMultiset out;
    for (const auto& [rows, m] : raw) out[RepLabel::from_rows(rows, n)] += m;
    return out;
}

inline RepMultiset clebsch_gordan(const RepLabel& a, const RepLabel& b) {
    int x = a.boxes(), y = b.boxes();
    RepMultiset out;
    for (int j = 0; j <= std::min(x, y); ++j) out[RepLabel::from_rows({x + y - 2 * j}, 2)] += 1;
    return out;
}

}  // namespace detail

/// Multiplicity-resolved decomposition of a (x) b for SU(n). SU(2) goes
/// through the Clebsch-Gordan chain; everything else through
/// Littlewood-Richardson with N-row truncation and column reduction.
inline RepMultiset tensor_decompose(const RepLabel& a, const RepLabel& b, int n) {
    RepLabel::check_rank(n);
    for (const auto* l : {&a, &b}) {
        if (static_cast<int>(l->rows().size()) >= n) {
            throw InvalidLabel("label " + l->to_string() + " is not reduced for SU(" + std::to_string(n) + ")");
        }
    }
    if (n == 2) return detail::clebsch_gordan(a, b);
    return detail::littlewood_richardson(a, b, n);
}

/// Same product, always via Littlewood-Richardson (used to cross-check SU(2)).
inline RepMultiset tensor_decompose_lr(const RepLabel& a, const RepLabel& b, int n) {
    RepLabel::check_rank(n);
    return detail::littlewood_richardson(a, b, n);
}

/// Multiplicity of the trivial representation in the ordered tensor product
/// of `factors`.
inline Multiplicity trivial_multiplicity(const std::vector<RepLabel>& factors, int n) {
    if (factors.empty()) throw InvalidInput("need at least one tensor factor");
    RepMultiset acc{{factors.front(), 1}};
    for (std::size_t i = 1; i < factors.size(); ++i) {
        RepMultiset next;
        for (const auto& [label, m] : acc) {
            for (const auto& [out, c] : tensor_decompose(label, factors[i], n)) next[out] += m * c;
        }
        acc = std::move(next);
    }
    auto it = acc.find(RepLabel::trivial());
    return it == acc.end() ? 0 : it->second;
}

/// Parses a factor label: "V"/"fund", "Vbar"/"antifund", "adj", "1"/"trivial",
/// "four" (SU(2) [4]), or an explicit partition such as "[2,1]".
inline RepLabel parse_label(std::string_view token, int n) {
    std::string t(token);
    if (t == "V" || t == "fund" || t == "[1]") return RepLabel::fundamental(n);
    if (t == "Vbar" || t == "antifund") return RepLabel::antifundamental(n);
    if (t == "adj") return RepLabel::adjoint(n);
    if (t == "trivial" || t == "1" || t == "[]") return RepLabel::trivial();
    if (t == "four") {
        if (n != 2) throw InvalidLabel("'four' names the SU(2) representation [4]");
        return RepLabel::four_box();
    }
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
        std::vector<int> rows;
        std::stringstream ss(t.substr(1, t.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                rows.push_back(std::stoi(item, &used));
                if (used != item.size()) throw InvalidLabel("bad partition '" + t + "'");
            } catch (const std::logic_error&) {
                throw InvalidLabel("bad partition '" + t + "'");
            }
        }
        return RepLabel::from_rows(rows, n);
    }
    throw InvalidLabel("unknown representation label '" + t + "'");
}

inline std::vector<RepLabel> parse_pattern(std::string_view pattern, int n) {
    std::vector<RepLabel> out;
    std::istringstream in{std::string(pattern)};
    std::string tok;
    while (in >> tok) out.push_back(parse_label(tok, n));
    if (out.empty()) throw InvalidInput("empty factor pattern");
    return out;
}

namespace detail {

inline void partitions(int m, int max_part, int max_rows, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = std::min(m, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(m - p, p, max_rows, cur, out);
        cur.pop_back();
    }
}

inline std::uint64_t standard_tableaux(const std::vector<int>& lambda) {
    int m = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::uint64_t num = 1;
    for (int i = 2; i <= m; ++i) num *= static_cast<std::uint64_t>(i);
    std::uint64_t hooks = 1;
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            int below = 0;
            for (std::size_t rr = r + 1; rr < lambda.size() && lambda[rr] > c; ++rr) ++below;
            hooks *= static_cast<std::uint64_t>(lambda[r] - c + below);
        }
    }
    return num / hooks;
}

}  // namespace detail

/// Sum over partitions of m with at most n rows of (f^lambda)^2, with f^lambda
/// from the hook-length formula. Counts invariants of (V (x) Vbar)^m.
inline std::uint64_t schur_weyl_oracle(int m, int n) {
    if (m < 0 || m > 8) throw InvalidInput("schur_weyl_oracle supports 0 <= m <= 8");
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    detail::partitions(m, m, n, cur, parts);
    std::uint64_t total = 0;
    for (const auto& p : parts) {
        std::uint64_t f = detail::standard_tableaux(p);
        total += f * f;
    }
    return total;
}

}  // namespace platgate

#endif  // PLATGATE_FUSION_HPP
