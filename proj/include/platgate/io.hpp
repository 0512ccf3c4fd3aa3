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

#ifndef PLATGATE_IO_HPP
#define PLATGATE_IO_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "platgate/gates1q.hpp"
#include "platgate/search.hpp"

namespace platgate {

using json = nlohmann::ordered_json;

/// Values below this magnitude are printed as 0.
inline constexpr double kPrintFloor = 1e-12;

/// 12 significant digits, "%.12g".
inline std::string format_number(double x) {
    if (std::abs(x) < kPrintFloor) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// The double that format_number prints.
inline double round12(double x) { return std::stod(format_number(x)); }

inline json complex_json(complex z) { return json::array({round12(z.real()), round12(z.imag())}); }

template <class Matrix>
json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(complex(m(i, j))));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json matrices_json(const OneQubitSet& one, const CableSet* cable) {
    json doc;
    doc["k"] = one.params.level();
    doc["N"] = one.params.rank();
    doc["q"] = complex_json(one.params.q());
    doc["A"] = complex_json(one.params.a());
    doc["one_qubit"] = {{"S", matrix_json(one.s)},
                        {"T", matrix_json(one.t)},
                        {"Sbar", matrix_json(one.sbar)},
                        {"Tbar", matrix_json(one.tbar)}};
    if (cable != nullptr) {
        doc["cable"] = {{"R", matrix_json(cable->r)},
                        {"S", matrix_json(cable->mixing)},
                        {"S_inverse", matrix_json(cable->mixing_inverse)},
                        {"T", matrix_json(cable->t_parallel)},
                        {"Tbar", matrix_json(cable->t_antiparallel)},
                        {"Ti", matrix_json(cable->t_different)}};
    }
    return doc;
}

inline json eval_json(const TheoryParams& params, const BraidWord& word, EvalMode mode, const EvalResult& r,
                      const DiagonalGate* gate) {
    json doc;
    doc["k"] = params.level();
    doc["N"] = params.rank();
    doc["word"] = word_to_ints(word);
    doc["mode"] = mode == EvalMode::Gate ? "gate" : "invariant";
    doc["length"] = word.size();
    doc["P"] = round12(r.probability);
    doc["phi"] = round12(r.phi);
    doc["phi_over_pi"] = round12(r.phi / std::numbers::pi);
    doc["leakage"] = round12(r.leakage);
    doc["amplitude"] = complex_json(r.amplitude);
    json kinds = json::array();
    for (auto k : r.kinds) kinds.push_back(to_string(k));
    doc["kinds"] = std::move(kinds);
    doc["B"] = matrix_json(r.b);
    if (gate != nullptr) {
        json entries = json::array();
        for (auto g : gate->entries) entries.push_back(complex_json(g));
        doc["gate"] = {{"entries", std::move(entries)}, {"case_iv_leakage", round12(gate->case_iv_leakage)}};
    }
    return doc;
}

/// Reads {"k": .., "N": .., "word": [..]}; N defaults to 2.
struct WordRequest {
    int k = 0;
    int n = 2;
    BraidWord word;
};

inline WordRequest parse_word_request(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("word")) {
        throw InvalidInput("JSON word request needs fields \"k\" and \"word\"");
    }
    try {
        WordRequest req;
        req.k = doc.at("k").get<int>();
        req.n = doc.value("N", 2);
        req.word = word_from_ints(doc.at("word").get<std::vector<int>>());
        return req;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad JSON word request: ") + e.what());
    }
}

inline std::string word_request_json(const TheoryParams& params, const BraidWord& word) {
    json doc;
    doc["k"] = params.level();
    doc["N"] = params.rank();
    doc["word"] = word_to_ints(word);
    return doc.dump();
}

inline std::string candidates_csv(const TheoryParams& params, const std::vector<Candidate>& cands) {
    std::string out = "k,N,word,length,P,phi_over_pi\n";
    for (const auto& c : cands) {
        out += std::to_string(params.level()) + "," + std::to_string(params.rank()) + "," + format_word(c.word) + "," +
               std::to_string(c.length) + "," + format_number(c.probability) + "," +
               format_number(c.phi / std::numbers::pi) + "\n";
    }
    return out;
}

inline json candidates_json(const TheoryParams& params, const std::vector<Candidate>& cands) {
    json arr = json::array();
    for (const auto& c : cands) {
        arr.push_back({{"k", params.level()},
                       {"N", params.rank()},
                       {"word", word_to_ints(c.word)},
                       {"length", c.length},
                       {"P", round12(c.probability)},
                       {"phi", round12(c.phi)},
                       {"phi_over_pi", round12(c.phi / std::numbers::pi)}});
    }
    return arr;
}

}  // namespace platgate

#endif  // PLATGATE_IO_HPP
