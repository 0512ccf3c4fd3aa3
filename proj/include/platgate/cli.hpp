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

#ifndef PLATGATE_CLI_HPP
#define PLATGATE_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "platgate/fusion.hpp"
#include "platgate/io.hpp"

namespace platgate::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInputError = 2,
    kDegenerate = 3,
    kNonIdentity = 4,
};

struct RunConfig {
    std::string subcommand;
    int k = 0;
    int n = 2;
    std::string word_text;
    std::string word_file;
    std::string json_text;
    std::string json_file;
    bool invariant = false;
    std::string format;
    std::string output;
    double degeneracy_threshold = kDegeneracyThreshold;
    // search budget
    std::string mode = "auto";
    int max_syllables = 6;
    int max_exponent = 6;
    int max_length = 20;
    double p_min = 0.99;
    double phi_min_pi = 0.1;
    std::size_t top_n = 20;
    // fusion-count
    std::string pattern;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string complex_text(complex z) {
    double re = std::abs(z.real()) < kPrintFloor ? 0.0 : z.real();
    double im = std::abs(z.imag()) < kPrintFloor ? 0.0 : z.imag();
    std::string s = format_number(re);
    s += im < 0 ? " - " : " + ";
    s += format_number(std::abs(im)) + "i";
    return s;
}

template <class Matrix>
void matrix_text(std::ostream& out, const std::string& name, const Matrix& m) {
    out << name << ":\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << " ";
        for (Eigen::Index j = 0; j < m.cols(); ++j) out << "  " << complex_text(complex(m(i, j)));
        out << "\n";
    }
}

inline unsigned threads_from_env() {
    const char* v = std::getenv("PLATGATE_THREADS");
    if (v == nullptr || *v == '\0') return 0;
    try {
        int n = std::stoi(v);
        return n < 0 ? 0u : static_cast<unsigned>(n);
    } catch (const std::logic_error&) {
        throw InvalidInput(std::string("PLATGATE_THREADS must be an integer, got '") + v + "'");
    }
}

struct WordInput {
    TheoryParams params;
    BraidWord word;
};

inline BraidWord read_word(const RunConfig& cfg) {
    if (!cfg.word_file.empty()) return parse_word(read_file(cfg.word_file));
    return parse_word(cfg.word_text);
}

inline WordInput read_word_input(const RunConfig& cfg) {
    if (!cfg.json_text.empty() || !cfg.json_file.empty()) {
        WordRequest req = parse_word_request(cfg.json_text.empty() ? read_file(cfg.json_file) : cfg.json_text);
        return {theory_params(req.k, req.n, cfg.degeneracy_threshold), req.word};
    }
    if (cfg.k == 0) throw InvalidInput("--k is required");
    BraidWord word = read_word(cfg);
    return {theory_params(cfg.k, cfg.n, cfg.degeneracy_threshold), word};
}

inline void cmd_matrices(const RunConfig& cfg, std::ostream& out) {
    TheoryParams params = theory_params(cfg.k, cfg.n, cfg.degeneracy_threshold);
    OneQubitSet one = one_qubit_matrices(params);
    std::optional<CableSet> cable;
    if (params.rank() == 2) cable = cable_matrices(params);
    if (cfg.format == "text") {
        out << "k = " << params.level() << ", N = " << params.rank() << "\n";
        out << "q = " << complex_text(params.q()) << "\nA = " << complex_text(params.a()) << "\n";
        matrix_text(out, "S", one.s);
        matrix_text(out, "T", one.t);
        matrix_text(out, "Sbar", one.sbar);
        matrix_text(out, "Tbar", one.tbar);
        if (cable) {
            matrix_text(out, "R", cable->r);
            matrix_text(out, "S (cable)", cable->mixing);
            matrix_text(out, "S^-1 (cable)", cable->mixing_inverse);
            matrix_text(out, "T = q^-4 R", cable->t_parallel);
            matrix_text(out, "Tbar = R", cable->t_antiparallel);
            matrix_text(out, "Ti = q^-8 R", cable->t_different);
        }
        return;
    }
    if (cfg.format != "json") throw InvalidInput("matrices supports --format json|text");
    out << matrices_json(one, cable ? &*cable : nullptr).dump(2) << "\n";
}

inline void cmd_eval(const RunConfig& cfg, std::ostream& out) {
    WordInput in = read_word_input(cfg);
    CableSet set = cable_matrices(in.params);
    EvalMode mode = cfg.invariant ? EvalMode::Invariant : EvalMode::Gate;
    EvalResult r = evaluate_braid(in.word, set, mode);
    std::optional<DiagonalGate> gate;
    if (mode == EvalMode::Gate) gate = two_qubit_gate(in.word, set);
    if (cfg.format == "json") {
        out << eval_json(in.params, in.word, mode, r, gate ? &*gate : nullptr).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << candidates_csv(in.params, {Candidate{in.word, r.probability, r.phi, static_cast<int>(in.word.size())}});
    } else if (cfg.format == "text") {
        out << "word: " << format_word(in.word) << "\n";
        out << "P = " << format_number(r.probability) << "\n";
        out << "phi = " << format_number(r.phi / std::numbers::pi) << " pi\n";
        out << "leakage = " << format_number(r.leakage) << "\n";
        out << "kinds:";
        for (auto kd : r.kinds) out << " " << to_string(kd);
        out << "\n";
        matrix_text(out, "B", r.b);
        if (gate) {
            out << "gate diagonal:";
            for (auto g : gate->entries) out << "  " << complex_text(g);
            out << "\n";
        }
    } else {
        throw InvalidInput("eval supports --format json|csv|text");
    }
}

inline void cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    SearchConfig sc{theory_params(cfg.k, cfg.n, cfg.degeneracy_threshold)};
    sc.max_syllables = cfg.max_syllables;
    sc.max_abs_exponent = cfg.max_exponent;
    sc.max_length = cfg.max_length;
    sc.p_min = cfg.p_min;
    sc.phi_min = cfg.phi_min_pi * std::numbers::pi;
    sc.top_n = cfg.top_n;
    sc.workers = threads_from_env();
    SearchResult result;
    if (cfg.mode == "auto") {
        sc.mode = SearchMode::EvenSyllable;
        result = search_with_fallback(sc, cfg.max_length).result;
    } else if (cfg.mode == "even") {
        sc.mode = SearchMode::EvenSyllable;
        result = search_entangling(sc);
    } else if (cfg.mode == "general") {
        sc.mode = SearchMode::General;
        result = search_entangling(sc);
    } else {
        throw InvalidInput("--mode must be even, general or auto");
    }
    if (result.status == SearchStatus::NoCandidates) err << "no candidates passed the filters\n";
    if (cfg.format == "csv") {
        out << candidates_csv(sc.params, result.candidates);
    } else if (cfg.format == "json") {
        out << candidates_json(sc.params, result.candidates).dump(2) << "\n";
    } else {
        throw InvalidInput("search supports --format csv|json");
    }
}

inline void cmd_fusion(const RunConfig& cfg, std::ostream& out) {
    std::vector<RepLabel> factors = parse_pattern(cfg.pattern, cfg.n);
    Multiplicity m = trivial_multiplicity(factors, cfg.n);
    if (cfg.format == "json") {
        json doc;
        doc["N"] = cfg.n;
        doc["pattern"] = cfg.pattern;
        doc["trivial_multiplicity"] = m;
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "text") {
        out << m << "\n";
    } else {
        throw InvalidInput("fusion-count supports --format text|json");
    }
}

inline void cmd_render(const RunConfig& cfg, std::ostream& out) { out << render_ascii(read_word(cfg)); }

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"platgate: braid gates for cabled anyons on a 4-plat"};
    app.name("platgate");
    app.require_subcommand(1, 1);

    auto add_params = [&](CLI::App* sub, bool need_k) {
        auto* opt = sub->add_option("--k", cfg.k, "Chern-Simons level k");
        if (need_k) opt->required();
        sub->add_option("--n", cfg.n, "rank N of SU(N)")->capture_default_str();
        sub->add_option("--degeneracy-threshold", cfg.degeneracy_threshold,
                        "minimum |[m]_q| accepted in denominators")
            ->capture_default_str();
    };
    auto add_word = [&](CLI::App* sub) {
        sub->add_option("--word", cfg.word_text, "braid word, e.g. \"2 2 -1 -1\"");
        sub->add_option("--word-file", cfg.word_file, "file holding a braid word");
    };

    auto* matrices = app.add_subcommand("matrices", "dump one-qubit and cable matrices");
    add_params(matrices, true);
    matrices->add_option("--format", cfg.format, "json|text (default json)");

    auto* eval = app.add_subcommand("eval", "evaluate a braid word");
    add_params(eval, false);
    add_word(eval);
    eval->add_option("--json", cfg.json_text, "request {\"k\":26,\"N\":2,\"word\":[2,2,-1,-1]}");
    eval->add_option("--json-file", cfg.json_file, "file holding a JSON request");
    eval->add_flag("--invariant", cfg.invariant, "accept words that permute the cables");
    eval->add_option("--format", cfg.format, "json|csv|text (default json)");

    auto* search = app.add_subcommand("search", "search for high-fidelity entangling braids");
    add_params(search, true);
    search->add_option("--mode", cfg.mode, "even|general|auto")->capture_default_str();
    search->add_option("--max-syllables", cfg.max_syllables)->capture_default_str();
    search->add_option("--max-exponent", cfg.max_exponent)->capture_default_str();
    search->add_option("--max-length", cfg.max_length)->capture_default_str();
    search->add_option("--p-min", cfg.p_min)->capture_default_str();
    search->add_option("--phi-min-pi", cfg.phi_min_pi, "minimum |phi| in units of pi")->capture_default_str();
    search->add_option("--top", cfg.top_n, "number of candidates kept (0 = all)")->capture_default_str();
    search->add_option("--format", cfg.format, "csv|json (default csv)");

    auto* fusion = app.add_subcommand("fusion-count", "multiplicity of the trivial rep in a tensor product");
    fusion->add_option("--n", cfg.n, "rank N of SU(N)")->capture_default_str();
    fusion->add_option("--pattern", cfg.pattern, "factors, e.g. \"adj adj adj adj\" or \"V Vbar V Vbar\"")
        ->required();
    fusion->add_option("--format", cfg.format, "text|json (default text)");

    auto* render = app.add_subcommand("render", "draw a braid word as ASCII");
    add_word(render);

    for (auto* sub : {matrices, eval, search, fusion, render}) {
        sub->add_option("--output", cfg.output, "write the result to this file");
    }

    std::vector<std::string> argv_store{"platgate"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.format.empty()) {
        cfg.format = cfg.subcommand == "search" ? "csv" : cfg.subcommand == "fusion-count" ? "text" : "json";
    }

    std::ostringstream buffer;
    try {
        if (cfg.subcommand == "matrices") {
            detail::cmd_matrices(cfg, buffer);
        } else if (cfg.subcommand == "eval") {
            detail::cmd_eval(cfg, buffer);
        } else if (cfg.subcommand == "search") {
            detail::cmd_search(cfg, buffer, err);
        } else if (cfg.subcommand == "fusion-count") {
            detail::cmd_fusion(cfg, buffer);
        } else {
            detail::cmd_render(cfg, buffer);
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const DegenerateParams& e) {
        err << "DegenerateParams: " << e.what() << "\n";
        return kDegenerate;
    } catch (const NegativeRadicand& e) {
        err << "NegativeRadicand: " << e.what() << "\n";
        return kDegenerate;
    } catch (const BranchInconsistency& e) {
        err << "BranchInconsistency: " << e.what() << "\n";
        return kDegenerate;
    } catch (const NonIdentityPermutation& e) {
        err << "NonIdentityPermutation: " << e.what() << "\n";
        return kNonIdentity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }

    if (cfg.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.output);
        if (!file) {
            err << "error: cannot write '" << cfg.output << "'\n";
            return kInputError;
        }
        file << buffer.str();
    }
    return kOk;
}

}  // namespace platgate::cli

#endif  // PLATGATE_CLI_HPP
