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

#ifndef PLATGATE_SEARCH_HPP
#define PLATGATE_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <queue>
#include <thread>
#include <tuple>
#include <vector>

#include "platgate/plat.hpp"

namespace platgate {

/// Free reduction plus far commutation: adjacent inverse pairs cancel and
/// sigma_3 sigma_1 is rewritten to sigma_1 sigma_3, to a fixpoint.
inline BraidWord canonicalize(const BraidWord& word) {
    std::vector<Generator> w = word.generators;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Generator> stack;
        stack.reserve(w.size());
        for (const auto& g : w) {
            if (!stack.empty() && stack.back() == g.inverse()) {
                stack.pop_back();
                changed = true;
            } else {
                stack.push_back(g);
            }
        }
        w = std::move(stack);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].position == 3 && w[i + 1].position == 1) {
                std::swap(w[i], w[i + 1]);
                changed = true;
            }
        }
    }
    return BraidWord{std::move(w)};
}

enum class SearchMode { EvenSyllable, General };

inline const char* to_string(SearchMode mode) { return mode == SearchMode::EvenSyllable ? "even-syllable" : "general"; }

struct SearchConfig {
    TheoryParams params;
    SearchMode mode = SearchMode::EvenSyllable;
    int max_syllables = 6;
    int max_abs_exponent = 6;  // even-syllable mode
    int max_length = 20;       // general mode
    double p_min = 0.99;
    double phi_min = 0.1 * std::numbers::pi;
    std::size_t top_n = 20;  // 0 keeps every candidate
    unsigned workers = 1;    // 0 = hardware concurrency
    bool prefix_reuse = true;

    void validate() const {
        if (p_min < 0.0 || p_min > 1.0) throw InvalidInput("P_min must lie in [0, 1]");
        if (phi_min < 0.0) throw InvalidInput("phi_min must be >= 0");
        if (mode == SearchMode::EvenSyllable) {
            if (max_syllables < 0) throw InvalidInput("max_syllables must be >= 0");
            if (max_abs_exponent < 2 || max_abs_exponent % 2 != 0) {
                throw InvalidInput("max_abs_exponent must be a positive even integer");
            }
        } else if (max_length < 0) {
            throw InvalidInput("max_length must be >= 0");
        }
    }
};

struct Candidate {
    BraidWord word;
    double probability = 0.0;
    double phi = 0.0;
    int length = 0;
};

enum class SearchStatus { Ok, NoCandidates };

struct SearchResult {
    std::vector<Candidate> candidates;
    SearchStatus status = SearchStatus::NoCandidates;
    std::uint64_t evaluated = 0;
};

namespace detail {

inline std::int64_t probability_key(double p) { return std::llround(p * 1e12); }

/// True if a ranks strictly before b: higher P (to 1e-12), then shorter,
/// then lexicographically smaller word.
inline bool ranks_before(const Candidate& a, const Candidate& b) {
    auto ka = probability_key(a.probability), kb = probability_key(b.probability);
    if (ka != kb) return ka > kb;
    return a.word < b.word;
}

// In gate mode the closure components are the two qubit pairs {0,1} and
// {2,3}; cables of one pair carry opposite orientation.
inline CrossingKind gate_mode_kind(int a, int b) {
    return a / 2 == b / 2 ? CrossingKind::SameComponentAntiparallel : CrossingKind::DifferentComponents;
}

class TopN {
   public:
    explicit TopN(std::size_t n) : n_(n) {}

    bool would_accept(double p, const std::vector<Generator>& word) const {
        if (n_ == 0 || heap_.size() < n_) return true;
        const Candidate& worst = heap_.front();
        auto kp = probability_key(p), kw = probability_key(worst.probability);
        if (kp != kw) return kp > kw;
        if (word.size() != worst.word.size()) return word.size() < worst.word.size();
        return std::lexicographical_compare(word.begin(), word.end(), worst.word.begin(), worst.word.end());
    }

    void push(Candidate c) {
        heap_.push_back(std::move(c));
        if (n_ == 0) return;
        std::push_heap(heap_.begin(), heap_.end(), ranks_before);
        if (heap_.size() > n_) {
            std::pop_heap(heap_.begin(), heap_.end(), ranks_before);
            heap_.pop_back();
        }
    }

    std::vector<Candidate> take() && { return std::move(heap_); }

   private:
    std::size_t n_;
    std::vector<Candidate> heap_;  // max-heap on rank: front is the worst kept
};

/// Depth-first walk over canonical gate-mode words, one task per leading
/// syllable (even-syllable mode) or leading generator (general mode).
class Walker {
   public:
    Walker(const SearchConfig& config, const CrossingTable* table) : config_(config), table_(table) {}

    struct Task {
        Generator first;
        int exponent;  // syllable exponent magnitude; 1 in general mode
    };

    std::vector<Task> tasks() const {
        std::vector<Task> out;
        if (config_.mode == SearchMode::EvenSyllable) {
            if (config_.max_syllables < 1) return out;
            for (int pos = 1; pos <= 3; ++pos) {
                for (int e = -config_.max_abs_exponent; e <= config_.max_abs_exponent; e += 2) {
                    if (e != 0) out.push_back({{pos, e > 0 ? 1 : -1}, std::abs(e)});
                }
            }
        } else if (config_.max_length >= 1) {
            for (int pos = 1; pos <= 3; ++pos) {
                for (int s : {-1, 1}) out.push_back({{pos, s}, 1});
            }
        }
        return out;
    }

    /// Calls visit(word, B) for each emitted word of the task. B is null when
    /// no table was supplied.
    template <class Visit>
    void run(const Task& task, Visit&& visit) {
        word_.clear();
        layout_ = kIdentityLayout;
        Matrix3c b = Matrix3c::Identity();
        if (config_.mode == SearchMode::EvenSyllable) {
            apply_syllable(task.first, task.exponent, b);
            even_dfs(b, 1, visit);
        } else {
            push(task.first, b);
            general_dfs(b, visit);
        }
    }

   private:
    void push(const Generator& g, Matrix3c& b) {
        if (table_ != nullptr) {
            int a = layout_[g.position - 1], c = layout_[g.position];
            b = (*table_)(g.position, gate_mode_kind(a, c), g.sign) * b;
        }
        apply_generator(layout_, g);
        word_.push_back(g);
    }

    void pop(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            apply_generator(layout_, word_.back());
            word_.pop_back();
        }
    }

    void apply_syllable(const Generator& g, int count, Matrix3c& b) {
        for (int i = 0; i < count; ++i) push(g, b);
    }

    template <class Visit>
    void even_dfs(const Matrix3c& b, int syllables, Visit& visit) {
        visit(word_, b);
        if (syllables == config_.max_syllables) return;
        int last = word_.back().position;
        for (int pos = 1; pos <= 3; ++pos) {
            if (pos == last || (last == 3 && pos == 1)) continue;
            for (int e = -config_.max_abs_exponent; e <= config_.max_abs_exponent; e += 2) {
                if (e == 0) continue;
                Matrix3c nb = b;
                apply_syllable({pos, e > 0 ? 1 : -1}, std::abs(e), nb);
                even_dfs(nb, syllables + 1, visit);
                pop(static_cast<std::size_t>(std::abs(e)));
            }
        }
    }

    template <class Visit>
    void general_dfs(const Matrix3c& b, Visit& visit) {
        if (layout_ == kIdentityLayout) visit(word_, b);
        int remaining = config_.max_length - static_cast<int>(word_.size());
        if (remaining == 0) return;
        const Generator last = word_.back();
        for (int pos = 1; pos <= 3; ++pos) {
            if (last.position == 3 && pos == 1) continue;
            for (int s : {-1, 1}) {
                Generator g{pos, s};
                if (g == last.inverse()) continue;
                CableLayout next = layout_;
                apply_generator(next, g);
                if (inversion_count(next) > remaining - 1) continue;
                Matrix3c nb = b;
                push(g, nb);
                general_dfs(nb, visit);
                pop(1);
            }
        }
    }

    const SearchConfig& config_;
    const CrossingTable* table_;
    std::vector<Generator> word_;
    CableLayout layout_ = kIdentityLayout;
};

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

template <class Fn>
void run_tasks(std::size_t count, unsigned workers, Fn&& fn) {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < count;) fn(i);
    };
    unsigned n = std::clamp<unsigned>(resolve_workers(workers), 1u, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
    work();
}

}  // namespace detail

/// Streams every canonical gate-mode word of the configured budget, each
/// exactly once. Even-syllable mode: syllables sigma_i^e with even e and no
/// sigma_3-syllable directly before a sigma_1-syllable. General mode: every
/// reduced word up to max_length that closes to the identity permutation.
inline void enumerate_gate_words(const SearchConfig& config, const std::function<void(const BraidWord&)>& visit) {
    config.validate();
    detail::Walker walker(config, nullptr);
    BraidWord w;
    for (const auto& task : walker.tasks()) {
        walker.run(task, [&](const std::vector<Generator>& word, const Matrix3c&) {
            w.generators = word;
            visit(w);
        });
    }
}

/// Evaluates every enumerated word and keeps the top_n candidates with
/// P >= p_min and |phi| >= phi_min, ranked by P, then length, then word.
/// The result does not depend on the worker count.
inline SearchResult search_entangling(const SearchConfig& config) {
    config.validate();
    const CrossingTable table(cable_matrices(config.params));
    detail::Walker probe(config, nullptr);
    const auto tasks = probe.tasks();

    std::vector<std::vector<Candidate>> parts(tasks.size());
    std::vector<std::uint64_t> counts(tasks.size(), 0);
    detail::run_tasks(tasks.size(), config.workers, [&](std::size_t i) {
        detail::Walker walker(config, config.prefix_reuse ? &table : nullptr);
        detail::TopN top(config.top_n);
        std::uint64_t evaluated = 0;
        walker.run(tasks[i], [&](const std::vector<Generator>& word, const Matrix3c& cached) {
            Matrix3c b;
            if (config.prefix_reuse) {
                b = cached;
            } else {
                b = Matrix3c::Identity();
                CableLayout layout = kIdentityLayout;
                for (const auto& g : word) {
                    int a = layout[g.position - 1], c = layout[g.position];
                    b = table(g.position, detail::gate_mode_kind(a, c), g.sign) * b;
                    apply_generator(layout, g);
                }
            }
            ++evaluated;
            const complex amp = b(0, 0);
            const double p = std::norm(amp);
            const double phi = phase_of(amp);
            if (p < config.p_min || std::abs(phi) < config.phi_min) return;
            if (!top.would_accept(p, word)) return;
            top.push(Candidate{BraidWord{word}, p, phi, static_cast<int>(word.size())});
        });
        parts[i] = std::move(top).take();
        counts[i] = evaluated;
    });

    SearchResult result;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        result.evaluated += counts[i];
        std::move(parts[i].begin(), parts[i].end(), std::back_inserter(result.candidates));
    }
    std::sort(result.candidates.begin(), result.candidates.end(), detail::ranks_before);
    if (config.top_n != 0 && result.candidates.size() > config.top_n) result.candidates.resize(config.top_n);
    result.status = result.candidates.empty() ? SearchStatus::NoCandidates : SearchStatus::Ok;
    return result;
}

struct FallbackSearchResult {
    SearchResult result;
    SearchMode mode = SearchMode::EvenSyllable;
    int general_length = 0;  // length bound that produced the result in general mode
};

/// Runs the configured search; if it finds nothing, runs general mode with
/// max_length = 2, 4, ..., max_general_length and stops at the first bound
/// that yields a candidate.
inline FallbackSearchResult search_with_fallback(SearchConfig config, int max_general_length) {
    FallbackSearchResult out;
    out.mode = config.mode;
    out.result = search_entangling(config);
    if (out.result.status == SearchStatus::Ok) {
        out.general_length = config.mode == SearchMode::General ? config.max_length : 0;
        return out;
    }
    config.mode = SearchMode::General;
    std::uint64_t evaluated = out.result.evaluated;
    for (int len = 2; len <= max_general_length; len += 2) {
        config.max_length = len;
        out.result = search_entangling(config);
        evaluated += out.result.evaluated;
        out.mode = SearchMode::General;
        out.general_length = len;
        if (out.result.status == SearchStatus::Ok) break;
    }
    out.result.evaluated = evaluated;
    return out;
}

}  // namespace platgate

#endif  // PLATGATE_SEARCH_HPP
