// matching.hpp -- the conflict-hypergraph construction: V1/V2 vertex keys per
// word, hash-keyed occupancy (the hypergraph is never materialized), greedy
// maximal matching with restarts, and the even-d / odd-d build pipelines.

#pragma once

#include "cwc/bounds.hpp"
#include "cwc/combi.hpp"
#include "cwc/constraints.hpp"
#include "cwc/core.hpp"
#include "cwc/oracle.hpp"
#include "cwc/rng.hpp"

#include <chrono>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace cwc {

// Vertex keys are encoded as tagged int vectors:
//   V1: {1, i_1, ..., i_{t+1}}            (a (t+1)-subset of [n])
//   V2: {2, i_1, v_1, ..., i_t, v_t}      (t (index, value) pairs, sorted)
using VertexKey = std::vector<int>;

inline std::vector<VertexKey> v1_keys(const CodeWord& x, int t) {
    std::vector<VertexKey> keys;
    for (auto& sub : subsets_of(support(x), t + 1)) {
        VertexKey k;
        k.reserve(sub.size() + 1);
        k.push_back(1);
        k.insert(k.end(), sub.begin(), sub.end());
        keys.push_back(std::move(k));
    }
    return keys;
}

inline std::vector<VertexKey> v2_keys(const CodeWord& x, int t) {
    std::vector<VertexKey> keys;
    for (auto& sub : subsets_of(support(x), t)) {
        VertexKey k;
        k.reserve(2 * sub.size() + 1);
        k.push_back(2);
        for (int i : sub) {
            k.push_back(i);
            k.push_back(x[i - 1]);
        }
        keys.push_back(std::move(k));
    }
    return keys;
}

inline std::vector<VertexKey> all_keys(const CodeWord& x, int t) {
    auto keys = v1_keys(x, t);
    auto k2 = v2_keys(x, t);
    keys.insert(keys.end(), k2.begin(), k2.end());
    return keys;
}

struct KeyHash {
    size_t operator()(const VertexKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : k) h = splitmix64(h ^ static_cast<std::uint64_t>(v));
        return static_cast<size_t>(h);
    }
};

// Occupancy of hypergraph vertices by the matching built so far.  A word is
// admissible iff none of its keys are present.
struct ConflictIndex {
    std::unordered_set<VertexKey, KeyHash> used;

    bool admissible(const std::vector<VertexKey>& keys) const {
        for (const auto& k : keys)
            if (used.count(k)) return false;
        return true;
    }
    void insert(const std::vector<VertexKey>& keys) {
        for (const auto& k : keys) used.insert(k);
    }
    void erase(const std::vector<VertexKey>& keys) {
        for (const auto& k : keys) used.erase(k);
    }
};

// One greedy pass: visit X in a seed-determined random order, keep every
// admissible word.  The result is a maximal matching, hence a valid code.
inline Code greedy_matching(const CandidateFamily& X, std::uint64_t seed) {
    const CodeParams& p = X.params;
    int t = p.t();
    std::vector<int> order(static_cast<size_t>(X.size()));
    for (int i = 0; i < X.size(); ++i) order[static_cast<size_t>(i)] = i;
    Rng rng(splitmix64(seed));
    std::shuffle(order.begin(), order.end(), rng);

    ConflictIndex idx;
    std::vector<CodeWord> picked;
    for (int i : order) {
        const CodeWord& x = X.words[static_cast<size_t>(i)];
        auto keys = all_keys(x, t);
        if (idx.admissible(keys)) {
            idx.insert(keys);
            picked.push_back(x);
        }
    }
    std::sort(picked.begin(), picked.end());
    return Code(p, std::move(picked));
}

struct BuildReport {
    Code code;
    int x_size = 0;
    int restarts_run = 0;
    int best_restart = 0;
    Rational ratio_to_main_term = 0;  // |code| / main term, 0 when d is odd
    std::chrono::milliseconds elapsed{0};
};

namespace detail {

// (1,2)-swap local search: remove one word, try to insert two admissible
// words from X; repeat until a full pass makes no improvement.
inline void improve_code(std::vector<CodeWord>& code, const CandidateFamily& X) {
    int t = X.params.t();
    ConflictIndex idx;
    for (const auto& w : code) idx.insert(all_keys(w, t));

    bool improved = true;
    while (improved) {
        improved = false;
        for (size_t r = 0; r < code.size() && !improved; ++r) {
            auto removed_keys = all_keys(code[r], t);
            idx.erase(removed_keys);
            std::vector<int> free_words;
            for (int i = 0; i < X.size(); ++i) {
                const CodeWord& x = X.words[static_cast<size_t>(i)];
                if (x == code[r]) continue;
                if (idx.admissible(all_keys(x, t))) free_words.push_back(i);
            }
            bool swapped = false;
            for (size_t a = 0; a < free_words.size() && !swapped; ++a) {
                const CodeWord& xa = X.words[static_cast<size_t>(free_words[a])];
                auto ka = all_keys(xa, t);
                idx.insert(ka);
                for (size_t bI = a + 1; bI < free_words.size(); ++bI) {
                    const CodeWord& xb = X.words[static_cast<size_t>(free_words[bI])];
                    if (idx.admissible(all_keys(xb, t))) {
                        code[r] = xa;
                        code.push_back(xb);
                        idx.insert(all_keys(xb, t));
                        swapped = true;
                        improved = true;
                        break;
                    }
                }
                if (!swapped) idx.erase(ka);
            }
            if (!swapped) idx.insert(removed_keys);
        }
    }
    std::sort(code.begin(), code.end());
}

inline BuildReport run_pipeline(const CodeParams& p, const CandidateFamily& X,
                                std::uint64_t seed, int restarts, bool improve) {
    auto start = std::chrono::steady_clock::now();
    BuildReport rep;
    rep.x_size = X.size();
    rep.restarts_run = restarts;

    Code best(p, {});
    std::string best_ser = serialize_code(best);
    for (int r = 0; r < restarts; ++r) {
        Code c = greedy_matching(X, derive_seed(seed, static_cast<std::uint64_t>(r)));
        std::string ser = serialize_code(c);
        if (c.size() > best.size() || (c.size() == best.size() && ser < best_ser)) {
            best = std::move(c);
            best_ser = std::move(ser);
            rep.best_restart = r;
        }
    }
    if (improve) {
        auto words = best.words;
        improve_code(words, X);
        best = Code(p, std::move(words));
    }
    rep.code = std::move(best);
    if (p.even_d()) {
        auto mt = main_term(p);
        rep.ratio_to_main_term = Rational(rep.code.size()) / mt.rational();
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return rep;
}

}  // namespace detail

// Even-d construction: sample B from the seed, enumerate X, run greedy
// restarts (child seed r = derive_seed(seed, r)), keep the largest code with
// lexicographically-smallest-serialization tie-break.
inline BuildReport construct_code(const CodeParams& p, std::uint64_t seed, int restarts = 32,
                                  bool improve = false) {
    if (!p.even_d()) throw std::invalid_argument("construct_code: d must be even");
    BAssignment b = sample_B(p, seed);
    CandidateFamily X = enumerate_X(p, b);
    return detail::run_pipeline(p, X, seed, restarts, improve);
}

// Odd-d construction: X is all weight-w words (no modular constraints), same
// V1/V2 key scheme and greedy pipeline.
inline BuildReport construct_code_odd(const CodeParams& p, std::uint64_t seed, int restarts = 32,
                                      bool improve = false, long long enumeration_cap = 200000) {
    if (p.even_d()) throw std::invalid_argument("construct_code_odd: d must be odd");
    CandidateFamily X;
    X.params = p;
    X.words = enumerate_all_words(p, enumeration_cap);
    return detail::run_pipeline(p, X, seed, restarts, improve);
}

}  // namespace cwc
