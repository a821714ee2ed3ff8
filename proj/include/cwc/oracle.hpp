// oracle.hpp -- exact A_q(n,d,w) on tiny instances: exhaustive enumeration of
// weight-w words and branch-and-bound maximum clique over the compatibility
// graph (edges join word pairs at Hamming distance >= d).

#pragma once

#include "cwc/bounds.hpp"
#include "cwc/combi.hpp"
#include "cwc/core.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace cwc {

inline long long weight_w_word_count(const CodeParams& p) {
    long long c = 1;
    for (int i = 1; i <= p.w; ++i) c = c * (p.n - p.w + i) / i;
    for (int i = 0; i < p.w; ++i) {
        c *= p.q - 1;
        if (c > (1LL << 40)) return c;  // already far past any sane cap
    }
    return c;
}

// All C(n,w)(q-1)^w weight-w words in (support, values) lex order.
inline std::vector<CodeWord> enumerate_all_words(const CodeParams& p, long long cap = 200000) {
    if (weight_w_word_count(p) > cap)
        throw std::runtime_error("enumerate_all_words: word count exceeds cap");
    std::vector<CodeWord> out;
    int m = p.q - 1;
    auto S = first_subset(p.n, p.w);
    do {
        std::vector<int> vals(static_cast<size_t>(p.w), 1);
        while (true) {
            CodeWord x(std::vector<int>(static_cast<size_t>(p.n), 0));
            for (int i = 0; i < p.w; ++i) x[S[static_cast<size_t>(i)] - 1] = vals[static_cast<size_t>(i)];
            out.push_back(std::move(x));
            int i = p.w - 1;
            while (i >= 0 && vals[static_cast<size_t>(i)] == m) vals[static_cast<size_t>(i--)] = 1;
            if (i < 0) break;
            ++vals[static_cast<size_t>(i)];
        }
    } while (next_subset(S, p.n));
    return out;
}

struct OracleResult {
    int value = 0;            // exact max code size when exhausted, else a lower bound
    Code witness;
    std::uint64_t nodes_explored = 0;
    bool exhausted = false;
};

namespace detail {

// Fixed-width bitset rows for the compatibility graph.
struct BitGraph {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> adj;  // n rows of `words` limbs

    explicit BitGraph(int n_) : n(n_), words((n_ + 63) / 64), adj(static_cast<size_t>(n_) * static_cast<size_t>(words), 0) {}

    std::uint64_t* row(int v) { return adj.data() + static_cast<size_t>(v) * static_cast<size_t>(words); }
    const std::uint64_t* row(int v) const { return adj.data() + static_cast<size_t>(v) * static_cast<size_t>(words); }

    void add_edge(int a, int b) {
        row(a)[b >> 6] |= 1ULL << (b & 63);
        row(b)[a >> 6] |= 1ULL << (a & 63);
    }
    bool has_edge(int a, int b) const { return (row(a)[b >> 6] >> (b & 63)) & 1; }
    int degree(int v) const {
        int d = 0;
        for (int i = 0; i < words; ++i) d += std::popcount(row(v)[static_cast<size_t>(i)]);
        return d;
    }
};

// Bitset branch-and-bound with greedy sequential coloring, on vertices
// relabelled by the root order.
struct CliqueSearch {
    const BitGraph& g;
    int nw;  // limbs per bitset
    // Pigeonhole counting bound: vertex -> its (t-set, value-pattern) key ids;
    // no two clique members may share a key, and each consumes keys_per_word.
    std::vector<std::vector<int>> vertex_keys;
    int keys_per_word = 1;
    std::vector<int> key_stamp;
    int stamp = 0;
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;
    bool aborted = false;
    int stop_at;  // provable upper bound; reaching it ends the search exactly
    bool done = false;
    std::vector<int> best;
    std::vector<int> current;

    CliqueSearch(const BitGraph& g_, std::uint64_t limit, int stop)
        : g(g_), nw(g_.words), node_limit(limit), stop_at(stop) {}

    static bool test_bit(const std::uint64_t* s, int v) { return (s[v >> 6] >> (v & 63)) & 1; }
    static void clear_bit(std::uint64_t* s, int v) { s[v >> 6] &= ~(1ULL << (v & 63)); }
    bool empty(const std::uint64_t* s) const {
        for (int i = 0; i < nw; ++i)
            if (s[i]) return false;
        return true;
    }

    // floor(#distinct keys among P / keys per word): max words addable to R
    int counting_bound(const std::uint64_t* P) {
        ++stamp;
        int distinct = 0;
        for (int i = 0; i < nw; ++i) {
            std::uint64_t limb = P[i];
            while (limb) {
                int v = i * 64 + std::countr_zero(limb);
                limb &= limb - 1;
                for (int k : vertex_keys[static_cast<size_t>(v)])
                    if (key_stamp[static_cast<size_t>(k)] != stamp) {
                        key_stamp[static_cast<size_t>(k)] = stamp;
                        ++distinct;
                    }
            }
        }
        return distinct / keys_per_word;
    }

    void expand(std::uint64_t* P, std::vector<std::uint64_t>& scratch, int depth) {
        if (aborted || done) return;
        if (++nodes > node_limit) { aborted = true; return; }

        if (current.size() + static_cast<size_t>(counting_bound(P)) <= best.size()) return;

        // Greedy sequential coloring with MCS-style recoloring: a vertex that
        // would land above the pruning threshold is swapped into a low class
        // when a single-conflict exchange permits it.
        std::vector<int> order, bound;
        {
            int threshold = static_cast<int>(best.size()) - static_cast<int>(current.size());
            std::vector<std::vector<std::uint64_t>> classes;
            std::vector<std::vector<int>> members;
            auto fits = [&](int cls, const std::uint64_t* nbrs) {
                const std::uint64_t* cb = classes[static_cast<size_t>(cls)].data();
                for (int i = 0; i < nw; ++i)
                    if (cb[i] & nbrs[i]) return false;
                return true;
            };
            auto put = [&](int cls, int v) {
                classes[static_cast<size_t>(cls)][static_cast<size_t>(v >> 6)] |= 1ULL << (v & 63);
                members[static_cast<size_t>(cls)].push_back(v);
            };
            for (int i = 0; i < nw; ++i) {
                std::uint64_t limb = P[i];
                while (limb) {
                    int v = i * 64 + std::countr_zero(limb);
                    limb &= limb - 1;
                    const std::uint64_t* nv = g.row(v);
                    int c = 0;
                    while (c < static_cast<int>(classes.size()) && !fits(c, nv)) ++c;
                    if (c == static_cast<int>(classes.size())) {
                        classes.emplace_back(static_cast<size_t>(nw), 0);
                        members.emplace_back();
                    }
                    if (c + 1 > threshold && threshold > 1) {
                        // try to re-color: class c1 with a single neighbor u of
                        // v, and a later class c2 < threshold that accepts u
                        bool moved = false;
                        for (int c1 = 0; c1 + 1 < threshold && !moved; ++c1) {
                            int u = -1, cnt = 0;
                            for (int k = 0; k < nw && cnt < 2; ++k) {
                                std::uint64_t inter = classes[static_cast<size_t>(c1)][static_cast<size_t>(k)] & nv[k];
                                while (inter && cnt < 2) {
                                    u = k * 64 + std::countr_zero(inter);
                                    inter &= inter - 1;
                                    ++cnt;
                                }
                            }
                            if (cnt != 1) continue;
                            const std::uint64_t* nu = g.row(u);
                            for (int c2 = c1 + 1; c2 < threshold && c2 < static_cast<int>(classes.size()); ++c2) {
                                if (!fits(c2, nu)) continue;
                                // move u from c1 to c2, put v in c1
                                classes[static_cast<size_t>(c1)][static_cast<size_t>(u >> 6)] &= ~(1ULL << (u & 63));
                                auto& mem = members[static_cast<size_t>(c1)];
                                mem.erase(std::find(mem.begin(), mem.end(), u));
                                put(c2, u);
                                put(c1, v);
                                moved = true;
                                break;
                            }
                        }
                        if (moved) continue;
                    }
                    put(c, v);
                }
            }
            for (size_t c = 0; c < members.size(); ++c)
                for (int v : members[c]) {
                    order.push_back(v);
                    bound.push_back(static_cast<int>(c) + 1);
                }
        }

        std::uint64_t* child = scratch.data() + static_cast<size_t>(depth) * nw;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (current.size() + static_cast<size_t>(bound[static_cast<size_t>(i)]) <= best.size())
                return;
            int v = order[static_cast<size_t>(i)];
            const std::uint64_t* nv = g.row(v);
            for (int k = 0; k < nw; ++k) child[k] = P[k] & nv[k];
            current.push_back(v);
            if (empty(child)) {
                if (current.size() > best.size()) {
                    best = current;
                    if (static_cast<int>(best.size()) >= stop_at) done = true;
                }
            } else {
                expand(child, scratch, depth + 1);
            }
            current.pop_back();
            clear_bit(P, v);
            if (aborted || done) return;
        }
    }
};

}  // namespace detail

// Branch-and-bound maximum clique; deterministic for a fixed enumeration
// order.  When the node limit is hit, `value` is only a lower bound.
inline OracleResult max_code_exact(const CodeParams& p, std::uint64_t node_limit = 100000000ULL,
                                   long long enumeration_cap = 200000) {
    auto all = enumerate_all_words(p, enumeration_cap);
    int n = static_cast<int>(all.size());
    detail::BitGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (hamming_distance(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]) >= p.d)
                g.add_edge(i, j);

    // Root ordering: descending degree, ties by lex word order (= index).
    std::vector<int> verts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<size_t>(i)] = i;
    std::vector<int> deg(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) deg[static_cast<size_t>(i)] = g.degree(i);
    std::stable_sort(verts.begin(), verts.end(),
                     [&](int a, int b) { return deg[static_cast<size_t>(a)] > deg[static_cast<size_t>(b)]; });

    // Relabel by root order so bitset scans follow it.
    detail::BitGraph g2(n);
    std::vector<int> pos(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) pos[static_cast<size_t>(verts[static_cast<size_t>(k)])] = k;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]))
                g2.add_edge(i, j);

    // Theorem-backed cap: no code can exceed the Johnson floor, so reaching
    // it ends the search with an exact answer.
    BigInt jf = johnson_bound(p).floor_value;
    int stop_at = jf > n ? n : static_cast<int>(jf);
    detail::CliqueSearch search(g2, node_limit, stop_at);

    // Per-vertex key lists for the counting bound.  A key pairs a t-subset T
    // of the support with the word's values on T (all t of them when d is
    // odd, the lowest t-1 of them when d is even).  Two distinct words of a
    // valid code can never share a key: agreement on that much of T caps
    // their distance below d.  Each word owns C(w,t) keys.
    {
        int t = p.t();
        std::map<std::vector<int>, int> key_ids;
        search.vertex_keys.assign(static_cast<size_t>(n), {});
        for (int k = 0; k < n; ++k) {
            const CodeWord& word = all[static_cast<size_t>(verts[static_cast<size_t>(k)])];
            std::vector<int> supp = support(word);
            std::vector<int> tset = first_subset(p.w, t);
            do {
                std::vector<int> key;
                key.reserve(static_cast<size_t>(2 * t));
                for (int idx : tset) key.push_back(supp[static_cast<size_t>(idx - 1)]);
                int kept = p.even_d() ? t - 1 : t;
                for (int a = 0; a < kept; ++a)
                    key.push_back(word.entries[static_cast<size_t>(supp[static_cast<size_t>(tset[static_cast<size_t>(a)] - 1)] - 1)]);
                auto [it, ins] = key_ids.emplace(std::move(key), static_cast<int>(key_ids.size()));
                search.vertex_keys[static_cast<size_t>(k)].push_back(it->second);
            } while (next_subset(tset, p.w));
        }
        search.keys_per_word = static_cast<int>(binomial(p.w, t));
        search.key_stamp.assign(key_ids.size(), 0);
    }

    // Multi-start randomized greedy seeds the incumbent (fixed seeds, so the
    // whole search stays deterministic).
    {
        std::vector<int> order(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
        for (std::uint64_t pass = 0; pass < 64; ++pass) {
            if (pass > 0) {
                std::mt19937_64 rng(pass);
                std::shuffle(order.begin(), order.end(), rng);
            }
            std::vector<int> clique;
            for (int v : order) {
                bool ok = true;
                for (int u : clique)
                    if (!g2.has_edge(u, v)) { ok = false; break; }
                if (ok) clique.push_back(v);
            }
            if (clique.size() > search.best.size()) search.best = clique;
        }
    }

    if (static_cast<int>(search.best.size()) < stop_at) {
        int max_depth = n + 2;
        std::vector<std::uint64_t> scratch(static_cast<size_t>(max_depth) * static_cast<size_t>(g2.words));
        std::vector<std::uint64_t> root(static_cast<size_t>(g2.words), 0);
        for (int v = 0; v < n; ++v) root[static_cast<size_t>(v >> 6)] |= 1ULL << (v & 63);
        search.expand(root.data(), scratch, 0);
    }

    OracleResult r;
    r.value = static_cast<int>(search.best.size());
    r.nodes_explored = search.nodes;
    r.exhausted = !search.aborted;
    std::vector<CodeWord> ws;
    for (int v : search.best) ws.push_back(all[static_cast<size_t>(verts[static_cast<size_t>(v)])]);
    std::sort(ws.begin(), ws.end());
    r.witness = Code(p, std::move(ws));
    return r;
}

}  // namespace cwc
