// constraints.hpp -- the random modular constraint system: B assignments on
// t-subsets, the sum constraint mod q-1 on every t-subset of a word's support,
// the per-support solver, and the constrained candidate family X.
//
// Representative convention: [q-1] = {1,...,q-1} bijects with residues mod q-1
// via v -> v mod (q-1), so the value q-1 represents residue 0.

#pragma once

#include "cwc/combi.hpp"
#include "cwc/core.hpp"
#include "cwc/rng.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwc {

// v mod (q-1); for q = 2 the modulus is 1 and every residue is 0.
inline int residue(long long v, int q) {
    int m = q - 1;
    int r = static_cast<int>(v % m);
    return r < 0 ? r + m : r;
}

// Value in [q-1] representing a residue class mod q-1 (residue 0 -> q-1).
inline int value_for_residue(int r, int q) {
    int m = q - 1;
    r %= m;
    if (r < 0) r += m;
    return r == 0 ? m : r;
}

// Total map from each t-subset T of [n] to a value in {1,...,q-1}.
struct BAssignment {
    CodeParams params;
    std::vector<std::vector<int>> tsets;  // lex order, canonical
    std::vector<int> values;              // parallel to tsets
    std::optional<std::uint64_t> seed;    // absent when loaded from file
    std::map<std::vector<int>, int> lookup;

    int value_of(const std::vector<int>& t_subset) const {
        auto it = lookup.find(t_subset);
        if (it == lookup.end())
            throw std::invalid_argument("BAssignment: unknown t-subset");
        return it->second;
    }

    int residue_of(const std::vector<int>& t_subset) const {
        return residue(value_of(t_subset), params.q);
    }

    void rebuild_lookup() {
        lookup.clear();
        for (size_t i = 0; i < tsets.size(); ++i) lookup[tsets[i]] = values[i];
    }
};

// Independent uniform draws from {1,...,q-1} per t-subset, in canonical
// t-subset order, from a single mt19937_64 stream seeded by `seed`.
inline BAssignment sample_B(const CodeParams& p, std::uint64_t seed) {
    BAssignment b;
    b.params = p;
    b.seed = seed;
    int t = p.t();
    Rng rng(splitmix64(seed));
    auto s = first_subset(p.n, t);
    do {
        b.tsets.push_back(s);
        b.values.push_back(p.q == 2 ? 1 : uniform_int(rng, 1, p.q - 1));
    } while (next_subset(s, p.n));
    b.rebuild_lookup();
    return b;
}

// True iff sum_{i in T} x_i = B_T (mod q-1) for every t-subset T of supp(x).
inline bool check_constraints(const CodeWord& x, const BAssignment& b) {
    const CodeParams& p = b.params;
    if (weight(x) != p.w)
        throw std::invalid_argument("check_constraints: weight(x) != w");
    auto supp = support(x);
    for (const auto& T : subsets_of(supp, p.t())) {
        long long sum = 0;
        for (int i : T) sum += x[i - 1];
        if (residue(sum, p.q) != b.residue_of(T)) return false;
    }
    return true;
}

// All words with support S (|S| = w) satisfying every B constraint, in value
// lex order.  Avoids the (q-1)^w scan: for w > t the entries are pinned to an
// anchor residue via single-swap constraint pairs, leaving at most q-1
// candidates; for w = t the first t-1 entries are free and the last is forced.
inline std::vector<CodeWord> words_on_support(const std::vector<int>& S, const BAssignment& b) {
    const CodeParams& p = b.params;
    int w = p.w, t = p.t(), m = p.q - 1;
    if (static_cast<int>(S.size()) != w)
        throw std::invalid_argument("words_on_support: |S| != w");
    std::vector<CodeWord> out;

    auto emit = [&](const std::vector<int>& vals) {
        CodeWord x(std::vector<int>(static_cast<size_t>(p.n), 0));
        for (int i = 0; i < w; ++i) x[S[static_cast<size_t>(i)] - 1] = vals[static_cast<size_t>(i)];
        out.push_back(std::move(x));
    };

    if (w == t) {
        // Single constraint sum_S x_i = B_S: first t-1 entries free, last forced.
        int target = b.residue_of(S);
        std::vector<int> vals(static_cast<size_t>(w), 1);
        while (true) {
            long long partial = 0;
            for (int i = 0; i < w - 1; ++i) partial += vals[static_cast<size_t>(i)];
            vals[static_cast<size_t>(w - 1)] = value_for_residue(target - residue(partial, p.q), p.q);
            emit(vals);
            int i = w - 2;
            while (i >= 0 && vals[static_cast<size_t>(i)] == m) vals[static_cast<size_t>(i--)] = 1;
            if (i < 0) break;
            ++vals[static_cast<size_t>(i)];
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // w > t: derive each entry's residue offset from the anchor S[0].  For
    // index i != S[0], pick a t-subset T with S[0], without S[i]; swapping
    // S[0] -> S[i] gives x_i - x_{S[0]} = B_{T'} - B_T (mod q-1).
    std::vector<int> delta(static_cast<size_t>(w), 0);
    for (int i = 1; i < w; ++i) {
        std::vector<int> T;
        T.push_back(S[0]);
        for (int j = 1; j < w && static_cast<int>(T.size()) < t; ++j)
            if (j != i) T.push_back(S[static_cast<size_t>(j)]);
        std::vector<int> Tswap = T;
        Tswap[0] = S[static_cast<size_t>(i)];
        std::sort(T.begin(), T.end());
        std::sort(Tswap.begin(), Tswap.end());
        delta[static_cast<size_t>(i)] = residue(b.residue_of(Tswap) - b.residue_of(T), p.q);
    }
    for (int anchor = 0; anchor < m; ++anchor) {
        std::vector<int> vals(static_cast<size_t>(w));
        for (int i = 0; i < w; ++i)
            vals[static_cast<size_t>(i)] = value_for_residue(anchor + delta[static_cast<size_t>(i)], p.q);
        CodeWord x(std::vector<int>(static_cast<size_t>(p.n), 0));
        for (int i = 0; i < w; ++i) x[S[static_cast<size_t>(i)] - 1] = vals[static_cast<size_t>(i)];
        if (check_constraints(x, b)) out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The candidate family X: all weight-w words over [q-1] entries satisfying
// every applicable constraint, in (support, values) lex order.
struct CandidateFamily {
    CodeParams params;
    BAssignment b;
    std::vector<CodeWord> words;

    int size() const { return static_cast<int>(words.size()); }
};

inline CandidateFamily enumerate_X(const CodeParams& p, const BAssignment& b) {
    CandidateFamily fam;
    fam.params = p;
    fam.b = b;
    auto S = first_subset(p.n, p.w);
    do {
        auto ws = words_on_support(S, b);
        fam.words.insert(fam.words.end(), ws.begin(), ws.end());
    } while (next_subset(S, p.n));
    return fam;
}

// For each of the (q-1)^(t-1) value assignments on Tprime, the unique
// completion on the single index of T \ Tprime satisfying the constraint.
// Returns full value vectors on T (in T's sorted index order).
inline std::vector<std::vector<int>> realizable_patterns(const std::vector<int>& T,
                                                         const std::vector<int>& Tprime,
                                                         const BAssignment& b) {
    const CodeParams& p = b.params;
    int t = p.t(), m = p.q - 1;
    if (static_cast<int>(T.size()) != t || static_cast<int>(Tprime.size()) != t - 1)
        throw std::invalid_argument("realizable_patterns: |T| != t or |T'| != t-1");
    int free_pos = -1;
    for (int i = 0; i < t; ++i) {
        bool in_prime = std::find(Tprime.begin(), Tprime.end(), T[static_cast<size_t>(i)]) != Tprime.end();
        if (!in_prime) {
            if (free_pos != -1) throw std::invalid_argument("realizable_patterns: T' not a subset of T");
            free_pos = i;
        }
    }
    int target = b.residue_of(T);
    std::vector<std::vector<int>> out;
    std::vector<int> vals(static_cast<size_t>(t), 1);
    // enumerate the t-1 non-free positions over [q-1]
    std::vector<int> frees;
    for (int i = 0; i < t; ++i)
        if (i != free_pos) frees.push_back(i);
    while (true) {
        long long partial = 0;
        for (int i : frees) partial += vals[static_cast<size_t>(i)];
        vals[static_cast<size_t>(free_pos)] = value_for_residue(target - residue(partial, p.q), p.q);
        out.push_back(vals);
        int k = static_cast<int>(frees.size()) - 1;
        while (k >= 0 && vals[static_cast<size_t>(frees[static_cast<size_t>(k)])] == m)
            vals[static_cast<size_t>(frees[static_cast<size_t>(k--)])] = 1;
        if (k < 0) break;
        ++vals[static_cast<size_t>(frees[static_cast<size_t>(k)])];
    }
    return out;
}

// ---------------------------------------------------------------------------
// B-assignment file format:
//   bassign 1
//   q=<q> n=<n> t=<t>
//   <i1> ... <it> <value>   (rows in lex T order)
// ---------------------------------------------------------------------------

inline void write_bassignment(std::ostream& os, const BAssignment& b) {
    os << "bassign 1\n";
    os << "q=" << b.params.q << " n=" << b.params.n << " t=" << b.params.t() << "\n";
    for (size_t i = 0; i < b.tsets.size(); ++i) {
        for (int idx : b.tsets[i]) os << idx << ' ';
        os << b.values[i] << "\n";
    }
}

// Reads a B file; params must supply the full (q,n,d,w) since the file only
// carries (q,n,t).  Rejects mismatched headers, wrong row order, bad values.
inline BAssignment read_bassignment(std::istream& is, const CodeParams& p) {
    std::string line;
    if (!std::getline(is, line) || line != "bassign 1")
        throw std::runtime_error("bassign file: bad magic line");
    if (!std::getline(is, line))
        throw std::runtime_error("bassign file: missing parameter line");
    int q, n, t;
    if (std::sscanf(line.c_str(), "q=%d n=%d t=%d", &q, &n, &t) != 3)
        throw std::runtime_error("bassign file: bad parameter line");
    if (q != p.q || n != p.n || t != p.t())
        throw std::runtime_error("bassign file: header does not match parameters");
    BAssignment b;
    b.params = p;
    auto expect = first_subset(n, t);
    bool more = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (!more) throw std::runtime_error("bassign file: extra rows");
        std::istringstream ls(line);
        std::vector<int> T(static_cast<size_t>(t));
        int value;
        for (int i = 0; i < t; ++i)
            if (!(ls >> T[static_cast<size_t>(i)]))
                throw std::runtime_error("bassign file: short row");
        if (!(ls >> value)) throw std::runtime_error("bassign file: missing value");
        if (T != expect) throw std::runtime_error("bassign file: rows out of order");
        if (value < 1 || value > q - 1)
            throw std::runtime_error("bassign file: value out of range");
        b.tsets.push_back(T);
        b.values.push_back(value);
        more = next_subset(expect, n);
    }
    if (more) throw std::runtime_error("bassign file: missing rows");
    b.rebuild_lookup();
    return b;
}

}  // namespace cwc
