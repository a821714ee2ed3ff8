// degrees.hpp -- vertex-degree analysis of the conflict hypergraph's V2 side:
// the exact expected-degree formula, per-tuple degree counting, the exact
// mean over all B assignments on tiny instances, and Monte Carlo
// concentration reports.

#pragma once

#include "cwc/combi.hpp"
#include "cwc/constraints.hpp"
#include "cwc/matching.hpp"
#include "cwc/rational.hpp"
#include "cwc/rng.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwc {

// A V2-shaped tuple: t distinct (index, value) pairs, sorted by index.  It
// may or may not satisfy its own modular constraint.
struct DegreeTuple {
    std::vector<std::pair<int, int>> pairs;

    std::vector<int> indices() const {
        std::vector<int> out;
        for (auto& [i, v] : pairs) out.push_back(i);
        return out;
    }
};

// E[D] = (q-1)^(w-t-C(w,t)+1) C(n-t, w-t), exact (the exponent may be
// negative, so the value is rational).
inline Rational expected_degree(const CodeParams& p) {
    if (!p.even_d()) throw std::invalid_argument("expected_degree: d must be even");
    int t = p.t();
    int exponent = p.w - t - static_cast<int>(binomial(p.w, t)) + 1;
    return qpow(p.q, exponent) * Rational(binomial(p.n - t, p.w - t));
}

// Number of weight-w words x with v's pairs on supp(x) that satisfy every
// t-subset constraint of supp(x) except (optionally) the one on v's own
// index set.  This is the degree-style count D; with include_own_constraint
// it becomes the census degree of v against the full candidate family.
inline int tuple_extension_count(const DegreeTuple& v, const BAssignment& b,
                                 bool include_own_constraint) {
    const CodeParams& p = b.params;
    int t = p.t();
    if (static_cast<int>(v.pairs.size()) != t)
        throw std::invalid_argument("tuple_extension_count: tuple must have t pairs");
    auto own = v.indices();
    std::vector<int> rest;
    for (int i = 1; i <= p.n; ++i)
        if (std::find(own.begin(), own.end(), i) == own.end()) rest.push_back(i);

    int m = p.q - 1;
    int extra = p.w - t;
    int count = 0;
    for (auto& extra_idx : subsets_of(rest, extra)) {
        // enumerate values on the extra support positions
        std::vector<int> vals(static_cast<size_t>(extra), 1);
        while (true) {
            CodeWord x(std::vector<int>(static_cast<size_t>(p.n), 0));
            for (auto& [i, val] : v.pairs) x[i - 1] = val;
            for (int i = 0; i < extra; ++i)
                x[extra_idx[static_cast<size_t>(i)] - 1] = vals[static_cast<size_t>(i)];
            bool ok = true;
            for (const auto& T : subsets_of(support(x), t)) {
                if (!include_own_constraint && T == own) continue;
                long long sum = 0;
                for (int i : T) sum += x[i - 1];
                if (residue(sum, p.q) != b.residue_of(T)) { ok = false; break; }
            }
            if (ok) ++count;
            if (extra == 0) break;
            int i = extra - 1;
            while (i >= 0 && vals[static_cast<size_t>(i)] == m) vals[static_cast<size_t>(i--)] = 1;
            if (i < 0) break;
            ++vals[static_cast<size_t>(i)];
        }
    }
    return count;
}

// Census degree of v against an explicit candidate family: the number of
// x in X whose V2 key set contains v.
inline int tuple_degree(const DegreeTuple& v, const CandidateFamily& X) {
    int t = X.params.t();
    VertexKey key;
    key.push_back(2);
    for (auto& [i, val] : v.pairs) {
        key.push_back(i);
        key.push_back(val);
    }
    int count = 0;
    for (const auto& x : X.words) {
        for (const auto& k : v2_keys(x, t))
            if (k == key) { ++count; break; }
    }
    return count;
}

// Exact E[D] by averaging tuple_extension_count over ALL assignments of the
// B values on t-subsets other than v's own (B on v's set never matters for
// the count).  Only feasible when (q-1)^(C(n,t)-1) is tiny.
inline Rational exact_mean_degree_over_B(const CodeParams& p, const DegreeTuple& v,
                                         double enumeration_cap = 1e7) {
    if (!p.even_d()) throw std::invalid_argument("exact_mean_degree_over_B: d must be even");
    BAssignment b = sample_B(p, 0);
    auto own = v.indices();
    std::vector<size_t> free_slots;
    for (size_t i = 0; i < b.tsets.size(); ++i)
        if (b.tsets[i] != own) free_slots.push_back(i);
    int m = p.q - 1;
    double total = std::pow(static_cast<double>(m), static_cast<double>(free_slots.size()));
    if (total > enumeration_cap)
        throw std::runtime_error("exact_mean_degree_over_B: enumeration infeasible");

    for (size_t s : free_slots) b.values[s] = 1;
    BigInt sum = 0;
    BigInt assignments = 0;
    while (true) {
        b.rebuild_lookup();
        sum += tuple_extension_count(v, b, false);
        ++assignments;
        size_t k = free_slots.size();
        while (k > 0 && b.values[free_slots[k - 1]] == m) b.values[free_slots[--k]] = 1;
        if (k == 0) break;
        ++b.values[free_slots[k - 1]];
    }
    return Rational(sum, assignments);
}

struct DegreeReport {
    CodeParams params;
    Rational expected = 0;
    Rational observed_min = 0;
    Rational observed_max = 0;
    Rational observed_mean = 0;
    double stderr_of_mean = 0.0;
    int samples = 0;
    std::string mode;  // exact-over-B | fixed-B-census | monte-carlo
};

// Monte Carlo concentration check: draw `samples` independent B assignments
// (sample s uses derive_seed(seed, s)) and record tuple degrees over a fixed
// panel: the first `panel_k` tuples in canonical order plus `panel_k` random
// ones drawn under the seed.
inline DegreeReport degree_concentration_mc(const CodeParams& p, int samples, std::uint64_t seed,
                                            int panel_k = 4) {
    if (!p.even_d()) throw std::invalid_argument("degree_concentration_mc: d must be even");
    DegreeReport rep;
    rep.params = p;
    rep.expected = expected_degree(p);
    rep.samples = samples;
    rep.mode = "monte-carlo";
    if (samples == 0) return rep;

    int t = p.t(), m = p.q - 1;
    std::vector<DegreeTuple> panel;
    // first panel_k tuples in canonical (support lex, then value lex) order
    auto idx = first_subset(p.n, t);
    std::vector<int> vals(static_cast<size_t>(t), 1);
    while (static_cast<int>(panel.size()) < panel_k) {
        DegreeTuple v;
        for (int i = 0; i < t; ++i)
            v.pairs.emplace_back(idx[static_cast<size_t>(i)], vals[static_cast<size_t>(i)]);
        panel.push_back(std::move(v));
        int i = t - 1;
        while (i >= 0 && vals[static_cast<size_t>(i)] == m) vals[static_cast<size_t>(i--)] = 1;
        if (i >= 0) ++vals[static_cast<size_t>(i)];
        else if (!next_subset(idx, p.n)) break;
    }
    // panel_k random tuples under the seed
    Rng rng(splitmix64(derive_seed(seed, 0xABCDEF)));
    for (int k = 0; k < panel_k; ++k) {
        std::vector<int> pool(static_cast<size_t>(p.n));
        for (int i = 0; i < p.n; ++i) pool[static_cast<size_t>(i)] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        DegreeTuple v;
        std::vector<int> chosen(pool.begin(), pool.begin() + t);
        std::sort(chosen.begin(), chosen.end());
        for (int i : chosen) v.pairs.emplace_back(i, uniform_int(rng, 1, m));
        panel.push_back(std::move(v));
    }

    BigInt sum = 0;
    long long n_obs = 0;
    double sq_sum = 0.0;
    int dmin = -1, dmax = -1;
    for (int s = 0; s < samples; ++s) {
        BAssignment b = sample_B(p, derive_seed(seed, static_cast<std::uint64_t>(s)));
        for (const auto& v : panel) {
            int deg = tuple_extension_count(v, b, false);
            sum += deg;
            sq_sum += static_cast<double>(deg) * deg;
            ++n_obs;
            if (dmin < 0 || deg < dmin) dmin = deg;
            if (dmax < 0 || deg > dmax) dmax = deg;
        }
    }
    rep.observed_min = dmin;
    rep.observed_max = dmax;
    rep.observed_mean = Rational(sum, BigInt(n_obs));
    double mean = static_cast<double>(rep.observed_mean);
    double var = sq_sum / static_cast<double>(n_obs) - mean * mean;
    if (var < 0) var = 0;
    rep.stderr_of_mean = std::sqrt(var / static_cast<double>(n_obs));
    return rep;
}

}  // namespace cwc
