// core.hpp -- constant-weight code fundamentals: parameters, words, codes,
// weight/support/distance metrics, validity checking, and the code file format.

#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwc {

// Parameters (q, n, d, w) of a q-ary constant-weight code, plus the derived
// threshold t = ceil((2w - d + 1) / 2).  For even d this equals w - d/2 + 1.
struct CodeParams {
    int q = 2;
    int n = 1;
    int d = 1;
    int w = 1;

    CodeParams() = default;
    CodeParams(int q_, int n_, int d_, int w_) : q(q_), n(n_), d(d_), w(w_) {
        if (q < 2) throw std::invalid_argument("CodeParams: q must be >= 2");
        if (n < 1) throw std::invalid_argument("CodeParams: n must be >= 1");
        if (w < 1 || w > n) throw std::invalid_argument("CodeParams: need 1 <= w <= n");
        if (d < 1 || d > 2 * w) throw std::invalid_argument("CodeParams: need 1 <= d <= 2w");
    }

    int t() const { return (2 * w - d + 2) / 2; }  // ceil((2w-d+1)/2), all terms positive
    bool even_d() const { return d % 2 == 0; }

    bool operator==(const CodeParams&) const = default;
};

// A length-n vector with entries in {0, ..., q-1}.  Entry range is checked by
// the owning Code / parser, not on every mutation.
struct CodeWord {
    std::vector<int> entries;

    CodeWord() = default;
    explicit CodeWord(std::vector<int> e) : entries(std::move(e)) {}
    CodeWord(std::initializer_list<int> e) : entries(e) {}

    int size() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries[static_cast<size_t>(i)]; }
    int& operator[](int i) { return entries[static_cast<size_t>(i)]; }

    auto operator<=>(const CodeWord&) const = default;
};

inline int weight(const CodeWord& x) {
    int w = 0;
    for (int e : x.entries)
        if (e != 0) ++w;
    return w;
}

// Sorted 1-based indices of the nonzero entries.
inline std::vector<int> support(const CodeWord& x) {
    std::vector<int> s;
    for (int i = 0; i < x.size(); ++i)
        if (x[i] != 0) s.push_back(i + 1);
    return s;
}

inline int hamming_distance(const CodeWord& x, const CodeWord& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (int i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

inline bool word_in_range(const CodeWord& x, int q) {
    for (int e : x.entries)
        if (e < 0 || e > q - 1) return false;
    return true;
}

// An ordered list of distinct words under common parameters.  Duplicates are
// rejected at construction: a code is a set.
struct Code {
    CodeParams params;
    std::vector<CodeWord> words;

    Code() = default;
    Code(CodeParams p, std::vector<CodeWord> ws) : params(p), words(std::move(ws)) {
        std::set<CodeWord> seen;
        for (const auto& w : words) {
            if (w.size() != params.n)
                throw std::invalid_argument("Code: word length != n");
            if (!seen.insert(w).second)
                throw std::invalid_argument("Code: duplicate word");
        }
    }

    int size() const { return static_cast<int>(words.size()); }
};

inline std::optional<int> min_distance(const Code& c) {
    if (c.size() < 2) return std::nullopt;
    int best = c.params.n + 1;
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
            best = std::min(best, hamming_distance(c.words[i], c.words[j]));
    return best;
}

struct VerifyReport {
    bool weight_ok = true;
    bool distance_ok = true;
    bool range_ok = true;
    std::string witness;  // first violation found, empty if none

    bool pass() const { return weight_ok && distance_ok && range_ok; }
};

inline VerifyReport verify_code(const Code& c) {
    VerifyReport r;
    for (int i = 0; i < c.size(); ++i) {
        if (!word_in_range(c.words[i], c.params.q)) {
            r.range_ok = false;
            r.witness = "word " + std::to_string(i + 1) + " has an entry outside 0.." +
                        std::to_string(c.params.q - 1);
            return r;
        }
        if (weight(c.words[i]) != c.params.w) {
            r.weight_ok = false;
            r.witness = "word " + std::to_string(i + 1) + " has weight " +
                        std::to_string(weight(c.words[i])) + ", expected " +
                        std::to_string(c.params.w);
            return r;
        }
    }
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j) {
            int dist = hamming_distance(c.words[i], c.words[j]);
            if (dist < c.params.d) {
                r.distance_ok = false;
                r.witness = "words " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " are at distance " + std::to_string(dist) + " < d=" +
                            std::to_string(c.params.d);
                return r;
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// Code file format (UTF-8, LF):
//   cwcode 1
//   q=<q> n=<n> d=<d> w=<w>
//   <n space-separated entries per word line>
// ---------------------------------------------------------------------------

inline void write_code(std::ostream& os, const Code& c) {
    os << "cwcode 1\n";
    os << "q=" << c.params.q << " n=" << c.params.n << " d=" << c.params.d
       << " w=" << c.params.w << "\n";
    for (const auto& word : c.words) {
        for (int i = 0; i < word.size(); ++i) {
            if (i) os << ' ';
            os << word[i];
        }
        os << "\n";
    }
}

inline std::string serialize_code(const Code& c) {
    std::ostringstream os;
    write_code(os, c);
    return os.str();
}

inline Code read_code(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "cwcode 1")
        throw std::runtime_error("code file: bad magic line");
    if (!std::getline(is, line))
        throw std::runtime_error("code file: missing parameter line");
    int q, n, d, w;
    if (std::sscanf(line.c_str(), "q=%d n=%d d=%d w=%d", &q, &n, &d, &w) != 4)
        throw std::runtime_error("code file: bad parameter line");
    CodeParams p(q, n, d, w);
    std::vector<CodeWord> words;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        CodeWord word;
        int v;
        while (ls >> v) word.entries.push_back(v);
        if (word.size() != n)
            throw std::runtime_error("code file: word has wrong arity");
        if (!word_in_range(word, q))
            throw std::runtime_error("code file: entry out of range");
        words.push_back(std::move(word));
    }
    return Code(p, std::move(words));  // duplicate check happens here
}

}  // namespace cwc
