#include "cwc/bounds.hpp"
#include "cwc/oracle.hpp"
#include "cwc/rng.hpp"

#include <doctest.h>

using namespace cwc;

TEST_CASE("enumerate_all_words counts and contents") {
    CHECK(enumerate_all_words(CodeParams(2, 7, 4, 3)).size() == 35);
    CHECK(enumerate_all_words(CodeParams(3, 4, 4, 3)).size() == 32);

    auto only = enumerate_all_words(CodeParams(2, 3, 2, 3));
    REQUIRE(only.size() == 1);
    CHECK(only[0] == CodeWord{1, 1, 1});

    CHECK_THROWS(enumerate_all_words(CodeParams(4, 8, 4, 4), 5000));  // 70*81 > cap
}

TEST_CASE("enumerate_all_words is sorted and duplicate-free") {
    auto all = enumerate_all_words(CodeParams(3, 5, 4, 3));
    for (size_t i = 1; i < all.size(); ++i) {
        auto si = support(all[i - 1]), sj = support(all[i]);
        CHECK((si < sj || (si == sj && all[i - 1] < all[i])));
    }
    for (auto& x : all) CHECK(weight(x) == 3);
}

TEST_CASE("oracle spot values") {
    auto r1 = max_code_exact(CodeParams(2, 7, 4, 3));
    CHECK(r1.exhausted);
    CHECK(r1.value == 7);
    CHECK(verify_code(r1.witness).pass());
    CHECK(r1.witness.size() == 7);

    auto r2 = max_code_exact(CodeParams(3, 4, 4, 3));
    CHECK(r2.exhausted);
    CHECK(r2.value == 2);
    CHECK(verify_code(r2.witness).pass());

    // n = w: single weight-w word
    auto r3 = max_code_exact(CodeParams(2, 4, 5, 4));
    CHECK(r3.exhausted);
    CHECK(r3.value == 1);
}

TEST_CASE("oracle respects the Johnson bound on a small grid") {
    for (int q = 2; q <= 3; ++q)
        for (int n = 3; n <= 6; ++n)
            for (int w = 1; w <= std::min(3, n); ++w)
                for (int d = 1; d <= 2 * w; ++d) {
                    CodeParams p(q, n, d, w);
                    // A node budget keeps the sweep fast; the returned value is
                    // a genuine code size either way, so the bound check stands
                    // even on the rare instance the search does not finish.
                    auto r = max_code_exact(p, 1000000ULL);
                    CHECK(BigInt(r.value) <= johnson_bound(p).floor_value);
                    CHECK(verify_code(r.witness).pass());
                    CHECK(r.witness.size() == r.value);
                }
}

TEST_CASE("oracle value invariant under coordinate permutation") {
    // permuting coordinates of the instance cannot change A_q(n,d,w); the
    // instance itself is permutation-symmetric, so re-check via a different
    // parameter embedding: run twice and compare against a shuffled-order
    // greedy-seeded search with a different (equivalent) vertex order.
    CodeParams p(3, 5, 4, 3);
    auto a = max_code_exact(p);
    auto b = max_code_exact(p, 100000000ULL, 100000);
    CHECK(a.value == b.value);

    // explicit check: build the instance on permuted words by hand
    auto all = enumerate_all_words(p);
    std::vector<int> perm = {3, 1, 5, 2, 4};
    Rng rng(9);
    int best_direct = a.value;
    // verify a permuted copy of the witness is still a valid code of same size
    std::vector<CodeWord> permuted;
    for (auto& x : a.witness.words) {
        CodeWord y(std::vector<int>(5, 0));
        for (int i = 0; i < 5; ++i) y[perm[static_cast<size_t>(i)] - 1] = x[i];
        permuted.push_back(y);
    }
    Code pc(p, permuted);
    CHECK(verify_code(pc).pass());
    CHECK(pc.size() == best_direct);
}

TEST_CASE("node limit reports a lower bound, not exactness") {
    auto r = max_code_exact(CodeParams(3, 7, 4, 3), 2);
    CHECK(!r.exhausted);
    CHECK(verify_code(r.witness).pass());  // incumbent is still a valid code
}
