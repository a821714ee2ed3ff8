#include "cwc/bounds.hpp"

#include <doctest.h>

using namespace cwc;

namespace {

// Pascal-triangle binomial, independent of the multiplicative route.
BigInt binomial_pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> row(static_cast<size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j - 1)];
    return row[static_cast<size_t>(k)];
}

}  // namespace

TEST_CASE("johnson_t") {
    CHECK(johnson_t(6, 3) == 1);  // d = 2w
    CHECK(johnson_t(4, 3) == 2);
    CHECK(johnson_t(3, 4) == 3);
    CHECK_THROWS_AS(johnson_t(9, 4), std::invalid_argument);
    CHECK_THROWS_AS(johnson_t(0, 4), std::invalid_argument);
}

TEST_CASE("johnson_bound examples") {
    auto b1 = johnson_bound(CodeParams(3, 6, 4, 3));
    CHECK(b1.floor_value == 10);
    CHECK(b1.numerator == 10);
    CHECK(b1.denominator == 1);

    auto b2 = johnson_bound(CodeParams(2, 7, 4, 3));
    CHECK(b2.floor_value == 7);

    auto b3 = johnson_bound(CodeParams(5, 10, 6, 3));
    CHECK(b3.numerator == 10);
    CHECK(b3.denominator == 3);
    CHECK(b3.floor_value == 3);

    auto b4 = johnson_bound(CodeParams(2, 7, 3, 3));  // odd branch
    CHECK(b4.floor_value == 7);
}

TEST_CASE("main_term examples and odd rejection") {
    CHECK(main_term(CodeParams(3, 6, 4, 3)).floor_value == 10);
    auto b = main_term(CodeParams(3, 2, 2, 2));
    CHECK(b.floor_value == 2);
    CHECK_THROWS_AS(main_term(CodeParams(3, 6, 3, 3)), std::invalid_argument);

    // q=2 collapse: (q-1)^(t-1) = 1
    for (int n = 4; n <= 9; ++n) {
        CodeParams p(2, n, 4, 3);
        auto m = main_term(p);
        CHECK(m.rational() == Rational(binomial(n, p.t()), binomial(3, p.t())));
    }
}

TEST_CASE("even d: main_term equals johnson_bound exactly") {
    for (int q = 2; q <= 5; ++q)
        for (int w = 1; w <= 4; ++w)
            for (int d = 2; d <= 2 * w; d += 2)
                for (int n = w; n <= w + 6; ++n) {
                    CodeParams p(q, n, d, w);
                    CHECK(main_term(p).rational() == johnson_bound(p).rational());
                }
}

TEST_CASE("johnson_bound monotone in n") {
    for (int q = 2; q <= 4; ++q)
        for (int w = 1; w <= 4; ++w)
            for (int d = 1; d <= 2 * w; ++d) {
                Rational prev = 0;
                for (int n = w; n <= w + 12; ++n) {
                    Rational cur = johnson_bound(CodeParams(q, n, d, w)).rational();
                    CHECK(cur >= prev);
                    prev = cur;
                }
            }
}

TEST_CASE("binomial: multiplicative route equals Pascal route") {
    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial_pascal(n, k));
}
