#include <doctest.h>

#include <optional>
#include <vector>

#include "pathwheel/formula.hpp"
#include "pathwheel/rational.hpp"

using namespace pw;
using namespace pw::formula;

namespace {

// Independent membership oracle: bounded subset-sum dynamic programming
// over parts drawn with repetition from {max(lo,1)..hi}. Written before
// the closed form and kept as the ground truth for it.
bool member_oracle(long long x, long long lo, long long hi) {
    if (x == 0) return true;
    if (x < 0) return false;
    long long effective_lo = lo < 1 ? 1 : lo;
    if (effective_lo > hi) return false; // empty interval represents {0}
    std::vector<char> reach(static_cast<std::size_t>(x) + 1, 0);
    reach[0] = 1;
    for (long long s = 1; s <= x; ++s)
        for (long long part = effective_lo; part <= hi && part <= s; ++part)
            if (reach[static_cast<std::size_t>(s - part)]) { reach[static_cast<std::size_t>(s)] = 1; break; }
    return reach[static_cast<std::size_t>(x)] != 0;
}

} // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(6, 4);
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK(Rational(-6, 4) == Rational(3, -2));
    CHECK(Rational(0, 7) == Rational::integer(0));
    CHECK(Rational(7, 3).ceil() == 3);
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).ceil() == -2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(6, 3).ceil() == 2);
    CHECK(Rational(20, 4).is_integer());
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(10, 3) > Rational(3, 1));
    // boundary that must not be decided by floating point: 80/4 vs 81/4
    CHECK(Rational(20, 1) <= Rational(81, 4));
    CHECK_FALSE(Rational(20, 1) > Rational(81, 4));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(11, 4).str() == "11/4");
    CHECK(Rational(12, 4).str() == "3");
}

TEST_CASE("parity") {
    CHECK(parity(5) == 1);
    CHECK(parity(8) == 0);
    CHECK(parity(0) == 0);
}

TEST_CASE("interval sum membership: pinned examples") {
    CHECK(interval_sum_member(0, 4, 9));
    CHECK_FALSE(interval_sum_member(14, 4, 4));
    CHECK(interval_sum_member(13, 3, 4)); // 3+3+3+4
    CHECK_FALSE(interval_sum_member(9, 3, 2)); // empty interval is {0}
    CHECK(interval_sum_member(9, -5, 2)); // lower bound clamps to 1
    CHECK_FALSE(interval_sum_member(1, 2, 4));
    CHECK(interval_sum_member(2, 2, 4));
}

TEST_CASE("interval sum membership: closed form equals the DP oracle") {
    for (long long lo = 1; lo <= 20; ++lo)
        for (long long hi = 1; hi <= 20; ++hi)
            for (long long x = 0; x <= 200; ++x)
                CHECK(interval_sum_member(x, lo, hi) == member_oracle(x, lo, hi));
    // clamped lower bounds
    for (long long lo = -6; lo <= 0; ++lo)
        for (long long hi = 0; hi <= 8; ++hi)
            for (long long x = 0; x <= 60; ++x)
                CHECK(interval_sum_member(x, lo, hi) == member_oracle(x, lo, hi));
}

TEST_CASE("t_large: pinned values and breakdown fields") {
    SUBCASE("(5,12) takes the floor branch") {
        auto b = t_large(5, 12);
        CHECK(b.value == 15);
        CHECK(b.branch == Branch::AlphaGtGamma);
        CHECK(b.alpha == Rational(11, 4));
        CHECK(b.beta == 3);
        CHECK(b.gamma == Rational(9, 4));
        CHECK(b.s == 12 + 5 - 15);
    }
    SUBCASE("(10,21) sits one unit inside the clique branch") {
        auto b = t_large(10, 21);
        CHECK(b.value == 28);
        CHECK(b.branch == Branch::AlphaLeGamma); // 20/9 <= 9/4, i.e. 80 <= 81
        CHECK(b.beta == 3);
    }
    SUBCASE("(5,11)") {
        auto b = t_large(5, 11);
        CHECK(b.value == 14);
        CHECK(b.branch == Branch::AlphaGtGamma);
    }
    SUBCASE("(2,5) edgeless witness case") {
        CHECK(t_large(2, 5).value == 6);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(t_large(5, 10), std::invalid_argument); // m < 2n+1
        CHECK_THROWS_AS(t_large(1, 9), std::invalid_argument);
    }
}

TEST_CASE("t_min_char: pinned values") {
    CHECK(t_min_char(3, 7) == 9);
    CHECK(t_min_char(5, 11) == 14);
    CHECK(t_min_char(2, 5) == 6);
    CHECK_THROWS_AS(t_min_char(3, 6), std::invalid_argument);
}

TEST_CASE("membership is downward closed along the t_min_char scan") {
    // The scanned set {t : t is an interval sum from [t-m+1, n-1]} must be
    // a prefix {1..T}; the characterization breaks if it has holes.
    for (long long n = 2; n <= 9; ++n) {
        for (long long m = 2 * n + 1; m <= 45; ++m) {
            long long first_out = t_min_char(n, m);
            for (long long t = 1; t <= m + n; ++t) {
                bool in = interval_sum_member(t, t - m + 1, n - 1);
                CHECK(in == (t < first_out));
            }
        }
    }
}

TEST_CASE("oracle equivalence on a medium range") {
    for (long long n = 2; n <= 12; ++n)
        for (long long m = 2 * n + 1; m <= 60; ++m)
            CHECK(t_large(n, m).value == t_min_char(n, m));
}

TEST_CASE("beta is at least 2 and exactly the ceiling of alpha") {
    for (long long n = 2; n <= 12; ++n)
        for (long long m = 2 * n + 1; m <= 60; ++m) {
            auto b = t_large(n, m);
            CHECK(b.beta >= 2);
            CHECK(b.beta == b.alpha.ceil());
            CHECK(b.gamma == Rational(b.beta * b.beta, b.beta + 1));
        }
}

TEST_CASE("dispatcher: pinned values across regimes") {
    CHECK(ramsey_path_wheel(5, 4).value == 9);   // small wheel, even rim
    CHECK(ramsey_path_wheel(5, 5).value == 13);  // small wheel, odd rim
    CHECK(ramsey_path_wheel(5, 8).value == 11);  // mid wheel, even rim
    CHECK(ramsey_path_wheel(5, 7).value == 13);  // mid wheel, odd rim
    CHECK(ramsey_path_wheel(5, 13).value == 17); // large wheel
    CHECK(ramsey_path_wheel(5, 13).regime == Regime::LargeWheel);
    CHECK(ramsey_path_wheel(5, 4).regime == Regime::SmallWheel);
    CHECK(ramsey_path_wheel(5, 8).regime == Regime::MidWheel);
    CHECK(ramsey_path_wheel(5, 8).branch == Branch::NotApplicable);

    SUBCASE("n=2 always answers m+1") {
        for (long long m = 3; m <= 30; ++m) {
            auto b = ramsey_path_wheel(2, m);
            CHECK(b.value == m + 1);
            CHECK(b.regime == Regime::TrivialN2);
        }
        // agreement with the neighboring regimes where they apply
        CHECK(ramsey_path_wheel(2, 3).value == 4);  // 3n-2 at n=2
        CHECK(t_large(2, 5).value == 6);            // large-wheel value at m=5
    }
    SUBCASE("s field is m+n-value everywhere") {
        for (long long n = 2; n <= 10; ++n)
            for (long long m = 3; m <= 40; ++m) {
                auto b = ramsey_path_wheel(n, m);
                CHECK(b.s == m + n - b.value);
            }
    }
    CHECK_THROWS_AS(ramsey_path_wheel(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(ramsey_path_wheel(3, 2), std::invalid_argument);
}

TEST_CASE("path versus path") {
    CHECK(ramsey_path_path(4, 6) == 7);
    CHECK(ramsey_path_path(6, 4) == 7); // symmetric
    CHECK(ramsey_path_path(2, 2) == 2);
    CHECK(ramsey_path_path(6, 6) == 8);
    CHECK_THROWS_AS(ramsey_path_path(1, 5), std::invalid_argument);
}

TEST_CASE("path versus cycle") {
    CHECK(ramsey_path_cycle(6, 3) == 11); // n >= m, odd rim: 2n-1
    CHECK(ramsey_path_cycle(6, 4) == 7);  // n >= m, even rim: n+m/2-1
    CHECK(ramsey_path_cycle(4, 8) == 9);  // m > n, even rim: m+floor(n/2)-1
    CHECK(ramsey_path_cycle(4, 7) == 8);  // m > n, odd rim: max{m+floor(n/2)-1, 2n-1}
    CHECK(ramsey_path_cycle(3, 9) == 9);  // m > n, odd rim: max{9, 5}
    CHECK_THROWS_AS(ramsey_path_cycle(2, 2), std::invalid_argument);
}

TEST_CASE("residue closed form") {
    CHECK(residue_value(3, 7) == std::optional<long long>(9));   // 7 mod 2 = 1
    CHECK(residue_value(4, 9) == std::optional<long long>(11));  // 9 mod 3 = 0
    CHECK(residue_value(5, 11) == std::nullopt);                 // 11 mod 4 = 3
    CHECK_THROWS_AS(residue_value(2, 7), std::invalid_argument);

    // wherever the closed form exists it must agree with the dispatcher
    for (long long n = 3; n <= 12; ++n)
        for (long long m = 2 * n + 1; m <= 60; ++m)
            if (auto v = residue_value(n, m)) CHECK(*v == ramsey_path_wheel(n, m).value);
}

TEST_CASE("deficiency bound") {
    CHECK(s_bound(5) == 2);
    CHECK(s_bound(11) == 4);
    CHECK(s_bound(16) == 5);
    CHECK_THROWS_AS(s_bound(4), std::invalid_argument);

    std::vector<long long> expected{2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5};
    for (int i = 0; i < 12; ++i) CHECK(s_bound(5 + i) == expected[static_cast<std::size_t>(i)]);

    for (long long n = 5; n <= 16; ++n)
        for (long long m = 2 * n + 1; m <= 60; ++m) {
            auto s = t_large(n, m).s;
            CHECK(s >= 1);
            CHECK(s <= s_bound(n));
        }
}
