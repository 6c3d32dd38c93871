#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "sturmian/census.hpp"
#include "sturmian/mapping.hpp"

using namespace sturmian;

namespace {

Word W(const char* s) { return Word::from_string(s); }

}  // namespace

TEST_CASE("totient") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(7) == 6);
    CHECK_THROWS_AS(totient(0), std::invalid_argument);
    for (long long k = 1; k <= 200; ++k) {
        long long brute = 0;
        for (long long m = 1; m <= k; ++m) brute += std::gcd(m, k) == 1;
        CHECK(totient(k) == brute);
    }
}

TEST_CASE("sturmian count formula") {
    CHECK(sturmian_count(0) == 1);
    CHECK(sturmian_count(1) == 2);
    CHECK(sturmian_count(4) == 14);
    CHECK(sturmian_count(10) == 136);
    CHECK(sturmian_count(12) == 224);
    // Grows like n^3; must clear machine words well before n ~ 10^7.
    CHECK(sturmian_count(100000).str().size() >= 14);
}

TEST_CASE("totient sum identity") {
    TotientSumIdentity id1 = totient_sum_identity(1);
    CHECK(id1.lhs == 1);
    CHECK(id1.rhs == 1);
    TotientSumIdentity id2 = totient_sum_identity(2);
    CHECK(id2.lhs == id2.rhs);
    TotientSumIdentity id30 = totient_sum_identity(30);
    CHECK(id30.lhs == id30.rhs);
    CHECK(id30.lhs == 3017);
}

TEST_CASE("palindrome count formula") {
    CHECK(palindrome_count(0) == 1);
    CHECK(palindrome_count(1) == 2);
    CHECK(palindrome_count(4) == 4);
    CHECK(palindrome_count(10) == 14);
}

TEST_CASE("palindrome lines satisfy their construction invariants") {
    CHECK(palindrome_lines(1).size() == 1);
    CHECK(palindrome_lines(1)[0].line == GridLine::make(1, 0, 0));
    CHECK(palindrome_lines(2).size() == 1);
    CHECK(palindrome_lines(10).size() == 13);

    for (long long n = 1; n <= 16; ++n) {
        auto lines = palindrome_lines(n);
        Int expected = palindrome_count(n) - 1;
        CHECK(Int(static_cast<long long>(lines.size())) == expected);
        std::set<std::string> distinct;
        for (const PalindromeLine& pl : lines) {
            distinct.insert(pl.line.str());
            long long a = pl.line.a(), b = pl.line.b(), c = pl.line.c();
            CHECK(((2 * c + b * n + 1) % a) == 0);           // 2c ≡ -bn-1 (mod a)
            CHECK(std::gcd(a, n - 2 * pl.i) == 1);
            CHECK(pl.i + 1 <= a);
            CHECK(a <= n - pl.i);
            auto pts = grid_points(pl.line, n);
            REQUIRE(pts.size() >= 2);
            CHECK(pts.front() == pl.leftmost);
        }
        CHECK(distinct.size() == lines.size());
    }
}

TEST_CASE("palindrome words match brute force") {
    auto sorted = [](std::vector<Word> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(palindrome_words(1)) == std::vector<Word>{W("0"), W("1")});
    CHECK(sorted(palindrome_words(3)) ==
          std::vector<Word>{W("000"), W("010"), W("101"), W("111")});
    CHECK(sorted(palindrome_words(4)) ==
          std::vector<Word>{W("0000"), W("0110"), W("1001"), W("1111")});

    for (long long n = 1; n <= 12; ++n) {
        std::vector<Word> expected;
        for (const Word& w : brute_force_census(n).words) {
            if (is_palindrome(w)) expected.push_back(w);
        }
        CHECK(sorted(palindrome_words(n)) == sorted(expected));
    }
}

TEST_CASE("palindrome lines biject via locate_line") {
    for (long long n = 1; n <= 12; ++n) {
        for (const PalindromeLine& pl : palindrome_lines(n)) {
            Word w = through_all_word(pl.line, n);
            CHECK(locate_line(w) == pl.line);
        }
    }
}

TEST_CASE("no palindrome hides in an intercept-1 image") {
    for (long long n = 1; n <= 10; ++n) {
        for (const GridLine& l : enumerate_grid_lines(n)) {
            if (l.c() != l.a()) continue;
            for (const ImageEntry& e : image_words(l, n).entries) {
                CHECK_FALSE(is_palindrome(e.word));
            }
        }
    }
}

TEST_CASE("brute force census") {
    BruteCensus c2 = brute_force_census(2);
    CHECK(c2.sturmian == 4);
    CHECK(c2.palindromic == 2);
    BruteCensus c4 = brute_force_census(4);
    CHECK(c4.sturmian == 14);
    CHECK(c4.palindromic == 4);
    CHECK(Int(brute_force_census(12).sturmian) == sturmian_count(12));
    CHECK_THROWS_AS(brute_force_census(0), std::invalid_argument);
    if (std::getenv("STURMIAN_BRUTE_LIMIT") == nullptr) {
        CHECK_THROWS_AS(brute_force_census(21), std::invalid_argument);
    }
}

TEST_CASE("geometric census equals formula") {
    for (long long n = 1; n <= 12; ++n) {
        CHECK(geometric_count(n) == sturmian_count(n));
    }
}

TEST_CASE("image cardinalities regroup into the z-count sum") {
    // Grouping the closed-form cardinalities over all lines must equal one
    // plus the z-count sum used by the totient identity.
    for (long long n = 1; n <= 14; ++n) {
        Int regrouped = 1;
        for (const GridLine& l : enumerate_grid_lines(n)) {
            if (l.b() >= 1 && l.c() < l.a()) regrouped += z_count(l, n) - 1;
        }
        Int direct = 0;
        for (const GridLine& l : enumerate_grid_lines(n)) {
            direct += image_cardinality(l, n);
        }
        CHECK(regrouped == direct);
        CHECK(direct == 1 + totient_sum_identity(n).lhs);
    }
}
