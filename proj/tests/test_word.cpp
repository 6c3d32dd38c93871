#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sturmian/word.hpp"

using namespace sturmian;

namespace {

Word W(const char* s) { return Word::from_string(s); }

// All 2^n words of length n, for exhaustive sweeps.
std::vector<Word> all_words(int n) {
    std::vector<Word> out;
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        std::vector<std::uint8_t> letters(n);
        for (int k = 0; k < n; ++k) letters[k] = (bits >> k) & 1;
        out.emplace_back(std::move(letters));
    }
    return out;
}

}  // namespace

TEST_CASE("word text round trip and validation") {
    CHECK(W("10110").str() == "10110");
    CHECK(W("").empty());
    CHECK(W("10110").size() == 5);
    CHECK_THROWS_AS(Word::from_string("102"), std::invalid_argument);
    CHECK_THROWS_AS(Word(std::vector<std::uint8_t>{0, 2}), std::invalid_argument);
}

TEST_CASE("heights count ones along prefixes") {
    auto h = heights(W("10110"));
    CHECK(h == std::vector<long long>{0, 1, 1, 2, 3, 3});
    CHECK(heights(W("")) == std::vector<long long>{0});
}

TEST_CASE("reverse") {
    CHECK(reverse(W("10110")) == W("01101"));
    CHECK(reverse(W("")) == W(""));
    CHECK(reverse(W("0110")) == W("0110"));
    for (const Word& w : all_words(9)) CHECK(reverse(reverse(w)) == w);
}

TEST_CASE("palindromes") {
    CHECK(is_palindrome(W("1001")));
    CHECK_FALSE(is_palindrome(W("10110")));
    CHECK(is_palindrome(W("")));
}

TEST_CASE("occurrences") {
    CHECK(occurrences(W("10001001001000100"), W("100")) ==
          std::vector<std::size_t>{0, 4, 7, 10, 14});
    CHECK(occurrences(W("0000"), W("1")).empty());
    CHECK(occurrences(W("0101"), W("01")) == std::vector<std::size_t>{0, 2});
    CHECK_THROWS_AS(occurrences(W("0101"), W("")), std::invalid_argument);
}

TEST_CASE("return words of the staircase example") {
    Word host = W("10001001001000100");
    Word u = W("100");
    auto rets = return_words_in(host, u);
    REQUIRE(rets.size() == 4);
    CHECK(rets[0] == W("1000"));
    CHECK(rets[1] == W("100"));
    CHECK(rets[2] == W("100"));
    CHECK(rets[3] == W("1000"));
    CHECK(distinct_return_words(host, u) == std::vector<Word>{W("100"), W("1000")});
}

TEST_CASE("return words edge cases") {
    CHECK(return_words_in(W("000"), W("0")) == std::vector<Word>{W("0"), W("0")});
    CHECK(distinct_return_words(W("000"), W("0")) == std::vector<Word>{W("0")});
    CHECK(distinct_return_words(W("01001010010"), W("010")).size() == 2);
    CHECK_THROWS_AS(return_words_in(W("0001"), W("1")), std::invalid_argument);
}

TEST_CASE("returns concatenate to the host between first and last occurrence") {
    for (const char* host_text : {"10001001001000100", "01001010010", "010101010"}) {
        Word host = W(host_text);
        for (const char* u_text : {"0", "1", "01", "010", "100"}) {
            Word u = W(u_text);
            auto pos = occurrences(host, u);
            if (pos.size() < 2) continue;
            std::string joined;
            for (const Word& r : return_words_in(host, u)) joined += r.str();
            CHECK(joined == host.str().substr(pos.front(), pos.back() - pos.front()));
        }
    }
}

TEST_CASE("balance oracle") {
    CHECK_FALSE(is_balanced(W("0011")));
    CHECK(is_balanced(W("01001010010")));
    CHECK(is_balanced(W("1111")));
    CHECK(is_balanced(W("")));
    CHECK_FALSE(is_balanced(W("1100")));
}

TEST_CASE("balance is reversal-symmetric") {
    for (int n = 1; n <= 10; ++n) {
        for (const Word& w : all_words(n)) {
            CHECK(is_balanced(w) == is_balanced(reverse(w)));
        }
    }
}

TEST_CASE("fibonacci prefix") {
    CHECK(fibonacci_prefix(5) == W("01001"));
    CHECK(fibonacci_prefix(1) == W("0"));
    CHECK(fibonacci_prefix(11) == W("01001010010"));
    CHECK_THROWS_AS(fibonacci_prefix(0), std::invalid_argument);

    Word big = fibonacci_prefix(300);
    for (std::size_t len : {1u, 2u, 3u, 50u, 299u}) {
        CHECK(fibonacci_prefix(len) == big.prefix(len));
    }
    CHECK(is_balanced(fibonacci_prefix(120)));
}
