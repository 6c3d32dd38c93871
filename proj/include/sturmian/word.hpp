#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

// Finite binary word over {0,1}. Immutable value type; the text form is a
// plain 0/1 string with no separators (empty string = empty word).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> letters);

    static Word from_string(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::uint8_t operator[](std::size_t k) const { return letters_[k]; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    std::string str() const;

    Word prefix(std::size_t len) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
        return x.letters_ <=> y.letters_;
    }

private:
    std::vector<std::uint8_t> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Heights of the broken line: entry k is the number of 1s among the first k
// letters, so the result has size |w|+1 and starts at 0.
std::vector<long long> heights(const Word& w);

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

// All start positions i with host[i .. i+|u|-1] = u, sorted. Throws
// std::invalid_argument for empty u.
std::vector<std::size_t> occurrences(const Word& host, const Word& u);

// Return words of u in host: for consecutive occurrence positions p < q the
// block host[p .. q-1]. Only complete pairs count; the tail after the last
// occurrence is ignored. Throws std::invalid_argument if u occurs fewer than
// twice.
std::vector<Word> return_words_in(const Word& host, const Word& u);

// Deduplicated, sorted set of the above.
std::vector<Word> distinct_return_words(const Word& host, const Word& u);

// Balance oracle: every pair of equal-length factors has 1-counts differing
// by at most one. Quadratic sliding-window sweep; fine at desk scale.
bool is_balanced(const Word& w);

// First n letters of the fixed point of 0 -> 01, 1 -> 0, starting from 0.
Word fibonacci_prefix(std::size_t n);

}  // namespace sturmian
