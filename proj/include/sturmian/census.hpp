#pragma once

#include <vector>

#include "sturmian/geometry.hpp"
#include "sturmian/rational.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

// Euler's totient by trial factorization.
long long totient(long long k);

// Number of finite Sturmian words of length n:
//   1 + sum_{k=1..n} (n+1-k) * phi(k)
// with the n = 0 convention of 1 (the empty word).
Int sturmian_count(long long n);

// Both sides of the totient double-sum identity: the left side sums
// z_count - 1 over the grid lines with slope in (0,1] and intercept in [0,1),
// the right side is sum_{i=1..n} sum_{j=1..i} phi(j).
struct TotientSumIdentity {
    Int lhs;
    Int rhs;
};

TotientSumIdentity totient_sum_identity(long long n);

// Number of palindromic finite Sturmian words of length n:
//   1 + sum_{k=0..ceil(n/2)-1} phi(n-2k)
// again with 1 for n = 0.
Int palindrome_count(long long n);

// A grid line carrying a palindrome: the intercept satisfies
// 2c ≡ -b*n - 1 (mod a), the leftmost grid point sits at x = i with
// i+1 <= a <= n-i, and gcd(a, n-2i) = 1.
struct PalindromeLine {
    GridLine line;
    GridPoint leftmost;
    long long i = 0, a = 0, b = 0;  // construction parameters
};

// One line per (i, a) pair with gcd(a, n-2i) = 1, where b solves
// b(n-2i) ≡ -1 (mod a) and the intercept is pinned by the leftmost point.
// Covers every palindrome except 1^n.
std::vector<PalindromeLine> palindrome_lines(long long n);

// Through-all-points words of the palindrome lines plus 1^n; every entry is
// checked to be a palindrome.
std::vector<Word> palindrome_words(long long n);

struct BruteCensus {
    long long sturmian = 0;
    long long palindromic = 0;
    std::vector<Word> words;  // the balanced words, in bit order
};

// Scans all 2^n words with the balance oracle. Guarded by brute_word_limit().
BruteCensus brute_force_census(long long n);

// Exhaustive-scan guard (default 20), overridable via STURMIAN_BRUTE_LIMIT.
long long brute_word_limit();
// Guard for the census-by-enumeration paths (default 14), same override.
long long census_limit();

// |A_n| as the sum of constructed image-set sizes over all grid lines.
Int geometric_count(long long n);

}  // namespace sturmian
