#include "sturmian/census.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "sturmian/mapping.hpp"

namespace sturmian {

long long totient(long long k) {
    if (k < 1) throw std::invalid_argument("totient: k must be >= 1");
    long long result = k;
    long long m = k;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

Int sturmian_count(long long n) {
    if (n < 0) throw std::invalid_argument("sturmian_count: n must be >= 0");
    Int total = 1;
    for (long long k = 1; k <= n; ++k) {
        total += Int(n + 1 - k) * totient(k);
    }
    return total;
}

TotientSumIdentity totient_sum_identity(long long n) {
    if (n < 1) throw std::invalid_argument("totient_sum_identity: n must be >= 1");
    TotientSumIdentity id{0, 0};
    // slope in (0,1] and intercept in [0,1): 1 <= b <= a, 0 <= c < a
    for (long long a = 1; a <= n; ++a) {
        for (long long b = 1; b <= a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (long long c = 0; c < a; ++c) {
                GridLine l = GridLine::make(a, b, c);
                long long z = z_count(l, n);
                if (z >= 2) id.lhs += z - 1;
            }
        }
    }
    Int running_phi_sum = 0;
    for (long long i = 1; i <= n; ++i) {
        running_phi_sum += totient(i);
        id.rhs += running_phi_sum;
    }
    return id;
}

Int palindrome_count(long long n) {
    if (n < 0) throw std::invalid_argument("palindrome_count: n must be >= 0");
    Int total = 1;
    for (long long k = 0; 2 * k < n; ++k) {
        total += totient(n - 2 * k);
    }
    return total;
}

namespace {

// Extended Euclid: x with (x * value) ≡ 1 (mod modulus), for coprime inputs.
long long mod_inverse(long long value, long long modulus) {
    long long r0 = modulus, r1 = ((value % modulus) + modulus) % modulus;
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        t0 -= q * t1; std::swap(t0, t1);
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return ((t0 % modulus) + modulus) % modulus;
}

}  // namespace

std::vector<PalindromeLine> palindrome_lines(long long n) {
    if (n < 1) throw std::invalid_argument("palindrome_lines: n must be >= 1");
    std::vector<PalindromeLine> out;
    for (long long i = 0; 2 * i < n; ++i) {
        for (long long a = i + 1; a <= n - i; ++a) {
            if (std::gcd(a, n - 2 * i) != 1) continue;
            long long b = (a == 1) ? 0 : (a - mod_inverse(n - 2 * i, a)) % a;
            long long j = (b * i + a - 1) / a;  // ceil(b*i/a): unique j with 0 <= a*j - b*i < a
            long long c = a * j - b * i;
            PalindromeLine pl;
            pl.line = GridLine::make(a, b, c);
            pl.leftmost = GridPoint{i, j};
            pl.i = i; pl.a = a; pl.b = b;
            out.push_back(pl);
        }
    }
    return out;
}

std::vector<Word> palindrome_words(long long n) {
    std::vector<Word> words;
    for (const PalindromeLine& pl : palindrome_lines(n)) {
        Word w = through_all_word(pl.line, n);
        if (!is_palindrome(w)) {
            throw std::logic_error("palindrome_words: line " + pl.line.str() +
                                   " produced the non-palindrome " + w.str());
        }
        words.push_back(std::move(w));
    }
    words.push_back(Word(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1)));
    return words;
}

namespace {

long long env_limit_or(long long fallback) {
    if (const char* env = std::getenv("STURMIAN_BRUTE_LIMIT")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return fallback;
}

}  // namespace

long long brute_word_limit() { return env_limit_or(20); }
long long census_limit() { return env_limit_or(14); }

BruteCensus brute_force_census(long long n) {
    if (n < 1) throw std::invalid_argument("brute_force_census: n must be >= 1");
    if (n > brute_word_limit()) {
        throw std::invalid_argument("brute_force_census: n = " + std::to_string(n) +
                                    " exceeds the exhaustive bound " +
                                    std::to_string(brute_word_limit()) +
                                    " (set STURMIAN_BRUTE_LIMIT to raise)");
    }
    BruteCensus census;
    for (unsigned long long bits = 0; bits < (1ULL << n); ++bits) {
        std::vector<std::uint8_t> letters(static_cast<std::size_t>(n));
        for (long long k = 0; k < n; ++k) {
            letters[static_cast<std::size_t>(k)] = (bits >> k) & 1;
        }
        Word w(std::move(letters));
        if (!is_balanced(w)) continue;
        ++census.sturmian;
        if (is_palindrome(w)) ++census.palindromic;
        census.words.push_back(std::move(w));
    }
    return census;
}

Int geometric_count(long long n) {
    if (n < 1) throw std::invalid_argument("geometric_count: n must be >= 1");
    Int total = 0;
    for (const GridLine& l : enumerate_grid_lines(n)) {
        total += static_cast<long long>(image_words(l, n).entries.size());
    }
    return total;
}

}  // namespace sturmian
