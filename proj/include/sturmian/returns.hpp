#pragma once

#include <vector>

#include "sturmian/geometry.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

// Numerator of the point from which a factor beginning at position i starts:
// (b*i + c) mod a. Trivially 0 for a = 1.
long long start_residue(const GridLine& l, long long i);

// Word of length len whose letter k is floor((b(k+1)+c')/a) - floor((bk+c')/a).
// Requires gcd(a,b) = 1, 0 <= b < a or (a,b) = (1,0)/(1,1), 0 <= cprime.
Word factor_from_residue(long long a, long long b, long long cprime, long long len);

// The set of intercept numerators c' in [0, a) whose line represents u,
// found by exhaustive scan. For a factor of this slope's words the set is a
// nonempty cyclic interval [c1 .. c2]; exactly one member grazes a point
// with y ≡ (a-1)/a, and it is c2.
struct ResidueInterval {
    long long a = 0;
    bool empty_set = true;
    long long c1 = -1, c2 = -1;  // cyclic endpoints; c1 > c2 when wrapping
    bool wraps = false;
    long long contact = -1;      // residue grazing (a-1)/a, or -1
    long long count = 0;         // number of representing residues

    bool contains(long long residue) const {
        if (empty_set) return false;
        if (!wraps) return c1 <= residue && residue <= c2;
        return residue >= c1 || residue <= c2;
    }
};

ResidueInterval residue_interval(long long a, long long b, const Word& u);

// The line one grid step up: intercept c+1. Requires c <= a - 1.
GridLine shift_up(const GridLine& l);

// Positions where the length-n words of l and shift_up(l) differ. Each
// difference belongs to a 01 -> 10 swap whose upper index is a grid point of
// the shifted line; a grid point at x = 0 or x = n clips its swap to the
// single position inside the window.
struct ShiftDelta {
    std::vector<long long> positions;       // all differing letter positions
    std::vector<long long> swaps;           // k where (k, k+1) is a full swap
    std::vector<long long> boundary_edits;  // clipped positions at the window edge
};

ShiftDelta shifted_word_delta(const GridLine& l, long long n);

struct ReturnReport {
    Word factor;
    GridLine line;
    long long horizon = 0;
    std::vector<long long> occurrence_positions;
    std::vector<long long> start_residues;
    ResidueInterval interval;
    std::vector<Word> returns_in_order;
    std::vector<Word> distinct_returns;
    bool pass = false;
};

// Generates the horizon word of l, extracts the return words of u, and
// cross-checks the occurrence positions against residue-interval membership.
// At most two distinct returns can appear; more is an internal error. Throws
// std::invalid_argument when u occurs fewer than twice within the horizon.
ReturnReport returns_of_factor(const GridLine& l, const Word& u, long long horizon);

// Every factor of fibonacci_prefix(prefix_len) with length <= max_factor_len
// and at least three occurrences must have exactly two distinct return words.
// Requires prefix_len >= 100 * max_factor_len.
bool verify_two_returns_aperiodic(long long max_factor_len, long long prefix_len);

}  // namespace sturmian
