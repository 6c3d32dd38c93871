#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sturmian/geometry.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

// How a word's broken line hugs a grid line's integer points. The defining
// line passes just below the first `count` points and just above the rest
// (below_first), or just above the first `count` and just below the rest
// (above_first). count = z_count with above_first means the word passes
// through every grid point of the line.
enum class SplitMode { below_first, above_first };

struct SplitSpec {
    SplitMode mode = SplitMode::above_first;
    long long count = 0;
    friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

std::string split_mode_name(SplitMode mode);
std::ostream& operator<<(std::ostream& os, const SplitSpec& s);

struct ImageEntry {
    Word word;
    SplitSpec split;
};

// The image set m(l): all length-n words whose defining lines hug l while
// passing above a pair of its grid points straddling n/2.
struct ImageSet {
    GridLine line;
    long long n = 0;
    std::vector<ImageEntry> entries;  // distinct words, sorted by word
};

// Word built from an explicit split assignment: heights are floor((b*x+c)/a)
// off the grid points, the exact line value at a grid point assigned above,
// and one less at a grid point assigned below. Validates the split against
// the straddle condition and the intercept boundary rules.
Word word_from_split(const GridLine& l, long long n, const SplitSpec& split);

// The member of m(l) passing through every grid point; exists iff c < a.
Word through_all_word(const GridLine& l, long long n);

// Valid splits for l over the n-grid: above_first counts in
// [z_half+1, z_count] unless the line contains (0,1) (intercept 1, which
// forces the first point below), and below_first counts in [1, z_half-1]
// unless it contains (0,0) (intercept 0, first point above). The lines y = 0
// and y = x + 1 are the special cases {0^n} and the empty set.
ImageSet image_words(const GridLine& l, long long n);

// Closed form for |m(l)| without constructing the words.
long long image_cardinality(const GridLine& l, long long n);

// The unique grid line whose image contains w. Decreases the intercept of a
// sampled defining line until it touches the broken line, then pivots the
// slope at the leftmost touched point (clockwise when that point lies in the
// left half, counter-clockwise otherwise) until a second integer point is
// hit. Throws std::domain_error when w is not finite Sturmian.
GridLine locate_line(const Word& w);

// Exhaustive check that the image sets partition the length-n Sturmian words.
struct PartitionReport {
    long long n = 0;
    long long brute_count = 0;     // balanced words among all 2^n
    long long geometric_sum = 0;   // sum of |m(l)| over all grid lines
    std::vector<Word> duplicates;  // words found in more than one image
    std::vector<Word> missing;     // balanced words found in no image
    bool pass = false;
};

PartitionReport verify_partition(long long n);

struct FullContactExtension {
    Word word;      // extension w', has the input as a prefix
    GridLine line;  // the line whose through-all word w' is
};

// Smallest extension (by length, then canonical line order) of w that passes
// through every grid point of its partition line. max_length <= 0 selects a
// generous default cap; the search throws std::runtime_error if it is ever
// reached.
FullContactExtension extend_to_full_contact(const Word& w, long long max_length = 0);

}  // namespace sturmian
