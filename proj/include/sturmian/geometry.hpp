#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/rational.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

struct GridPoint {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

std::ostream& operator<<(std::ostream& os, const GridPoint& p);

// Canonical line y = (b*x + c)/a with a >= 1, 0 <= b <= a, 0 <= c <= a and
// gcd(a, b) = 1 (so b = 0 forces a = 1). Slope b/a and intercept c/a both lie
// in [0,1]; c = 0 and c = a are distinct lines. Text form "a:b:c".
class GridLine {
public:
    GridLine() = default;  // y = 0

    // Reduces b/a to lowest terms, rescaling c by the same factor; rejects
    // input whose intercept has no representation over the reduced
    // denominator, and any range violation.
    static GridLine make(long long a, long long b, long long c);
    static GridLine parse(std::string_view text);

    long long a() const { return a_; }
    long long b() const { return b_; }
    long long c() const { return c_; }

    Rational slope() const { return Rational(b_, a_); }
    Rational intercept() const { return Rational(c_, a_); }

    std::string str() const;

    friend bool operator==(const GridLine&, const GridLine&) = default;
    // Canonical enumeration order: a, then b, then c.
    friend auto operator<=>(const GridLine&, const GridLine&) = default;

private:
    long long a_ = 1, b_ = 0, c_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GridLine& l);

// Line y = alpha*x + rho with alpha, rho strictly inside (0,1); generates a
// word through the mechanical formula.
struct DefiningLine {
    Rational alpha;
    Rational rho;
};

// Integer points (x, y) on the line with 0 <= x <= n, sorted by x.
// Consecutive points are exactly a apart in x.
std::vector<GridPoint> grid_points(const GridLine& l, long long n);

// Number of integer points with 0 <= x <= n.
long long z_count(const GridLine& l, long long n);
// Number of integer points with 2x <= n.
long long z_half(const GridLine& l, long long n);

// All canonical grid lines with slope and intercept in [0,1] having at least
// two integer points in the n-grid, in canonical order.
std::vector<GridLine> enumerate_grid_lines(long long n);

// Letter k is floor((k+1)*alpha + rho) - floor(k*alpha + rho), evaluated
// exactly. Requires 0 < alpha < 1, 0 < rho < 1, n >= 1.
Word word_from_defining_line(const Rational& alpha, const Rational& rho, long long n);

// The region of defining lines (alpha, rho) reproducing a word with heights
// s_0..s_n: for every k, s_k <= k*alpha + rho < s_k + 1 (lower bounds closed,
// upper bounds open), with 0 < alpha < 1 and 0 < rho < 1. Feasibility is
// decided exactly; a deterministic interior witness is available whenever the
// region is nonempty.
class FeasibilityPolygon {
public:
    explicit FeasibilityPolygon(const Word& w);

    long long n() const { return static_cast<long long>(s_.size()) - 1; }
    const std::vector<long long>& word_heights() const { return s_; }

    // Strict/closed membership following the constraint pattern above.
    bool contains(const Rational& alpha, const Rational& rho) const;

    bool is_empty() const;

    // Centroid of the first three affinely independent boundary points of the
    // closed relaxation (a superset of its vertex set, enumerated in sorted
    // order); such a centroid always lies strictly inside the open region.
    // nullopt when the region is empty.
    std::optional<DefiningLine> interior_point() const;

private:
    std::vector<long long> s_;  // heights s_0 .. s_n
};

FeasibilityPolygon feasibility_polygon(const Word& w);

// A word is finite Sturmian iff its feasibility polygon is nonempty.
bool is_finite_sturmian(const Word& w);

// Deterministic rational witness strictly inside the polygon; the generated
// word reproduces w. Throws std::domain_error when w is not finite Sturmian.
DefiningLine sample_defining_line(const Word& w);

}  // namespace sturmian
