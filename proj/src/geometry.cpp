#include "sturmian/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

namespace sturmian {

std::ostream& operator<<(std::ostream& os, const GridPoint& p) {
    return os << "(" << p.x << "," << p.y << ")";
}

// Denominators and grid sizes are capped so every b*x + c stays well inside
// 64 bits; the library targets desk-scale enumeration, not astronomic lines.
constexpr long long kMaxCoordinate = 1'000'000'000;

GridLine GridLine::make(long long a, long long b, long long c) {
    if (a < 1) throw std::invalid_argument("grid line: a must be >= 1");
    if (a > kMaxCoordinate) throw std::invalid_argument("grid line: denominator too large");
    if (b < 0 || b > a) throw std::invalid_argument("grid line: need 0 <= b <= a");
    if (c < 0 || c > a) throw std::invalid_argument("grid line: need 0 <= c <= a");
    long long g = std::gcd(a, b);  // b == 0 gives g = a, forcing a' = 1
    if (g > 1) {
        if (c % g != 0) {
            throw std::invalid_argument(
                "grid line " + std::to_string(a) + ":" + std::to_string(b) + ":" +
                std::to_string(c) + ": intercept has no representation over denominator " +
                std::to_string(a / g));
        }
        a /= g; b /= g; c /= g;
    }
    GridLine l;
    l.a_ = a; l.b_ = b; l.c_ = c;
    return l;
}

GridLine GridLine::parse(std::string_view text) {
    long long v[3];
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t colon = (i < 2) ? text.find(':', start) : text.size();
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("bad grid line '" + std::string(text) + "', expected a:b:c");
        }
        try {
            v[i] = std::stoll(std::string(text.substr(start, colon - start)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad grid line '" + std::string(text) + "', expected a:b:c");
        }
        start = colon + 1;
    }
    return make(v[0], v[1], v[2]);
}

std::string GridLine::str() const {
    return std::to_string(a_) + ":" + std::to_string(b_) + ":" + std::to_string(c_);
}

std::ostream& operator<<(std::ostream& os, const GridLine& l) { return os << l.str(); }

namespace {

// Smallest x >= 0 with b*x + c ≡ 0 (mod a), or -1 if none (impossible while
// gcd(a,b) = 1 except for the b = 0, a = 1 case which yields 0).
long long first_grid_x(const GridLine& l) {
    long long a = l.a(), b = l.b(), c = l.c();
    if (a == 1) return 0;
    for (long long x = 0; x < a; ++x) {
        if ((b * x + c) % a == 0) return x;
    }
    return -1;
}

}  // namespace

namespace {

void check_grid_size(long long n, const char* who) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
    if (n > kMaxCoordinate) throw std::invalid_argument(std::string(who) + ": n too large");
}

}  // namespace

std::vector<GridPoint> grid_points(const GridLine& l, long long n) {
    check_grid_size(n, "grid_points");
    std::vector<GridPoint> pts;
    long long x0 = first_grid_x(l);
    if (x0 < 0) return pts;
    for (long long x = x0; x <= n; x += l.a()) {
        pts.push_back(GridPoint{x, (l.b() * x + l.c()) / l.a()});
    }
    return pts;
}

long long z_count(const GridLine& l, long long n) {
    check_grid_size(n, "z_count");
    long long x0 = first_grid_x(l);
    if (x0 < 0 || x0 > n) return 0;
    return (n - x0) / l.a() + 1;
}

long long z_half(const GridLine& l, long long n) {
    check_grid_size(n, "z_half");
    long long half = n / 2;  // 2x <= n  <=>  x <= floor(n/2)
    long long x0 = first_grid_x(l);
    if (x0 < 0 || x0 > half) return 0;
    return (half - x0) / l.a() + 1;
}

std::vector<GridLine> enumerate_grid_lines(long long n) {
    if (n < 1) throw std::invalid_argument("enumerate_grid_lines: n must be >= 1");
    std::vector<GridLine> lines;
    for (long long a = 1; a <= n; ++a) {
        for (long long b = 0; b <= a; ++b) {
            if (b == 0 && a != 1) continue;
            if (std::gcd(a, b) > 1) continue;
            for (long long c = 0; c <= a; ++c) {
                GridLine l = GridLine::make(a, b, c);
                if (z_count(l, n) >= 2) lines.push_back(l);
            }
        }
    }
    return lines;
}

Word word_from_defining_line(const Rational& alpha, const Rational& rho, long long n) {
    if (!(alpha > 0 && alpha < 1) || !(rho > 0 && rho < 1)) {
        throw std::invalid_argument("defining line requires alpha, rho in (0,1)");
    }
    if (n < 1) throw std::invalid_argument("word_from_defining_line: n must be >= 1");
    std::vector<std::uint8_t> letters;
    letters.reserve(static_cast<std::size_t>(n));
    Int prev = floor_rat(rho);
    for (long long k = 1; k <= n; ++k) {
        Int cur = floor_rat(alpha * k + rho);
        letters.push_back(static_cast<std::uint8_t>(cur - prev));
        prev = cur;
    }
    return Word(std::move(letters));
}

FeasibilityPolygon::FeasibilityPolygon(const Word& w) {
    if (w.empty()) throw std::invalid_argument("feasibility polygon needs a nonempty word");
    s_ = heights(w);
}

bool FeasibilityPolygon::contains(const Rational& alpha, const Rational& rho) const {
    if (!(alpha > 0 && alpha < 1 && rho > 0 && rho < 1)) return false;
    for (std::size_t k = 0; k < s_.size(); ++k) {
        Rational v = alpha * static_cast<long long>(k) + rho;
        if (v < s_[k] || v >= s_[k] + 1) return false;
    }
    return true;
}

namespace {

struct Frac {
    long long num, den;  // den > 0, reduced
    friend auto operator<=>(const Frac&, const Frac&) = default;
};

Frac reduce(long long num, long long den) {
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    return Frac{num, den};
}

// With alpha = p/d fixed, rho must satisfy
//   max(0, max_k(s_k - k*alpha)) <clamped by constraint openness> rho
//   rho < min(1, min_k(s_k + 1 - k*alpha)).
// Scaled by d: lo = max(0, max(s_k*d - k*p)), hi = min(d, min(s_k*d - k*p) + d).
// Some rho exists iff lo < hi (upper bounds are all open; the closed lower
// bounds admit equality, and the lo = 0 clamp still leaves room when hi > 0).
struct RhoRange {
    long long lo, hi;  // numerators over denominator d
};

RhoRange rho_range(const std::vector<long long>& s, long long p, long long d) {
    long long worst_lo = 0, worst_hi = d;
    long long n = static_cast<long long>(s.size()) - 1;
    for (long long k = 0; k <= n; ++k) {
        long long v = s[static_cast<std::size_t>(k)] * d - k * p;
        worst_lo = std::max(worst_lo, v);
        worst_hi = std::min(worst_hi, v + d);
    }
    return RhoRange{worst_lo, worst_hi};
}

// Slope candidates (s_j - s_k + shift)/(j - k) clamped to [0,1], plus the
// endpoints. shifts = {0} covers every breakpoint of the lower and upper
// envelopes (enough for feasibility); {-1, 0, 1} additionally covers every
// crossing between the two envelopes and the box, so the boundary points at
// these slopes include every vertex of the closed relaxation.
std::set<Frac> slope_candidates(const std::vector<long long>& s, bool extended) {
    std::set<Frac> cands{Frac{0, 1}, Frac{1, 1}};
    long long n = static_cast<long long>(s.size()) - 1;
    for (long long k = 0; k <= n; ++k) {
        for (long long j = k + 1; j <= n; ++j) {
            long long base = s[static_cast<std::size_t>(j)] - s[static_cast<std::size_t>(k)];
            for (long long shift = extended ? -1 : 0; shift <= (extended ? 1 : 0); ++shift) {
                long long num = base + shift;
                if (num < 0 || num > j - k) continue;
                cands.insert(reduce(num, j - k));
            }
        }
    }
    return cands;
}

}  // namespace

bool FeasibilityPolygon::is_empty() const {
    for (const Frac& f : slope_candidates(s_, /*extended=*/false)) {
        RhoRange r = rho_range(s_, f.num, f.den);
        if (r.lo < r.hi) return false;
    }
    return true;
}

std::optional<DefiningLine> FeasibilityPolygon::interior_point() const {
    // Boundary points (alpha, lo/d) and (alpha, hi/d) of the closed
    // relaxation at every candidate slope; this set contains all of its
    // vertices, so three affinely independent points exist exactly when the
    // region is full-dimensional, i.e. when the open region is nonempty.
    std::vector<std::pair<Rational, Rational>> pts;
    for (const Frac& f : slope_candidates(s_, /*extended=*/true)) {
        RhoRange r = rho_range(s_, f.num, f.den);
        if (r.lo > r.hi) continue;
        Rational alpha(f.num, f.den);
        pts.emplace_back(alpha, Rational(r.lo, f.den));
        pts.emplace_back(alpha, Rational(r.hi, f.den));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // First two points in sorted order, then the first point not collinear
    // with them; if none exists the region is degenerate (empty interior).
    if (pts.size() < 3) return std::nullopt;
    const auto& [x1, y1] = pts[0];
    const auto& [x2, y2] = pts[1];
    for (std::size_t k = 2; k < pts.size(); ++k) {
        const auto& [x3, y3] = pts[k];
        Rational cross = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1);
        if (cross != 0) {
            return DefiningLine{(x1 + x2 + x3) / 3, (y1 + y2 + y3) / 3};
        }
    }
    return std::nullopt;
}

FeasibilityPolygon feasibility_polygon(const Word& w) { return FeasibilityPolygon(w); }

bool is_finite_sturmian(const Word& w) { return !FeasibilityPolygon(w).is_empty(); }

DefiningLine sample_defining_line(const Word& w) {
    auto witness = FeasibilityPolygon(w).interior_point();
    if (!witness) {
        throw std::domain_error("sample_defining_line: word '" + w.str() +
                                "' is not finite Sturmian");
    }
    return *witness;
}

}  // namespace sturmian
