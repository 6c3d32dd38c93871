#include "sturmian/mapping.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "sturmian/census.hpp"

namespace sturmian {

std::string split_mode_name(SplitMode mode) {
    return mode == SplitMode::below_first ? "below-first" : "above-first";
}

std::ostream& operator<<(std::ostream& os, const SplitSpec& s) {
    return os << split_mode_name(s.mode) << ":" << s.count;
}

namespace {

const GridLine kLineY0 = GridLine::make(1, 0, 0);      // y = 0
const GridLine kLineYXp1 = GridLine::make(1, 1, 1);    // y = x + 1

struct SplitRange {
    long long zc = 0, zh = 0;
    bool allow_above = false;  // forbidden when the line contains (0,1)
    bool allow_below = false;  // forbidden when the line contains (0,0)
};

SplitRange split_range(const GridLine& l, long long n) {
    SplitRange r;
    r.zc = z_count(l, n);
    r.zh = z_half(l, n);
    r.allow_above = l.c() != l.a();
    r.allow_below = l.c() != 0;
    return r;
}

}  // namespace

Word word_from_split(const GridLine& l, long long n, const SplitSpec& split) {
    if (n < 1) throw std::invalid_argument("word_from_split: n must be >= 1");
    SplitRange r = split_range(l, n);
    if (r.zc < 2) throw std::invalid_argument("word_from_split: line has fewer than two grid points");
    if (split.mode == SplitMode::above_first) {
        if (!r.allow_above) {
            throw std::invalid_argument("word_from_split: line through (0,1) admits no above-first split");
        }
        if (split.count < r.zh + 1 || split.count > r.zc) {
            throw std::invalid_argument("word_from_split: above-first count outside [z_half+1, z_count]");
        }
    } else {
        if (!r.allow_below) {
            throw std::invalid_argument("word_from_split: line through (0,0) admits no below-first split");
        }
        if (split.count < 1 || split.count > r.zh - 1) {
            throw std::invalid_argument("word_from_split: below-first count outside [1, z_half-1]");
        }
    }

    long long a = l.a(), b = l.b(), c = l.c();
    auto pts = grid_points(l, n);
    std::vector<long long> h(static_cast<std::size_t>(n) + 1);
    std::size_t next_pt = 0;
    for (long long x = 0; x <= n; ++x) {
        long long v = b * x + c;
        if (next_pt < pts.size() && pts[next_pt].x == x) {
            bool above = (split.mode == SplitMode::above_first)
                             ? static_cast<long long>(next_pt) < split.count
                             : static_cast<long long>(next_pt) >= split.count;
            h[static_cast<std::size_t>(x)] = v / a - (above ? 0 : 1);
            ++next_pt;
        } else {
            h[static_cast<std::size_t>(x)] = v / a;  // v >= 0, plain floor
        }
    }

    std::vector<std::uint8_t> letters(static_cast<std::size_t>(n));
    for (long long k = 0; k < n; ++k) {
        long long step = h[static_cast<std::size_t>(k) + 1] - h[static_cast<std::size_t>(k)];
        if (step < 0 || step > 1) {
            // Reachable only for the slope-0/slope-1 lines whose partial
            // splits have no defining line (y = 0, y = x + 1).
            throw std::invalid_argument("word_from_split: split is not realizable on line " +
                                        l.str());
        }
        letters[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(step);
    }
    return Word(std::move(letters));
}

Word through_all_word(const GridLine& l, long long n) {
    return word_from_split(l, n, SplitSpec{SplitMode::above_first, z_count(l, n)});
}

ImageSet image_words(const GridLine& l, long long n) {
    if (n < 1) throw std::invalid_argument("image_words: n must be >= 1");
    ImageSet out{l, n, {}};
    if (l == kLineY0) {
        out.entries.push_back(
            {Word(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)),
             SplitSpec{SplitMode::above_first, n + 1}});
        return out;
    }
    if (l == kLineYXp1) return out;

    SplitRange r = split_range(l, n);
    if (r.zc < 2) {
        throw std::invalid_argument("image_words: line " + l.str() +
                                    " has fewer than two grid points in the " +
                                    std::to_string(n) + "-grid");
    }
    if (r.allow_above) {
        for (long long m = r.zh + 1; m <= r.zc; ++m) {
            SplitSpec s{SplitMode::above_first, m};
            out.entries.push_back({word_from_split(l, n, s), s});
        }
    }
    if (r.allow_below) {
        for (long long m = 1; m <= r.zh - 1; ++m) {
            SplitSpec s{SplitMode::below_first, m};
            out.entries.push_back({word_from_split(l, n, s), s});
        }
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const ImageEntry& x, const ImageEntry& y) { return x.word < y.word; });
    for (std::size_t i = 1; i < out.entries.size(); ++i) {
        if (out.entries[i].word == out.entries[i - 1].word) {
            throw std::logic_error("image_words: duplicate word in image set");
        }
    }
    return out;
}

long long image_cardinality(const GridLine& l, long long n) {
    if (n < 1) throw std::invalid_argument("image_cardinality: n must be >= 1");
    bool slope0 = l.b() == 0, slope1 = l.b() == l.a();
    bool rho0 = l.c() == 0, rho1 = l.c() == l.a();
    if (slope1 && rho1) return 0;  // y = x + 1
    if (slope0 && rho0) return 1;  // y = 0
    long long zc = z_count(l, n);
    if (zc < 2) {
        throw std::invalid_argument("image_cardinality: line " + l.str() +
                                    " has fewer than two grid points in the " +
                                    std::to_string(n) + "-grid");
    }
    long long zh = z_half(l, n);
    if (rho0) return zc - zh;      // alpha in (0,1]
    if (rho1) return zh - 1;       // alpha in [0,1)
    return zc - 1;                 // alpha, rho in (0,1)
}

GridLine locate_line(const Word& w) {
    DefiningLine sample = sample_defining_line(w);  // throws when not Sturmian
    const long long n = static_cast<long long>(w.size());
    const std::vector<long long> s = heights(w);
    const Rational& alpha = sample.alpha;

    // Drop the intercept until the line first touches the broken line.
    Rational rho_star = 0;  // k = 0 term: s_0 - 0*alpha
    for (long long k = 1; k <= n; ++k) {
        rho_star = std::max(rho_star, Rational(s[static_cast<std::size_t>(k)]) - alpha * k);
    }
    long long i = -1;
    for (long long k = 0; k <= n; ++k) {
        if (Rational(s[static_cast<std::size_t>(k)]) - alpha * k == rho_star) { i = k; break; }
    }
    const long long j = s[static_cast<std::size_t>(i)];

    // Pivot the slope at (i, j) toward the second integer point. The leftmost
    // touched point always satisfies one of the two cases.
    Rational pivot;
    if (2 * i <= n) {
        pivot = Rational(s[static_cast<std::size_t>(i) + 1] - j);
        for (long long k = i + 2; k <= n; ++k) {
            pivot = std::max(pivot, Rational(s[static_cast<std::size_t>(k)] - j, k - i));
        }
    } else {
        pivot = Rational(j - s[0], i);
        for (long long k = 1; k < i; ++k) {
            pivot = std::min(pivot, Rational(j - s[static_cast<std::size_t>(k)], i - k));
        }
    }

    long long a = static_cast<long long>(rat_den(pivot));
    long long b = static_cast<long long>(rat_num(pivot));
    return GridLine::make(a, b, a * j - b * i);
}

PartitionReport verify_partition(long long n) {
    if (n < 1) throw std::invalid_argument("verify_partition: n must be >= 1");
    if (n > brute_word_limit()) {
        throw std::invalid_argument("verify_partition: n = " + std::to_string(n) +
                                    " exceeds the exhaustive bound " +
                                    std::to_string(brute_word_limit()) +
                                    " (set STURMIAN_BRUTE_LIMIT to raise)");
    }

    PartitionReport report;
    report.n = n;

    std::map<Word, long long> owners;  // word -> number of image sets containing it
    for (const GridLine& l : enumerate_grid_lines(n)) {
        ImageSet img = image_words(l, n);
        report.geometric_sum += static_cast<long long>(img.entries.size());
        for (const ImageEntry& e : img.entries) ++owners[e.word];
    }

    for (unsigned long long bits = 0; bits < (1ULL << n); ++bits) {
        std::vector<std::uint8_t> letters(static_cast<std::size_t>(n));
        for (long long k = 0; k < n; ++k) {
            letters[static_cast<std::size_t>(k)] = (bits >> k) & 1;
        }
        Word w(std::move(letters));
        if (!is_balanced(w)) continue;
        ++report.brute_count;
        auto it = owners.find(w);
        if (it == owners.end()) report.missing.push_back(w);
    }
    for (const auto& [w, cnt] : owners) {
        if (cnt > 1) report.duplicates.push_back(w);
    }
    // Any non-balanced word sitting in an image set would leave the sums
    // unequal even with no duplicates and no misses.
    report.pass = report.duplicates.empty() && report.missing.empty() &&
                  report.geometric_sum == report.brute_count;
    return report;
}

FullContactExtension extend_to_full_contact(const Word& w, long long max_length) {
    if (!is_finite_sturmian(w)) {
        throw std::domain_error("extend_to_full_contact: word '" + w.str() +
                                "' is not finite Sturmian");
    }
    const long long n = static_cast<long long>(w.size());
    if (max_length <= 0) max_length = 4 * n + 64;

    for (long long n0 = std::max<long long>(n, 1); n0 <= max_length; ++n0) {
        for (const GridLine& l : enumerate_grid_lines(n0)) {
            if (l.c() == l.a()) continue;  // intercept 1: no through-all word
            Word candidate = through_all_word(l, n0);
            if (candidate.prefix(w.size()) == w) {
                return FullContactExtension{candidate, l};
            }
        }
    }
    throw std::runtime_error("extend_to_full_contact: no extension found up to length " +
                             std::to_string(max_length));
}

}  // namespace sturmian
