#include "sturmian/returns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sturmian {

long long start_residue(const GridLine& l, long long i) {
    if (i < 0) throw std::invalid_argument("start_residue: i must be >= 0");
    return (l.b() * i + l.c()) % l.a();
}

Word factor_from_residue(long long a, long long b, long long cprime, long long len) {
    if (a < 1 || b < 0 || b > a || (a > 1 && b == a) || std::gcd(a, b == 0 ? a : b) != 1) {
        throw std::invalid_argument("factor_from_residue: need gcd(a,b)=1 with 0 <= b < a (or a = 1)");
    }
    if (cprime < 0 || cprime > a) {
        throw std::invalid_argument("factor_from_residue: need 0 <= cprime <= a");
    }
    if (len < 1 || len > 1'000'000'000) {
        throw std::invalid_argument("factor_from_residue: len out of range");
    }
    std::vector<std::uint8_t> letters(static_cast<std::size_t>(len));
    long long prev = cprime / a;
    for (long long k = 1; k <= len; ++k) {
        long long cur = (b * k + cprime) / a;
        letters[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(cur - prev);
        prev = cur;
    }
    return Word(std::move(letters));
}

ResidueInterval residue_interval(long long a, long long b, const Word& u) {
    if (u.empty()) throw std::invalid_argument("residue_interval: factor must be nonempty");
    ResidueInterval r;
    r.a = a;
    std::vector<bool> matched(static_cast<std::size_t>(a), false);
    for (long long cp = 0; cp < a; ++cp) {
        matched[static_cast<std::size_t>(cp)] =
            factor_from_residue(a, b, cp, static_cast<long long>(u.size())) == u;
        if (matched[static_cast<std::size_t>(cp)]) ++r.count;
    }
    if (r.count == 0) return r;
    r.empty_set = false;

    if (r.count == a) {
        // Possible only for a = 1; the full set is the trivial interval.
        r.c1 = 0; r.c2 = a - 1; r.wraps = false;
    } else {
        // Matched residues must form one cyclic block: exactly one matched
        // residue has an unmatched successor (c2) and one an unmatched
        // predecessor (c1).
        long long upper = -1, lower = -1;
        int upper_count = 0;
        for (long long cp = 0; cp < a; ++cp) {
            bool cur = matched[static_cast<std::size_t>(cp)];
            bool next = matched[static_cast<std::size_t>((cp + 1) % a)];
            if (cur && !next) { upper = cp; ++upper_count; }
            if (!cur && next) lower = (cp + 1) % a;
        }
        if (upper_count != 1) {
            throw std::logic_error("residue_interval: representing residues of '" + u.str() +
                                   "' do not form a cyclic interval for slope " +
                                   std::to_string(b) + "/" + std::to_string(a));
        }
        r.c1 = lower; r.c2 = upper;
        r.wraps = r.c1 > r.c2;
    }

    // Which representing residue grazes a point with y ≡ (a-1)/a: equivalent
    // to b*x + c' ≡ a-1 (mod a) for some x in [0, |u|].
    for (long long cp = 0; cp < a; ++cp) {
        if (!matched[static_cast<std::size_t>(cp)]) continue;
        for (long long x = 0; x <= static_cast<long long>(u.size()); ++x) {
            if ((b * x + cp) % a == a - 1) {
                if (r.contact != -1 && r.contact != cp) {
                    throw std::logic_error("residue_interval: multiple contact residues for '" +
                                           u.str() + "'");
                }
                r.contact = cp;
                break;
            }
        }
    }
    return r;
}

GridLine shift_up(const GridLine& l) {
    if (l.c() > l.a() - 1) {
        throw std::invalid_argument("shift_up: line " + l.str() +
                                    " already has intercept 1");
    }
    return GridLine::make(l.a(), l.b(), l.c() + 1);
}

ShiftDelta shifted_word_delta(const GridLine& l, long long n) {
    if (n < 1) throw std::invalid_argument("shifted_word_delta: n must be >= 1");
    GridLine up = shift_up(l);
    Word w = factor_from_residue(l.a(), l.b(), l.c(), n);
    Word wp = factor_from_residue(up.a(), up.b(), up.c(), n);

    ShiftDelta delta;
    for (long long k = 0; k < n; ++k) {
        if (w[static_cast<std::size_t>(k)] != wp[static_cast<std::size_t>(k)]) {
            delta.positions.push_back(k);
        }
    }

    // Pair the differences into swaps anchored at grid points of the shifted
    // line; a crossing at x = 0 or x = n leaves a single clipped edit.
    std::size_t t = 0;
    while (t < delta.positions.size()) {
        long long k = delta.positions[t];
        bool has_next = t + 1 < delta.positions.size() && delta.positions[t + 1] == k + 1;
        bool crossing_after = (up.b() * (k + 1) + up.c()) % up.a() == 0;
        if (has_next && crossing_after &&
            w[static_cast<std::size_t>(k)] == 0 && w[static_cast<std::size_t>(k) + 1] == 1 &&
            wp[static_cast<std::size_t>(k)] == 1 && wp[static_cast<std::size_t>(k) + 1] == 0) {
            delta.swaps.push_back(k);
            t += 2;
            continue;
        }
        bool clipped_left = k == 0 && up.c() % up.a() == 0 &&
                            w[0] == 1 && wp[0] == 0;
        bool clipped_right = k == n - 1 && (up.b() * n + up.c()) % up.a() == 0 &&
                             w[static_cast<std::size_t>(k)] == 0 && wp[static_cast<std::size_t>(k)] == 1;
        if (clipped_left || clipped_right) {
            delta.boundary_edits.push_back(k);
            ++t;
            continue;
        }
        throw std::logic_error("shifted_word_delta: difference at position " + std::to_string(k) +
                               " is not a 01->10 swap at a grid point of " + up.str());
    }
    return delta;
}

ReturnReport returns_of_factor(const GridLine& l, const Word& u, long long horizon) {
    if (u.empty()) throw std::invalid_argument("returns_of_factor: factor must be nonempty");
    if (horizon < static_cast<long long>(u.size())) {
        throw std::invalid_argument("returns_of_factor: horizon shorter than the factor");
    }
    ReturnReport report;
    report.factor = u;
    report.line = l;
    report.horizon = horizon;

    Word host = factor_from_residue(l.a(), l.b(), l.c(), horizon);
    auto occ = occurrences(host, u);
    if (occ.size() < 2) {
        throw std::invalid_argument("returns_of_factor: '" + u.str() +
                                    "' occurs fewer than twice within horizon " +
                                    std::to_string(horizon));
    }
    for (auto p : occ) report.occurrence_positions.push_back(static_cast<long long>(p));
    for (auto p : occ) report.start_residues.push_back(start_residue(l, static_cast<long long>(p)));

    report.interval = residue_interval(l.a(), l.b(), u);

    // The occurrences must be exactly the positions whose start residue
    // falls in the interval.
    bool residues_agree = true;
    std::size_t next = 0;
    for (long long i = 0; i + static_cast<long long>(u.size()) <= horizon; ++i) {
        bool in_interval = report.interval.contains(start_residue(l, i));
        bool is_occurrence = next < occ.size() && static_cast<long long>(occ[next]) == i;
        if (is_occurrence) ++next;
        if (in_interval != is_occurrence) { residues_agree = false; break; }
    }

    report.returns_in_order = return_words_in(host, u);
    report.distinct_returns = distinct_return_words(host, u);
    if (report.distinct_returns.size() > 2) {
        throw std::logic_error("returns_of_factor: factor '" + u.str() + "' of line " +
                               l.str() + " produced more than two distinct returns");
    }
    report.pass = residues_agree;
    return report;
}

bool verify_two_returns_aperiodic(long long max_factor_len, long long prefix_len) {
    if (max_factor_len < 1) {
        throw std::invalid_argument("verify_two_returns_aperiodic: factor length must be >= 1");
    }
    if (prefix_len < 100 * max_factor_len) {
        throw std::invalid_argument(
            "verify_two_returns_aperiodic: prefix_len must be at least 100 * max_factor_len");
    }
    Word host = fibonacci_prefix(static_cast<std::size_t>(prefix_len));
    std::string text = host.str();

    for (long long len = 1; len <= max_factor_len; ++len) {
        std::unordered_map<std::string, std::vector<long long>> positions;
        for (long long i = 0; i + len <= prefix_len; ++i) {
            positions[text.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(len))]
                .push_back(i);
        }
        for (const auto& [factor, occ] : positions) {
            if (occ.size() < 3) continue;  // fewer than two complete return windows
            std::vector<std::string> returns;
            for (std::size_t t = 0; t + 1 < occ.size(); ++t) {
                returns.push_back(text.substr(static_cast<std::size_t>(occ[t]),
                                              static_cast<std::size_t>(occ[t + 1] - occ[t])));
            }
            std::sort(returns.begin(), returns.end());
            returns.erase(std::unique(returns.begin(), returns.end()), returns.end());
            if (returns.size() != 2) return false;
        }
    }
    return true;
}

}  // namespace sturmian
