#include "sturmian/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sturmian {

Word::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
    for (auto l : letters_) {
        if (l > 1) throw std::invalid_argument("word letters must be 0 or 1");
    }
}

Word Word::from_string(std::string_view text) {
    std::vector<std::uint8_t> letters;
    letters.reserve(text.size());
    for (char ch : text) {
        if (ch == '0') letters.push_back(0);
        else if (ch == '1') letters.push_back(1);
        else throw std::invalid_argument("word text may contain only '0' and '1'");
    }
    return Word(std::move(letters));
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (auto l : letters_) out.push_back(l ? '1' : '0');
    return out;
}

Word Word::prefix(std::size_t len) const {
    if (len > size()) throw std::out_of_range("prefix longer than word");
    Word w;
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(len));
    return w;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

std::vector<long long> heights(const Word& w) {
    std::vector<long long> h(w.size() + 1, 0);
    for (std::size_t k = 0; k < w.size(); ++k) h[k + 1] = h[k] + w[k];
    return h;
}

Word reverse(const Word& w) {
    std::vector<std::uint8_t> letters(w.begin(), w.end());
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
}

bool is_palindrome(const Word& w) {
    std::size_t n = w.size();
    for (std::size_t k = 0; 2 * k < n; ++k) {
        if (w[k] != w[n - 1 - k]) return false;
    }
    return true;
}

std::vector<std::size_t> occurrences(const Word& host, const Word& u) {
    if (u.empty()) throw std::invalid_argument("occurrences: factor must be nonempty");
    std::vector<std::size_t> pos;
    if (u.size() > host.size()) return pos;
    for (std::size_t i = 0; i + u.size() <= host.size(); ++i) {
        bool hit = true;
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (host[i + k] != u[k]) { hit = false; break; }
        }
        if (hit) pos.push_back(i);
    }
    return pos;
}

std::vector<Word> return_words_in(const Word& host, const Word& u) {
    auto pos = occurrences(host, u);
    if (pos.size() < 2) {
        throw std::invalid_argument("return_words_in: factor must occur at least twice");
    }
    std::vector<Word> rets;
    rets.reserve(pos.size() - 1);
    for (std::size_t t = 0; t + 1 < pos.size(); ++t) {
        std::vector<std::uint8_t> block(host.begin() + static_cast<long>(pos[t]),
                                        host.begin() + static_cast<long>(pos[t + 1]));
        rets.emplace_back(std::move(block));
    }
    return rets;
}

std::vector<Word> distinct_return_words(const Word& host, const Word& u) {
    auto rets = return_words_in(host, u);
    std::sort(rets.begin(), rets.end());
    rets.erase(std::unique(rets.begin(), rets.end()), rets.end());
    return rets;
}

bool is_balanced(const Word& w) {
    std::size_t n = w.size();
    for (std::size_t len = 1; len < n; ++len) {
        long long ones = 0;
        for (std::size_t k = 0; k < len; ++k) ones += w[k];
        long long lo = ones, hi = ones;
        for (std::size_t i = 1; i + len <= n; ++i) {
            ones += w[i + len - 1] - w[i - 1];
            lo = std::min(lo, ones);
            hi = std::max(hi, ones);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

Word fibonacci_prefix(std::size_t n) {
    if (n < 1) throw std::invalid_argument("fibonacci_prefix: n must be >= 1");
    std::vector<std::uint8_t> cur{0};
    while (cur.size() < n) {
        std::vector<std::uint8_t> next;
        next.reserve(2 * cur.size());
        for (auto l : cur) {
            if (l == 0) { next.push_back(0); next.push_back(1); }
            else next.push_back(0);
        }
        cur = std::move(next);
    }
    cur.resize(n);
    return Word(std::move(cur));
}

}  // namespace sturmian
