#include "trop/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace trop {

namespace {

void check_letter(std::size_t n, std::size_t l) {
    if (l < 1 || l > n)
        throw std::out_of_range("letter " + std::to_string(l) + " outside alphabet 1.." + std::to_string(n));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Word::Word(std::size_t n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
    if (n_ == 0) throw std::out_of_range("alphabet size must be positive");
    for (Letter l : letters_) check_letter(n_, l);
}

void Word::push_back(Letter l) {
    check_letter(n_, l);
    letters_.push_back(l);
}

Word& Word::operator+=(const Word& other) {
    if (other.n_ != n_) throw std::invalid_argument("concatenating words over different alphabets");
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

Word parse_word(std::string_view text, std::size_t n) {
    if (n == 0) throw std::out_of_range("alphabet size must be positive");
    if (n > 0xFFFF) throw std::out_of_range("alphabet size too large");
    text = trim(text);
    std::vector<Letter> letters;
    if (text.empty()) return Word(n, {});
    const bool alpha = std::all_of(text.begin(), text.end(), [](char c) { return c >= 'a' && c <= 'z'; });
    if (alpha) {
        for (char c : text) {
            const std::size_t l = static_cast<std::size_t>(c - 'a') + 1;
            if (l > n) throw ParseError("letter '" + std::string(1, c) + "' outside alphabet of size " + std::to_string(n));
            letters.push_back(static_cast<Letter>(l));
        }
        return Word(n, std::move(letters));
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t dot = std::min(text.find('.', pos), text.size());
        const std::string_view tok = text.substr(pos, dot - pos);
        unsigned long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("malformed word '" + std::string(text) + "'");
        if (v < 1 || v > n)
            throw ParseError("letter " + std::to_string(v) + " outside alphabet of size " + std::to_string(n));
        letters.push_back(static_cast<Letter>(v));
        pos = dot + 1;
    }
    return Word(n, std::move(letters));
}

std::string to_string(const Word& w) {
    std::string s;
    if (w.alphabet() <= 26) {
        for (Letter l : w.letters()) s.push_back(static_cast<char>('a' + l - 1));
        return s;
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s.push_back('.');
        s += std::to_string(w[k]);
    }
    return s;
}

Word reverse(const Word& w) {
    std::vector<Letter> r(w.letters().rbegin(), w.letters().rend());
    return Word(w.alphabet(), std::move(r));
}

Word co_mirror(const Word& w) {
    const std::size_t n = w.alphabet();
    if (n < 2) throw std::invalid_argument("co-mirror needs an alphabet of at least two letters");
    std::vector<Letter> out;
    out.reserve(w.size() * (n - 1));
    for (Letter l : w.letters()) {
        const std::size_t skip = n - l + 1;
        for (std::size_t t = n; t >= 1; --t)
            if (t != skip) out.push_back(static_cast<Letter>(t));
    }
    return Word(n, std::move(out));
}

Word iterate_co_mirror(const Word& w, unsigned k) {
    Word r = w;
    for (unsigned i = 0; i < k; ++i) r = co_mirror(r);
    return r;
}

Word shift_letters(const Word& w, std::size_t shift) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w.letters()) out.push_back(static_cast<Letter>(l + shift));
    return Word(w.alphabet() + shift, std::move(out));
}

namespace {
void check_range(const Word& w, ConvexRange r) {
    if (r.lo < 1 || r.lo > r.hi || r.hi > w.alphabet()) throw std::out_of_range("sub-alphabet outside 1..n");
}
}  // namespace

std::size_t lnds_oracle(const Word& w, ConvexRange r) {
    check_range(w, r);
    std::vector<std::size_t> best(w.size(), 0);
    std::size_t answer = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const Letter x = w[k];
        if (x < r.lo || x > r.hi) continue;
        std::size_t b = 0;
        for (std::size_t t = 0; t < k; ++t)
            if (best[t] > 0 && w[t] <= x) b = std::max(b, best[t]);
        best[k] = b + 1;
        answer = std::max(answer, best[k]);
    }
    return answer;
}

std::size_t lnds_enum(const Word& w, ConvexRange r) {
    check_range(w, r);
    if (w.size() > kMaxEnumLength) throw std::length_error("enumeration oracle capped at 20 letters");
    std::size_t answer = 0;
    const std::uint32_t total = 1u << w.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::size_t count = 0;
        Letter prev = 0;
        bool ok = true;
        for (std::size_t k = 0; k < w.size() && ok; ++k) {
            if (!(mask & (1u << k))) continue;
            const Letter x = w[k];
            ok = x >= r.lo && x <= r.hi && x >= prev;
            prev = x;
            ++count;
        }
        if (ok) answer = std::max(answer, count);
    }
    return answer;
}

bool clk_equiv_oracle(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet()) throw std::invalid_argument("words over different alphabets");
    const std::size_t n = u.alphabet();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            if (lnds_oracle(u, {i, j}) != lnds_oracle(v, {i, j})) return false;
    return true;
}

bool is_nondecreasing(const Word& w) { return std::is_sorted(w.letters().begin(), w.letters().end()); }

bool is_permutation(const Word& w) {
    if (w.size() != w.alphabet()) return false;
    std::vector<bool> seen(w.alphabet() + 1, false);
    for (Letter l : w.letters()) {
        if (seen[l]) return false;
        seen[l] = true;
    }
    return true;
}

}  // namespace trop
