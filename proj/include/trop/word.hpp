#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trop {

using Letter = std::uint16_t;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Finite word over the ordered alphabet a_1 < ... < a_n; letters are 1-based.
class Word {
public:
    Word() = default;
    explicit Word(std::size_t n, std::vector<Letter> letters = {});

    std::size_t alphabet() const noexcept { return n_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t k) const { return letters_[k]; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

    void push_back(Letter l);
    Word& operator+=(const Word& other);
    friend Word operator+(Word a, const Word& b) { return a += b; }
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Letter> letters_;
};

// Letters a..z when n <= 26, otherwise dot-separated integers. Both forms parse
// for any n (a purely numeric string such as "3" is read as a dotted word).
Word parse_word(std::string_view text, std::size_t n);
std::string to_string(const Word& w);

// The convex sub-alphabet {a_lo, ..., a_hi}.
struct ConvexRange {
    std::size_t lo;
    std::size_t hi;
};

Word reverse(const Word& w);
// Each a_l becomes a_n a_{n-1} ... a_1 with a_{n-l+1} left out.
Word co_mirror(const Word& w);
Word iterate_co_mirror(const Word& w, unsigned k);
// Relabels a_l as a_{l+shift} over the alphabet of size n + shift.
Word shift_letters(const Word& w, std::size_t shift);

// Longest nondecreasing subword using only letters in r (dynamic programming).
std::size_t lnds_oracle(const Word& w, ConvexRange r);
// Same quantity by enumerating all subwords; len(w) <= kMaxEnumLength.
inline constexpr std::size_t kMaxEnumLength = 20;
std::size_t lnds_enum(const Word& w, ConvexRange r);
bool clk_equiv_oracle(const Word& u, const Word& v);

bool is_nondecreasing(const Word& w);
bool is_permutation(const Word& w);

// Every word of length len over n letters, in lexicographic order.
template <class F>
void for_each_word(std::size_t n, std::size_t len, F&& f) {
    std::vector<Letter> cur(len, 1);
    while (true) {
        f(Word(n, cur));
        std::size_t k = len;
        while (k > 0 && cur[k - 1] == n) cur[--k] = 1;
        if (k == 0) return;
        ++cur[k - 1];
    }
}

}  // namespace trop
