#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trop/word.hpp"

namespace trop {

inline constexpr Letter kVarX = 1;
inline constexpr Letter kVarY = 2;

// Two-variable semigroup law lhs = rhs over the variables x = 1, y = 2.
struct Identity {
    Word lhs;
    Word rhs;
    friend bool operator==(const Identity&, const Identity&) = default;
};

// Printed with variable names x and y, e.g. "yxxyyxxyxxyyx = yxxyyxyyxxyyx".
std::string to_string(const Identity& id);
// Variable words use x/y; a and b are accepted as synonyms.
Word parse_variable_word(std::string_view text);

inline constexpr std::size_t kMaxFactorEnumeration = 1'000'000;

// (a) no letter repeats more than p times in a row and (b) every length-n word
// over w's alphabet that obeys (a) occurs as a factor.
bool is_npower_word(const Word& w, std::size_t p, std::size_t n);

// Catalogued n-power words for (p, n) in {(2,2), (3,3)}.
std::optional<Word> catalog_npower_word(std::size_t p, std::size_t n);

// w x w = w y w, built from the catalogued word or from `supplied`.
Identity build_identity(std::size_t p, std::size_t n, const std::optional<Word>& supplied = std::nullopt);
// Substitutes x -> xy and y -> yx on both sides.
Identity refine_identity(const Identity& id);

template <class T>
T evaluate(const Word& w, const T& x, const T& y, const std::function<T(const T&, const T&)>& product) {
    if (w.empty()) throw std::invalid_argument("cannot evaluate an empty side");
    T acc = w[0] == kVarX ? x : y;
    for (std::size_t k = 1; k < w.size(); ++k) acc = product(acc, w[k] == kVarX ? x : y);
    return acc;
}

template <class T, class Eq = std::equal_to<T>>
bool verify_identity(const Identity& id, const T& x, const T& y,
                     const std::function<T(const T&, const T&)>& product, Eq eq = Eq{}) {
    return eq(evaluate(id.lhs, x, y, product), evaluate(id.rhs, x, y, product));
}

}  // namespace trop
