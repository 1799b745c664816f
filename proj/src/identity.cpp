#include "trop/identity.hpp"

#include <cmath>
#include <unordered_set>

namespace trop {

namespace {

std::size_t max_run(const std::vector<Letter>& v) {
    std::size_t best = 0, run = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        run = (k > 0 && v[k] == v[k - 1]) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

std::uint64_t encode(const Letter* first, std::size_t len, std::size_t base) {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < len; ++k) code = code * base + (first[k] - 1);
    return code;
}

}  // namespace

std::string to_string(const Identity& id) {
    auto side = [](const Word& w) {
        std::string s;
        for (Letter l : w.letters()) s.push_back(l == kVarX ? 'x' : 'y');
        return s;
    };
    return side(id.lhs) + " = " + side(id.rhs);
}

Word parse_variable_word(std::string_view text) {
    std::vector<Letter> letters;
    for (char c : text) {
        if (c == 'x' || c == 'a') letters.push_back(kVarX);
        else if (c == 'y' || c == 'b') letters.push_back(kVarY);
        else if (c == ' ') continue;
        else throw ParseError("variable words use only x and y");
    }
    return Word(2, std::move(letters));
}

bool is_npower_word(const Word& w, std::size_t p, std::size_t n) {
    const std::size_t c = w.alphabet();
    if (p == 0 || n == 0) throw std::invalid_argument("p and n must be positive");
    if (std::pow(static_cast<double>(c), static_cast<double>(n)) > static_cast<double>(kMaxFactorEnumeration))
        throw std::length_error("n-power check: enumeration of |C|^n words exceeds cap");
    if (max_run(w.letters()) > p) return false;

    std::unordered_set<std::uint64_t> factors;
    for (std::size_t k = 0; k + n <= w.size(); ++k) factors.insert(encode(w.letters().data() + k, n, c));

    bool all_present = true;
    for_each_word(c, n, [&](const Word& f) {
        if (!all_present || max_run(f.letters()) > p) return;
        if (!factors.count(encode(f.letters().data(), n, c))) all_present = false;
    });
    return all_present;
}

std::optional<Word> catalog_npower_word(std::size_t p, std::size_t n) {
    if (p == 2 && n == 2) return parse_variable_word("yxxyyx");
    if (p == 3 && n == 3) return parse_variable_word("xyyyxyxxxy");
    return std::nullopt;
}

Identity build_identity(std::size_t p, std::size_t n, const std::optional<Word>& supplied) {
    Word w;
    if (supplied) {
        w = *supplied;
        if (w.alphabet() != 2) throw std::invalid_argument("identity words are over the two variables x, y");
    } else {
        auto cat = catalog_npower_word(p, n);
        if (!cat)
            throw std::invalid_argument("no catalogued n-power word for (p, n) = (" + std::to_string(p) + ", " +
                                        std::to_string(n) + "); supply one");
        w = *cat;
    }
    Identity id{w + Word(2, {kVarX}) + w, w + Word(2, {kVarY}) + w};
    if (!is_npower_word(w, p, n) || !is_npower_word(id.lhs, p, n) || !is_npower_word(id.rhs, p, n))
        throw std::invalid_argument("word does not satisfy the n-power conditions");
    return id;
}

Identity refine_identity(const Identity& id) {
    auto sub = [](const Word& w) {
        std::vector<Letter> out;
        for (Letter l : w.letters()) {
            if (l == kVarX) out.insert(out.end(), {kVarX, kVarY});
            else out.insert(out.end(), {kVarY, kVarX});
        }
        return Word(2, std::move(out));
    };
    return {sub(id.lhs), sub(id.rhs)};
}

}  // namespace trop
