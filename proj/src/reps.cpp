#include "trop/reps.hpp"

#include <string>

namespace trop {

namespace {

void check_alphabet(const RepContext& ctx, const Word& w) {
    if (w.alphabet() != ctx.n())
        throw std::invalid_argument("word alphabet " + std::to_string(w.alphabet()) + " does not match n = " +
                                    std::to_string(ctx.n()));
}

Matrix fold(const std::vector<Matrix>& gens, const Matrix& start, const Letter* first, const Letter* last) {
    Matrix m = start;
    for (const Letter* p = first; p != last; ++p) m = m * gens[*p - 1];
    return m;
}

Matrix reduce(const std::vector<Matrix>& gens, const Matrix& unit, const Letter* first, const Letter* last) {
    const auto len = static_cast<std::size_t>(last - first);
    if (len <= kFoldChunk) return fold(gens, unit, first, last);
    const Letter* mid = first + len / 2;
    return reduce(gens, unit, first, mid) * reduce(gens, unit, mid, last);
}

}  // namespace

Matrix mho(const RepContext& ctx, const Word& w) {
    check_alphabet(ctx, w);
    const auto& l = w.letters();
    return fold(ctx.gens().A, ctx.gens().E, l.data(), l.data() + l.size());
}

Matrix mho_fast(const RepContext& ctx, const Word& w) {
    check_alphabet(ctx, w);
    const auto& l = w.letters();
    return reduce(ctx.gens().A, ctx.gens().E, l.data(), l.data() + l.size());
}

Matrix omega(const RepContext& ctx, const Word& w) {
    check_alphabet(ctx, w);
    const auto& l = w.letters();
    return fold(ctx.gens().Acheck, ctx.gens().E, l.data(), l.data() + l.size());
}

Matrix omega_kappa(const RepContext& ctx, const Word& w) {
    check_alphabet(ctx, w);
    const auto& l = w.letters();
    return fold(ctx.gens().M, ctx.gens().E, l.data(), l.data() + l.size());
}

bool clk_equiv(const RepContext& ctx, const Word& u, const Word& v) { return mho(ctx, u) == mho(ctx, v); }

bool coclk_equiv(const RepContext& ctx, const Word& u, const Word& v) { return omega(ctx, u) == omega(ctx, v); }

bool plc_equiv(const Word& u, const Word& v) { return tab(u) == tab(v); }

PlacticImage wp(const Word& w) {
    const ConfigTableau c = ctab(w);
    return {c_mat(c), c_mat_co(c)};
}

PlacticImage wp_by_products(const RepContext& ctx, const Word& w) {
    if (ctx.kappa() != 1) throw std::invalid_argument("the plactic image is defined at kappa = 1");
    return {mho(ctx, w), omega(ctx, w)};
}

PlacticImage operator*(const PlacticImage& a, const PlacticImage& b) { return {a.fwd * b.fwd, a.co * b.co}; }

std::int64_t chi_plus(const Matrix& m) {
    const Scalar t = trace(m);
    if (t.is_bottom()) throw std::domain_error("additive trace is bottom");
    return t.value();
}

std::int64_t chi_times(const Matrix& m) {
    const Scalar t = mtrace(m);
    if (t.is_bottom()) throw std::domain_error("multiplicative trace is bottom");
    return t.value();
}

Word recover_nondecreasing(const Matrix& m) {
    const std::size_t n = m.dim();
    std::vector<Letter> letters;
    std::int64_t prev = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Scalar u = m.at(0, k);
        if (u.is_bottom()) throw std::invalid_argument("top row contains bottom");
        const std::int64_t q = u.value() - prev;
        if (q < 0) throw std::invalid_argument("inconsistent matrix: negative multiplicity");
        letters.insert(letters.end(), static_cast<std::size_t>(q), static_cast<Letter>(k + 1));
        prev = u.value();
    }
    return Word(n, std::move(letters));
}

std::pair<Matrix, Matrix> sn_realization(const Word& perm) {
    if (!is_permutation(perm)) throw std::invalid_argument("sn_realization needs a permutation of 1..n");
    return {c_mat(ctab(perm)), c_mat(ctab(reverse(perm)))};
}

}  // namespace trop
