#include "trop/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "trop/identity.hpp"
#include "trop/io.hpp"
#include "trop/reps.hpp"

namespace trop {

namespace {

using Key = std::vector<std::int64_t>;

CheckReport named(std::string key) {
    CheckReport r;
    r.key = std::move(key);
    return r;
}

Key key_of(const Matrix& m) {
    Key k;
    k.reserve(m.data().size());
    for (Scalar s : m.data()) k.push_back(s.raw());
    return k;
}

Key key_of(const PlacticImage& p) {
    Key k = key_of(p.fwd);
    const Key c = key_of(p.co);
    k.insert(k.end(), c.begin(), c.end());
    return k;
}

Key key_of(const YoungTableau& t) {
    Key k;
    for (const auto& row : t.rows()) {
        k.insert(k.end(), row.begin(), row.end());
        k.push_back(0);
    }
    return k;
}

void for_each_word_upto(std::size_t n, std::size_t maxlen, const std::function<void(const Word&)>& f) {
    for (std::size_t len = 0; len <= maxlen; ++len) for_each_word(n, len, f);
}

void for_each_permutation(std::size_t n, const std::function<void(const Word&)>& f) {
    std::vector<Letter> p(n);
    std::iota(p.begin(), p.end(), Letter{1});
    do f(Word(n, p));
    while (std::next_permutation(p.begin(), p.end()));
}

struct Recorder {
    CheckReport& r;
    void check(bool ok, const std::function<std::string()>& describe) {
        ++r.cases;
        if (ok) return;
        if (r.violations++ == 0) r.detail = describe();
    }
};

bool subword_matrix_holds(const RepContext& ctx, const Word& w) {
    const Matrix m = mho(ctx, w);
    const std::size_t n = ctx.n();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const Scalar s = m.at(i - 1, j - 1);
            if (i > j) {
                if (s.is_finite()) return false;
            } else if (s.is_bottom() || s.value() != static_cast<std::int64_t>(lnds_oracle(w, {i, j}))) {
                return false;
            }
        }
    return true;
}

bool commuting_holds(const RepContext& ctx, const Word& w) {
    const ConfigTableau c = ctab(w);
    return c_mat(c) == mho(ctx, w) && c_mat_co(c) == omega(ctx, w);
}

CheckReport subword_matrix(std::size_t n, std::size_t maxlen) {
    CheckReport r = named("subword-matrix");
    Recorder rec{r};
    const RepContext ctx(n);
    for_each_word_upto(n, maxlen, [&](const Word& w) {
        rec.check(subword_matrix_holds(ctx, w), [&] { return "mho differs from subword oracle at w = " + to_string(w); });
    });
    return r;
}

CheckReport commuting(std::size_t n, std::size_t maxlen) {
    CheckReport r = named("commuting");
    Recorder rec{r};
    const RepContext ctx(n);
    for_each_word_upto(n, maxlen, [&](const Word& w) {
        rec.check(commuting_holds(ctx, w), [&] { return "tableau matrices differ from products at w = " + to_string(w); });
    });
    return r;
}

CheckReport ctab_agreement(std::size_t n, std::size_t maxlen) {
    CheckReport r = named("ctab-agreement");
    Recorder rec{r};
    for_each_word_upto(n, maxlen, [&](const Word& w) {
        const YoungTableau t = tab(w);
        const ConfigTableau c = ctab(w);
        const bool ok = c.satisfies_laws() && c == tab_to_ctab(t) && ctab_to_tab(c) == t &&
                        c.shape() == t.shape() && tab(reading_word(t)) == t;
        rec.check(ok, [&] { return "encoding and bumping disagree at w = " + to_string(w); });
    });
    return r;
}

CheckReport faithful(std::size_t n, std::size_t maxlen) {
    CheckReport r = named("faithful");
    Recorder rec{r};
    std::map<Key, std::pair<Key, Word>> by_image;
    std::map<Key, std::pair<Key, Word>> by_tab;
    for_each_word_upto(n, maxlen, [&](const Word& w) {
        const Key img = key_of(wp(w));
        const Key tk = key_of(tab(w));
        auto [it, fresh] = by_image.try_emplace(img, tk, w);
        rec.check(fresh || it->second.first == tk, [&] {
            return "same image, different tableaux: " + to_string(it->second.second) + " vs " + to_string(w);
        });
        auto [jt, fresh2] = by_tab.try_emplace(tk, img, w);
        rec.check(fresh2 || jt->second.first == img, [&] {
            return "same tableau, different images: " + to_string(jt->second.second) + " vs " + to_string(w);
        });
    });
    return r;
}

CheckReport knuth_implies_clk(std::size_t n, std::size_t maxlen) {
    CheckReport r = named("knuth-implies-clk");
    Recorder rec{r};
    const RepContext ctx(n);
    std::map<Key, std::pair<PlacticImage, Word>> reps;
    for_each_word_upto(n, maxlen, [&](const Word& w) {
        PlacticImage img{mho(ctx, w), omega(ctx, w)};
        auto [it, fresh] = reps.try_emplace(key_of(tab(w)), img, w);
        rec.check(fresh || it->second.first == img, [&] {
            return "plactic-equivalent words with different images: " + to_string(it->second.second) + " vs " +
                   to_string(w);
        });
    });
    return r;
}

CheckReport co_mirror_knuth(std::size_t n, std::size_t maxlen) {
    CheckReport r = named("co-mirror-knuth");
    Recorder rec{r};
    std::map<Key, std::pair<Key, Word>> reps;
    for_each_word_upto(n, maxlen, [&](const Word& w) {
        const Key mirrored = key_of(tab(co_mirror(w)));
        auto [it, fresh] = reps.try_emplace(key_of(tab(w)), mirrored, w);
        rec.check(fresh || it->second.first == mirrored, [&] {
            return "co-mirror breaks plactic equivalence: " + to_string(it->second.second) + " vs " + to_string(w);
        });
    });
    return r;
}

std::optional<Word> knuth_rewrite(const Word& w, std::size_t k) {
    std::vector<Letter> l = w.letters();
    const Letter a = l[k], b = l[k + 1], c = l[k + 2];
    if (a <= c && c < b) std::swap(l[k], l[k + 1]);            // x z y -> z x y
    else if (b <= c && c < a) std::swap(l[k], l[k + 1]);       // z x y -> x z y
    else if (b < a && a <= c) std::swap(l[k + 1], l[k + 2]);   // y x z -> y z x
    else if (c < a && a <= b) std::swap(l[k + 1], l[k + 2]);   // y z x -> y x z
    else return std::nullopt;
    return Word(w.alphabet(), std::move(l));
}

CheckReport knuth_rewrite_invariance(std::size_t n, std::size_t maxlen) {
    CheckReport r = named("knuth-rewrite");
    Recorder rec{r};
    for_each_word_upto(n, maxlen, [&](const Word& w) {
        const YoungTableau t = tab(w);
        for (std::size_t k = 0; k + 3 <= w.size(); ++k)
            if (auto v = knuth_rewrite(w, k))
                rec.check(tab(*v) == t, [&] { return "Knuth rewrite changes tableau: " + to_string(w) + " -> " + to_string(*v); });
    });
    return r;
}

Key subword_profile(const Word& w) {
    Key k;
    const std::size_t n = w.alphabet();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) k.push_back(static_cast<std::int64_t>(lnds_oracle(w, {i, j})));
    return k;
}

CheckReport reversal(std::size_t n) {
    CheckReport r = named("reversal");
    Recorder rec{r};
    std::map<Key, std::pair<Key, Word>> by_profile;
    std::map<Key, std::pair<Key, Word>> by_tab;
    for_each_permutation(n, [&](const Word& w) {
        Key profile = subword_profile(w);
        const Key rev = subword_profile(reverse(w));
        profile.insert(profile.end(), rev.begin(), rev.end());
        const Key tk = key_of(tab(w));
        auto [it, fresh] = by_profile.try_emplace(profile, tk, w);
        rec.check(fresh || it->second.first == tk, [&] {
            return "cloaktic in both directions but tableaux differ: " + to_string(it->second.second) + " vs " +
                   to_string(w);
        });
        auto [jt, fresh2] = by_tab.try_emplace(tk, profile, w);
        rec.check(fresh2 || jt->second.first == profile, [&] {
            return "equal tableaux but not cloaktic in both directions: " + to_string(jt->second.second) + " vs " +
                   to_string(w);
        });
    });
    return r;
}

CheckReport sn_injective(std::size_t n) {
    CheckReport r = named("sn-injective");
    Recorder rec{r};
    const RepContext ctx(n);
    std::map<Key, std::pair<Key, Word>> seen;  // image -> (tableau, first permutation)
    for_each_permutation(n, [&](const Word& w) {
        const auto [fwd, back] = sn_realization(w);
        rec.check(fwd == mho(ctx, w) && back == mho(ctx, reverse(w)),
                  [&] { return "realization differs from products at " + to_string(w); });
        Key k = key_of(fwd);
        const Key kb = key_of(back);
        k.insert(k.end(), kb.begin(), kb.end());
        const Key tk = key_of(tab(w));
        auto [it, fresh] = seen.try_emplace(k, tk, w);
        rec.check(fresh || it->second.first == tk,
                  [&] { return "distinct tableaux collide: " + to_string(it->second.second) + " and " + to_string(w); });
    });
    return r;
}

// Position (row) of the unique 1 on diagonal k of a standard configuration tableau.
std::size_t unique_row(const ConfigTableau& c, std::size_t k) {
    for (std::size_t i = 1; i <= k; ++i)
        if (c.lambda(i, k) == 1) return i;
    throw std::logic_error("diagonal without a unit cell");
}

CheckReport reversal_rows(std::size_t n) {
    CheckReport r = named("reversal-rows");
    Recorder rec{r};
    for_each_permutation(n, [&](const Word& w) {
        const ConfigTableau c = ctab(w), cr = ctab(reverse(w));
        for (std::size_t k = 1; k < n; ++k) {
            const std::size_t i = unique_row(c, k), j = unique_row(c, k + 1);
            if (i >= j) continue;
            const std::size_t ip = unique_row(cr, k), jp = unique_row(cr, k + 1);
            rec.check(jp <= ip, [&] { return "row order not reversed at " + to_string(w) + ", k = " + std::to_string(k); });
        }
    });
    return r;
}

CheckReport transpose_reversal(std::size_t n) {
    CheckReport r = named("transpose-reversal");
    Recorder rec{r};
    for_each_permutation(n, [&](const Word& w) {
        rec.check(tab(reverse(w)) == transpose_standard(tab(w)),
                  [&] { return "reversal is not transposition at " + to_string(w); });
    });
    return r;
}

CheckReport axioms(std::size_t n, std::size_t max_power) {
    CheckReport r = named("axioms");
    std::ostringstream failed;
    for (const auto& a : check_axioms(n, static_cast<unsigned>(max_power))) {
        r.cases += a.cases;
        r.violations += a.violations;
        if (a.violations) failed << (failed.tellp() > 0 ? ", " : "") << a.name;
    }
    if (r.violations) r.detail = "failing: " + failed.str();
    return r;
}

Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t len) {
    std::uniform_int_distribution<int> letter(1, static_cast<int>(n));
    std::vector<Letter> l(len);
    for (auto& x : l) x = static_cast<Letter>(letter(rng));
    return Word(n, std::move(l));
}

}  // namespace

std::vector<CheckInfo> check_catalog() {
    return {
        {"subword-matrix", "mho(w)[i,j] equals the longest nondecreasing subword over [i..j]"},
        {"commuting", "c_mat(ctab(w)) = mho(w) and c_mat_co(ctab(w)) = omega(w)"},
        {"ctab-agreement", "encoding algorithm agrees with bumping; bijection round trips"},
        {"knuth-rewrite", "single Knuth rewrites preserve the tableau"},
        {"faithful", "wp(u) = wp(v) iff tab(u) = tab(v)"},
        {"knuth-implies-clk", "equal tableaux imply equal mho and omega images"},
        {"co-mirror-knuth", "equal tableaux imply equal tableaux after co-mirroring"},
        {"reversal", "permutations: tab equal iff cloaktic and reverse-cloaktic"},
        {"reversal-rows", "permutations: reversal flips the row order of adjacent unit cells"},
        {"transpose-reversal", "permutations: tab(reverse(w)) is the transpose of tab(w)"},
        {"sn-injective", "permutations: the (mho, reversed mho) realization separates standard tableaux"},
        {"axioms", "Knuth, troplactic, dual troplactic, Frobenius, decomposition (maxlen = max power)"},
    };
}

CheckReport run_check(std::string_view key, std::size_t n, std::size_t maxlen) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (key == "subword-matrix") return subword_matrix(n, maxlen);
    if (key == "commuting") return commuting(n, maxlen);
    if (key == "ctab-agreement") return ctab_agreement(n, maxlen);
    if (key == "knuth-rewrite") return knuth_rewrite_invariance(n, maxlen);
    if (key == "faithful") return faithful(n, maxlen);
    if (key == "knuth-implies-clk") return knuth_implies_clk(n, maxlen);
    if (key == "co-mirror-knuth") {
        if (n < 2) throw std::invalid_argument("co-mirror needs n >= 2");
        return co_mirror_knuth(n, maxlen);
    }
    if (key == "reversal") return reversal(n);
    if (key == "reversal-rows") return reversal_rows(n);
    if (key == "transpose-reversal") return transpose_reversal(n);
    if (key == "sn-injective") return sn_injective(n);
    if (key == "axioms") return axioms(n, maxlen);
    throw std::invalid_argument("unknown check '" + std::string(key) + "'");
}

CheckReport check_subword_matrix_random(std::uint64_t samples, std::size_t max_n, std::size_t max_len, std::uint64_t seed) {
    CheckReport r = named("subword-matrix-random");
    Recorder rec{r};
    std::mt19937_64 rng(seed);
    std::vector<RepContext> ctxs;
    for (std::size_t n = 1; n <= max_n; ++n) ctxs.emplace_back(n);
    std::uniform_int_distribution<std::size_t> pick_n(1, max_n), pick_len(0, max_len);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::size_t n = pick_n(rng);
        const Word w = random_word(rng, n, pick_len(rng));
        rec.check(subword_matrix_holds(ctxs[n - 1], w), [&] { return "mismatch at w = " + to_string(w); });
    }
    return r;
}

CheckReport check_commuting_random(std::uint64_t samples, std::size_t max_n, std::size_t max_len, std::uint64_t seed) {
    CheckReport r = named("commuting-random");
    Recorder rec{r};
    std::mt19937_64 rng(seed);
    std::vector<RepContext> ctxs;
    for (std::size_t n = 1; n <= max_n; ++n) ctxs.emplace_back(n);
    std::uniform_int_distribution<std::size_t> pick_n(1, max_n), pick_len(0, max_len);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::size_t n = pick_n(rng);
        const Word w = random_word(rng, n, pick_len(rng));
        rec.check(commuting_holds(ctxs[n - 1], w), [&] { return "mismatch at w = " + to_string(w); });
    }
    return r;
}

std::vector<AxiomResult> check_axioms(std::size_t n, unsigned max_power, std::int64_t kappa) {
    const GeneratorSet g(n, kappa);
    const auto& A = g.A;
    const auto& D = g.Acheck;
    const Matrix& E = g.E;
    std::vector<AxiomResult> out;
    auto run = [&](std::string name, const std::function<void(const std::function<void(bool)>&)>& body) {
        AxiomResult a{std::move(name)};
        body([&](bool ok) {
            ++a.cases;
            if (!ok) ++a.violations;
        });
        out.push_back(a);
    };
    const std::size_t N = n;
    auto triples = [N](const std::function<void(std::size_t, std::size_t, std::size_t)>& f) {
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p; q < N; ++q)
                for (std::size_t r = q; r < N; ++r) f(p, q, r);
    };

    run("knuth-acb", [&](auto check) {
        triples([&](auto p, auto q, auto r) {
            if (q < r) check(A[p] * A[r] * A[q] == A[r] * A[p] * A[q]);
        });
    });
    run("knuth-bac", [&](auto check) {
        triples([&](auto p, auto q, auto r) {
            if (p < q) check(A[q] * A[p] * A[r] == A[q] * A[r] * A[p]);
        });
    });
    run("knuth-distinct", [&](auto check) {
        triples([&](auto p, auto q, auto r) {
            if (q < r) check(A[p] * A[q] * A[r] != A[p] * A[r] * A[q]);
        });
    });
    run("unit-absorption", [&](auto check) {
        for (std::size_t a = 0; a < n; ++a) check(A[a] == oplus(E, A[a]));
    });
    run("descending-product-is-sum", [&](auto check) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) check(A[b] * A[a] == oplus(A[a], A[b]));
    });
    run("left-distributivity", [&](auto check) {
        triples([&](auto a, auto b, auto c) { check(A[a] * oplus(A[b], A[c]) == oplus(A[a] * A[b], A[c])); });
    });
    run("right-distributivity", [&](auto check) {
        triples([&](auto a, auto b, auto c) { check(oplus(A[a], A[b]) * A[c] == oplus(A[a], A[b] * A[c])); });
    });
    run("dual-knuth-acb", [&](auto check) {
        triples([&](auto p, auto q, auto r) {
            if (q < r) check(D[p] * D[r] * D[q] == D[r] * D[p] * D[q]);
        });
    });
    run("dual-knuth-bac", [&](auto check) {
        triples([&](auto p, auto q, auto r) {
            if (p < q) check(D[q] * D[p] * D[r] == D[q] * D[r] * D[p]);
        });
    });
    run("dual-unit-absorption", [&](auto check) {
        for (std::size_t a = 0; a < n; ++a) check(D[a] == omin(E, D[a]));
    });
    run("dual-ascending-product-is-min", [&](auto check) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) check(D[a] * D[b] == omin(D[a], D[b]));
    });
    run("dual-left-distributivity", [&](auto check) {
        triples([&](auto a, auto b, auto c) {
            if (a < b && b < c) check(omin(D[b], D[c]) * D[a] == omin(D[b] * D[a], D[c]));
        });
    });
    run("dual-right-distributivity", [&](auto check) {
        triples([&](auto a, auto b, auto c) {
            if (a < b && b < c) check(D[c] * omin(D[b], D[a]) == omin(D[a], D[c] * D[b]));
        });
    });
    run("Frobenius", [&](auto check) {
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                for (unsigned m = 1; m <= max_power; ++m)
                    check(power(oplus(A[k], A[l]), m) == oplus(power(A[k], m), power(A[l], m)));
    });
    run("Frobenius-ordered", [&](auto check) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (unsigned m = 1; m <= max_power; ++m)
                    check(power(oplus(A[a], A[b]), m) == power(A[b], m) * power(A[a], m));
    });
    run("decomposition", [&](auto check) {
        // every strictly decreasing index sequence, exponents 1..2
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::size_t> idx;
            for (std::size_t t = n; t-- > 0;)
                if (mask & (1u << t)) idx.push_back(t);
            for (unsigned e = 0; e < (1u << idx.size()); ++e) {
                Matrix prod = E, sum(n);
                for (std::size_t t = 0; t < idx.size(); ++t) {
                    const Matrix pw = power(A[idx[t]], (e >> t & 1u) ? 2u : 1u);
                    prod = prod * pw;
                    sum = oplus(sum, pw);
                }
                check(prod == sum);
            }
        }
    });
    return out;
}

namespace {

Matrix random_tmat3(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-6, 5);  // -6 stands for bottom
    Matrix m(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j)
            if (const int e = entry(rng); e >= -5) m.at(i, j) = Scalar(e);
    return m;
}

Word substitute(const Word& side, const Word& x, const Word& y) {
    Word out(x.alphabet());
    for (Letter v : side.letters()) out += v == kVarX ? x : y;
    return out;
}

}  // namespace

CheckReport check_identity_random(const Identity& id, IdentityMonoid monoid, std::uint64_t samples,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (monoid == IdentityMonoid::TMat3) {
        CheckReport r = named("identity-tmat3");
        Recorder rec{r};
        const std::function<Matrix(const Matrix&, const Matrix&)> mul = [](const Matrix& a, const Matrix& b) {
            return a * b;
        };
        for (std::uint64_t s = 0; s < samples; ++s) {
            const Matrix u = random_tmat3(rng), v = random_tmat3(rng);
            rec.check(verify_identity(id, u * v, v * u, mul), [&] {
                return "violated at U =\n" + format_matrix(u) + "V =\n" + format_matrix(v);
            });
        }
        return r;
    }
    CheckReport r = named("identity-plactic3");
    Recorder rec{r};
    const std::function<PlacticImage(const PlacticImage&, const PlacticImage&)> mul =
        [](const PlacticImage& a, const PlacticImage& b) { return a * b; };
    std::uniform_int_distribution<std::size_t> pick_len(1, 6);
    std::uint64_t tab_violations = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const Word u = random_word(rng, 3, pick_len(rng));
        const Word v = random_word(rng, 3, pick_len(rng));
        const PlacticImage pu = wp(u), pv = wp(v);
        rec.check(verify_identity(id, pu * pv, pv * pu, mul),
                  [&] { return "image violated at u = " + to_string(u) + ", v = " + to_string(v); });
        const Word x = u + v, y = v + u;
        if (tab(substitute(id.lhs, x, y)) != tab(substitute(id.rhs, x, y))) ++tab_violations;
    }
    if (tab_violations) {
        r.violations += tab_violations;
        if (r.detail.empty()) r.detail = std::to_string(tab_violations) + " tableau-level violations";
    }
    return r;
}

std::vector<BenchRow> bench_mho(std::size_t n, const std::vector<std::size_t>& lengths, std::uint64_t seed) {
    using Clock = std::chrono::steady_clock;
    const RepContext ctx(n);
    std::mt19937_64 rng(seed);
    {
        const Word warm = random_word(rng, n, 1000);
        (void)mho_fast(ctx, warm);
        (void)mho(ctx, warm);
    }
    std::vector<BenchRow> rows;
    for (std::size_t len : lengths) {
        const Word w = random_word(rng, n, len);
        BenchRow row{len};
        auto t0 = Clock::now();
        const Matrix fast = mho_fast(ctx, w);
        auto t1 = Clock::now();
        const Matrix slow = mho(ctx, w);
        auto t2 = Clock::now();
        row.fast_seconds = std::chrono::duration<double>(t1 - t0).count();
        row.fold_seconds = std::chrono::duration<double>(t2 - t1).count();
        row.equal = fast == slow;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace trop
