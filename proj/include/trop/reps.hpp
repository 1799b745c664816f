#pragma once

#include <cstdint>

#include "trop/generators.hpp"
#include "trop/tableau.hpp"
#include "trop/word.hpp"

namespace trop {

class RepContext {
public:
    explicit RepContext(std::size_t n, std::int64_t kappa = 1) : gens_(n, kappa) {}

    std::size_t n() const noexcept { return gens_.n; }
    std::int64_t kappa() const noexcept { return gens_.kappa; }
    const GeneratorSet& gens() const noexcept { return gens_; }

private:
    GeneratorSet gens_;
};

struct PlacticImage {
    Matrix fwd;
    Matrix co;
    friend bool operator==(const PlacticImage&, const PlacticImage&) = default;
};

// Product of the generators A^(l) along w; the empty word maps to E.
Matrix mho(const RepContext& ctx, const Word& w);
inline constexpr std::size_t kFoldChunk = 32;
// Same value by balanced divide and conquer over the word.
Matrix mho_fast(const RepContext& ctx, const Word& w);
// Product of the co-generators along w.
Matrix omega(const RepContext& ctx, const Word& w);
// Product of the co-mirror matrices M^(l) along w, i.e. mho of the co-mirrored word.
Matrix omega_kappa(const RepContext& ctx, const Word& w);

bool clk_equiv(const RepContext& ctx, const Word& u, const Word& v);
bool coclk_equiv(const RepContext& ctx, const Word& u, const Word& v);
bool plc_equiv(const Word& u, const Word& v);

// Pair (c_mat, c_mat_co) of the configuration tableau of w (kappa = 1).
PlacticImage wp(const Word& w);
// Pair (mho, omega) at kappa = 1; equals wp(w).
PlacticImage wp_by_products(const RepContext& ctx, const Word& w);
PlacticImage operator*(const PlacticImage& a, const PlacticImage& b);

std::int64_t chi_plus(const Matrix& m);
std::int64_t chi_times(const Matrix& m);

// Inverse of mho on nondecreasing words at kappa = 1.
Word recover_nondecreasing(const Matrix& m);

// Pair (c_mat of ctab(perm), c_mat of ctab(reverse(perm))).
std::pair<Matrix, Matrix> sn_realization(const Word& perm);

}  // namespace trop
