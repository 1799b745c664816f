#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trop/identity.hpp"

namespace trop {

struct CheckReport {
    std::string key;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    std::string detail;  // first counterexample, or a summary
    bool passed() const noexcept { return violations == 0; }
};

// Names accepted by run_check, each with a one-line description.
struct CheckInfo {
    std::string key;
    std::string description;
};
std::vector<CheckInfo> check_catalog();

// Runs a named property over all words of length <= maxlen over n letters
// (permutation-based checks ignore maxlen; "axioms" reads it as the power bound).
// Throws std::invalid_argument for an unknown key.
CheckReport run_check(std::string_view key, std::size_t n, std::size_t maxlen);

// Matrix entries against the subword oracle on random words.
CheckReport check_subword_matrix_random(std::uint64_t samples, std::size_t max_n, std::size_t max_len,
                                   std::uint64_t seed);
CheckReport check_commuting_random(std::uint64_t samples, std::size_t max_n, std::size_t max_len,
                                   std::uint64_t seed);

struct AxiomResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
};
// Knuth relations, troplactic axioms, their duals (strict index triples), Frobenius (m <= max_power)
// and the decreasing-word decomposition for generators of size n.
std::vector<AxiomResult> check_axioms(std::size_t n, unsigned max_power, std::int64_t kappa = 1);

enum class IdentityMonoid {
    TMat3,     // 3x3 upper triangular matrices, entries in {-5..5, bottom}
    Plactic3,  // words over 3 letters, compared by their plactic image and tableau
};
// Evaluates the identity at x = uv, y = vu for random u, v.
CheckReport check_identity_random(const Identity& id, IdentityMonoid monoid, std::uint64_t samples,
                                  std::uint64_t seed);

struct BenchRow {
    std::size_t length = 0;
    double fast_seconds = 0;  // divide and conquer
    double fold_seconds = 0;  // sequential left fold
    bool equal = false;
};
// Times mho_fast and the sequential fold on uniform random words; a warm-up
// run precedes the measurements.
std::vector<BenchRow> bench_mho(std::size_t n, const std::vector<std::size_t>& lengths, std::uint64_t seed);

}  // namespace trop
