#pragma once

#include <cstdint>
#include <vector>

#include "trop/matrix.hpp"

namespace trop {

// Matrix with kappa on rows 1..p × columns q..n and bottom elsewhere.
Matrix flat_corner(std::size_t n, std::size_t p, std::size_t q, std::int64_t kappa);
Matrix gen_F(std::size_t n, std::size_t l, std::int64_t kappa);
// Upper triangular idempotent: 0 on and above the diagonal.
Matrix layout_E(std::size_t n);
Matrix gen_A(std::size_t n, std::size_t l, std::int64_t kappa);
// Co-generator: -kappa at (n-l+1, n-l+1), 0 elsewhere on and above the diagonal.
Matrix co_gen_A(std::size_t n, std::size_t l, std::int64_t kappa);
// Product A^(n) ... A^(1) with the factor A^(n-l+1) left out.
Matrix co_mirror_M(std::size_t n, std::size_t l, std::int64_t kappa);

struct GeneratorSet {
    GeneratorSet(std::size_t n, std::int64_t kappa = 1);

    std::size_t n;
    std::int64_t kappa;
    Matrix E;
    std::vector<Matrix> A;       // A[l-1] = A^(l)
    std::vector<Matrix> Acheck;  // Acheck[l-1] = co-generator l
    std::vector<Matrix> M;       // M[l-1] = co-mirror product for letter l
};

}  // namespace trop
