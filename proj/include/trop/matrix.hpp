#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "trop/scalar.hpp"

namespace trop {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Square matrix over the max-plus semiring. Element access is 0-based;
// functions that take mathematical indices (generators, corners) are 1-based.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, Scalar fill = kBottom);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);

    std::size_t dim() const noexcept { return n_; }
    Scalar at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const std::vector<Scalar>& data() const noexcept { return a_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix oplus(const Matrix& a, const Matrix& b);
Matrix omin(const Matrix& a, const Matrix& b);
// Adds the scalar k to every entry (the tropical scalar multiple k ⊙ A).
Matrix scale(const Matrix& a, Scalar k);
Matrix power(const Matrix& a, unsigned m);
Matrix transpose(const Matrix& a);

// Entrywise order with bottom below every integer.
bool geq(const Matrix& a, const Matrix& b);
// a ≥ b everywhere and a ≠ b.
bool greater(const Matrix& a, const Matrix& b);

struct PermanentResult {
    Scalar value;
    std::size_t maximizers = 0;      // number of permutations attaining value
    std::vector<std::size_t> witness; // one maximizing permutation (0-based), empty if value is bottom
};

inline constexpr std::size_t kMaxPermanentDim = 12;
inline constexpr std::size_t kMaxRankDim = 8;

PermanentResult permanent(const Matrix& a);
bool is_nonsingular(const Matrix& a);
Scalar trace(const Matrix& a);
Scalar mtrace(const Matrix& a);
std::vector<std::vector<bool>> structure_map(const Matrix& a);
bool is_synoptic(const Matrix& a);
std::size_t rank(const Matrix& a);

}  // namespace trop
