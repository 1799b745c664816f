#include "trop/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace trop {

std::string to_string(Scalar s) { return s.is_bottom() ? "-inf" : std::to_string(s.raw()); }

namespace {

void require_same_dim(const Matrix& a, const Matrix& b, const char* op) {
    if (a.dim() != b.dim())
        throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()));
}

}  // namespace

Matrix::Matrix(std::size_t n, Scalar fill) : n_(n), a_(n * n, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw DimensionError("matrix literal is not square");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "product");
    const std::size_t n = a.dim();
    constexpr std::int64_t bot = Scalar::kBottomRep;
    Matrix c(n);
    const auto& ad = a.data();
    const auto& bd = b.data();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t best = bot;
            for (std::size_t t = 0; t < n; ++t) {
                const std::int64_t x = ad[i * n + t].raw();
                const std::int64_t y = bd[t * n + j].raw();
                if (x == bot || y == bot) continue;
                std::int64_t s;
                if (__builtin_add_overflow(x, y, &s) || s == bot)
                    throw RangeError("tropical product overflow");
                best = std::max(best, s);
            }
            c.at(i, j) = Scalar::from_raw(best);
        }
    }
    return c;
}

Matrix oplus(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "sum");
    Matrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) c.at(i, j) = oplus(a.at(i, j), b.at(i, j));
    return c;
}

Matrix omin(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "minimum");
    Matrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) c.at(i, j) = omin(a.at(i, j), b.at(i, j));
    return c;
}

Matrix scale(const Matrix& a, Scalar k) {
    Matrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) c.at(i, j) = otimes(k, a.at(i, j));
    return c;
}

Matrix power(const Matrix& a, unsigned m) {
    Matrix result = Matrix::identity(a.dim());
    Matrix base = a;
    while (m > 0) {
        if (m & 1u) result = result * base;
        m >>= 1;
        if (m > 0) base = base * base;
    }
    return result;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) t.at(j, i) = a.at(i, j);
    return t;
}

bool geq(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "comparison");
    for (std::size_t k = 0; k < a.data().size(); ++k)
        if (a.data()[k] < b.data()[k]) return false;
    return true;
}

bool greater(const Matrix& a, const Matrix& b) { return geq(a, b) && a != b; }

PermanentResult permanent(const Matrix& a) {
    const std::size_t n = a.dim();
    if (n > kMaxPermanentDim)
        throw DimensionError("permanent: dimension " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kMaxPermanentDim));
    PermanentResult r{kBottom, 0, {}};
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        Scalar term = Scalar::one();
        for (std::size_t i = 0; i < n && term.is_finite(); ++i) term = otimes(term, a.at(i, sigma[i]));
        if (term.is_bottom()) continue;
        if (r.value.is_bottom() || r.value < term) {
            r.value = term;
            r.maximizers = 1;
            r.witness = sigma;
        } else if (term == r.value) {
            ++r.maximizers;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return r;
}

bool is_nonsingular(const Matrix& a) {
    const auto p = permanent(a);
    return p.value.is_finite() && p.maximizers == 1;
}

Scalar trace(const Matrix& a) {
    Scalar t = kBottom;
    for (std::size_t i = 0; i < a.dim(); ++i) t = oplus(t, a.at(i, i));
    return t;
}

Scalar mtrace(const Matrix& a) {
    Scalar t = Scalar::one();
    for (std::size_t i = 0; i < a.dim(); ++i) t = otimes(t, a.at(i, i));
    return t;
}

std::vector<std::vector<bool>> structure_map(const Matrix& a) {
    std::vector<std::vector<bool>> s(a.dim(), std::vector<bool>(a.dim()));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) s[i][j] = a.at(i, j).is_finite();
    return s;
}

bool is_synoptic(const Matrix& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (a.at(i, j) < oplus(a.at(i + 1, j), a.at(i, j - 1))) return false;
    return true;
}

std::size_t rank(const Matrix& a) {
    const std::size_t n = a.dim();
    if (n > kMaxRankDim)
        throw DimensionError("rank: dimension " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kMaxRankDim));
    auto subsets = [n](std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(i);
            out.push_back(std::move(s));
        }
        return out;
    };
    for (std::size_t k = n; k >= 1; --k) {
        const auto picks = subsets(k);
        for (const auto& rows : picks)
            for (const auto& cols : picks) {
                Matrix sub(k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
                if (is_nonsingular(sub)) return k;
            }
    }
    return 0;
}

}  // namespace trop
