#include "trop/generators.hpp"

#include <string>

namespace trop {

namespace {

void check_index(std::size_t n, std::size_t i, const char* what) {
    if (n == 0) throw std::out_of_range("dimension must be positive");
    if (i < 1 || i > n)
        throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n));
}

void check_kappa(std::int64_t kappa) {
    if (kappa < 1) throw std::out_of_range("kappa must be >= 1");
}

}  // namespace

Matrix flat_corner(std::size_t n, std::size_t p, std::size_t q, std::int64_t kappa) {
    check_index(n, p, "corner row");
    check_index(n, q, "corner column");
    check_kappa(kappa);
    Matrix m(n);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = q - 1; j < n; ++j) m.at(i, j) = Scalar(kappa);
    return m;
}

Matrix gen_F(std::size_t n, std::size_t l, std::int64_t kappa) { return flat_corner(n, l, l, kappa); }

Matrix layout_E(std::size_t n) {
    if (n == 0) throw std::out_of_range("dimension must be positive");
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.at(i, j) = Scalar::one();
    return m;
}

Matrix gen_A(std::size_t n, std::size_t l, std::int64_t kappa) {
    return oplus(layout_E(n), gen_F(n, l, kappa));
}

Matrix co_gen_A(std::size_t n, std::size_t l, std::int64_t kappa) {
    check_index(n, l, "co-generator");
    check_kappa(kappa);
    Matrix m = layout_E(n);
    const std::size_t lp = n - l;  // 0-based position of l' = n - l + 1
    m.at(lp, lp) = Scalar(-kappa);
    return m;
}

Matrix co_mirror_M(std::size_t n, std::size_t l, std::int64_t kappa) {
    check_index(n, l, "co-mirror");
    check_kappa(kappa);
    const std::size_t skip = n - l + 1;
    Matrix m = layout_E(n);
    for (std::size_t t = n; t >= 1; --t)
        if (t != skip) m = m * gen_A(n, t, kappa);
    return m;
}

GeneratorSet::GeneratorSet(std::size_t n_, std::int64_t kappa_)
    : n(n_), kappa(kappa_), E(layout_E(n_)) {
    check_kappa(kappa_);
    for (std::size_t l = 1; l <= n; ++l) {
        A.push_back(gen_A(n, l, kappa));
        Acheck.push_back(co_gen_A(n, l, kappa));
        M.push_back(co_mirror_M(n, l, kappa));
    }
}

}  // namespace trop
