#pragma once

#include <cstdint>
#include <vector>

#include "trop/matrix.hpp"
#include "trop/word.hpp"

namespace trop {

// Semi-standard Young tableau, French convention: rows_[0] is the bottom row.
class YoungTableau {
public:
    explicit YoungTableau(std::size_t n = 1) : n_(n) {}
    // Validates shape, row order and strict column increase.
    YoungTableau(std::size_t n, std::vector<std::vector<Letter>> rows);

    std::size_t alphabet() const noexcept { return n_; }
    const std::vector<std::vector<Letter>>& rows() const noexcept { return rows_; }
    std::size_t cells() const noexcept;
    std::vector<std::size_t> shape() const;

    // Schensted row insertion: x bumps the leftmost entry strictly greater than x.
    void insert(Letter x);

    friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

private:
    std::size_t n_;
    std::vector<std::vector<Letter>> rows_;
};

YoungTableau bump_insert(YoungTableau t, Letter x);
YoungTableau tab(const Word& w);
YoungTableau tab_product(const YoungTableau& t, const YoungTableau& s);
// Rows concatenated top row first.
Word reading_word(const YoungTableau& t);
bool is_standard(const YoungTableau& t);
YoungTableau transpose_standard(const YoungTableau& t);

// Triangular array lambda(i, j), 1 <= i <= j <= n: the number of letters a_j in
// row i (row 1 at the bottom; j is the diagonal).
class ConfigTableau {
public:
    explicit ConfigTableau(std::size_t n = 1);
    // rows[i-1] lists lambda(i, i..n). Throws if the configuration laws fail.
    ConfigTableau(std::size_t n, const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t size() const noexcept { return n_; }
    std::int64_t lambda(std::size_t i, std::size_t j) const { return cells_[index(i, j)]; }
    std::vector<std::vector<std::int64_t>> rows() const;

    // Adds a_l via the row-by-row increment/decrement encoding.
    void encode(Letter l);

    // Sum of diagonal l: total occurrences of a_l.
    std::int64_t trace(std::size_t l) const;
    std::vector<std::size_t> shape() const;
    bool satisfies_laws() const;

    friend bool operator==(const ConfigTableau&, const ConfigTableau&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const;
    std::int64_t& cell(std::size_t i, std::size_t j) { return cells_[index(i, j)]; }

    std::size_t n_;
    std::vector<std::int64_t> cells_;
};

ConfigTableau encode_letter(ConfigTableau c, Letter l);
ConfigTableau ctab(const Word& w);
ConfigTableau tab_to_ctab(const YoungTableau& t);
YoungTableau ctab_to_tab(const ConfigTableau& c);

// Max weight of descending walks from cell (i,i) to cell (1,j), i <= j.
std::int64_t nu(const ConfigTableau& c, std::size_t i, std::size_t j);
// Min weight of covers of columns 1..j: column 1 at row i, rows strictly
// decreasing from column to column. 0 when i < j.
std::int64_t eta(const ConfigTableau& c, std::size_t i, std::size_t j);

Matrix c_mat(const ConfigTableau& c);
Matrix c_mat_co(const ConfigTableau& c);

// Embeds an m-tableau as the right part of an n-tableau, zeros in the left columns.
ConfigTableau right_inject(const ConfigTableau& c, std::size_t n_target);
// Inverse of right_inject; the left n - m columns must be zero.
ConfigTableau right_project(const ConfigTableau& c, std::size_t m_target);
ConfigTableau delete_bottom_row(const ConfigTableau& c);
ConfigTableau delete_last_diagonal(const ConfigTableau& c);

}  // namespace trop
