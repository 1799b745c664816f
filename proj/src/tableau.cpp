#include "trop/tableau.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace trop {

// ---------------------------------------------------------------- Young tableaux

YoungTableau::YoungTableau(std::size_t n, std::vector<std::vector<Letter>> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ == 0) throw std::out_of_range("alphabet size must be positive");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw std::invalid_argument("row lengths must weakly decrease bottom-up");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > n_) throw std::out_of_range("tableau letter outside alphabet");
            if (c > 0 && row[c] < row[c - 1]) throw std::invalid_argument("tableau rows must be nondecreasing");
            if (r > 0 && row[c] <= rows_[r - 1][c])
                throw std::invalid_argument("tableau columns must strictly increase upward");
        }
    }
}

std::size_t YoungTableau::cells() const noexcept {
    std::size_t k = 0;
    for (const auto& r : rows_) k += r.size();
    return k;
}

std::vector<std::size_t> YoungTableau::shape() const {
    std::vector<std::size_t> s;
    for (const auto& r : rows_) s.push_back(r.size());
    return s;
}

void YoungTableau::insert(Letter x) {
    if (x < 1 || x > n_) throw std::out_of_range("letter outside alphabet");
    for (auto& row : rows_) {
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return;
        }
        std::swap(*it, x);
    }
    rows_.push_back({x});
}

YoungTableau bump_insert(YoungTableau t, Letter x) {
    t.insert(x);
    return t;
}

YoungTableau tab(const Word& w) {
    YoungTableau t(w.alphabet());
    for (Letter l : w.letters()) t.insert(l);
    return t;
}

YoungTableau tab_product(const YoungTableau& t, const YoungTableau& s) {
    if (t.alphabet() != s.alphabet()) throw std::invalid_argument("tableaux over different alphabets");
    YoungTableau r = t;
    const Word rs = reading_word(s);
    for (Letter l : rs.letters()) r.insert(l);
    return r;
}

Word reading_word(const YoungTableau& t) {
    std::vector<Letter> out;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return Word(t.alphabet(), std::move(out));
}

bool is_standard(const YoungTableau& t) {
    std::vector<bool> seen(t.alphabet() + 1, false);
    for (const auto& row : t.rows())
        for (Letter l : row) {
            if (seen[l]) return false;
            seen[l] = true;
        }
    return true;
}

YoungTableau transpose_standard(const YoungTableau& t) {
    if (!is_standard(t)) throw std::invalid_argument("transpose requires a standard tableau");
    std::vector<std::vector<Letter>> cols;
    for (const auto& row : t.rows())
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (cols.size() <= c) cols.emplace_back();
            cols[c].push_back(row[c]);
        }
    return YoungTableau(t.alphabet(), std::move(cols));
}

// -------------------------------------------------------- configuration tableaux

ConfigTableau::ConfigTableau(std::size_t n) : n_(n), cells_(n * (n + 1) / 2, 0) {
    if (n_ == 0) throw std::out_of_range("configuration tableau size must be positive");
}

ConfigTableau::ConfigTableau(std::size_t n, const std::vector<std::vector<std::int64_t>>& rows)
    : ConfigTableau(n) {
    if (rows.size() != n) throw std::invalid_argument("configuration tableau needs n rows");
    for (std::size_t i = 1; i <= n; ++i) {
        if (rows[i - 1].size() != n - i + 1)
            throw std::invalid_argument("row " + std::to_string(i) + " must have " + std::to_string(n - i + 1) +
                                        " cells");
        for (std::size_t j = i; j <= n; ++j) {
            const std::int64_t v = rows[i - 1][j - i];
            if (v < 0) throw std::invalid_argument("configuration cells must be nonnegative");
            cell(i, j) = v;
        }
    }
    if (!satisfies_laws()) throw std::invalid_argument("array violates the configuration laws");
}

std::size_t ConfigTableau::index(std::size_t i, std::size_t j) const {
    if (i < 1 || j < i || j > n_)
        throw std::out_of_range("configuration cell (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside the tableau");
    return (i - 1) * (n_ + 1) - (i - 1) * i / 2 + (j - i);
}

std::vector<std::vector<std::int64_t>> ConfigTableau::rows() const {
    std::vector<std::vector<std::int64_t>> out(n_);
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = i; j <= n_; ++j) out[i - 1].push_back(lambda(i, j));
    return out;
}

void ConfigTableau::encode(Letter l) {
    if (l < 1 || l > n_) throw std::out_of_range("letter outside alphabet");
    std::size_t x = l;
    for (std::size_t i = 1; i <= n_; ++i) {
        ++cell(i, x);
        std::size_t k = x + 1;
        while (k <= n_ && lambda(i, k) == 0) ++k;
        if (k > n_) return;
        --cell(i, k);
        x = k;
    }
}

std::int64_t ConfigTableau::trace(std::size_t l) const {
    std::int64_t s = 0;
    for (std::size_t t = 1; t <= l; ++t) s += lambda(t, l);
    return s;
}

std::vector<std::size_t> ConfigTableau::shape() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 1; i <= n_; ++i) {
        std::int64_t sum = 0;
        for (std::size_t j = i; j <= n_; ++j) sum += lambda(i, j);
        if (sum == 0) break;
        s.push_back(static_cast<std::size_t>(sum));
    }
    return s;
}

bool ConfigTableau::satisfies_laws() const {
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = i; j <= n_; ++j) {
            if (lambda(i, j) < 0) return false;
            std::int64_t upper = 0, lower = 0;
            for (std::size_t k = 0; k + j <= n_; ++k) {
                upper += lambda(j, j + k);
                lower += lambda(i, i + k);
                if (upper > lower) return false;
            }
        }
    return true;
}

ConfigTableau encode_letter(ConfigTableau c, Letter l) {
    c.encode(l);
    return c;
}

ConfigTableau ctab(const Word& w) {
    ConfigTableau c(w.alphabet());
    for (Letter l : w.letters()) c.encode(l);
    return c;
}

ConfigTableau tab_to_ctab(const YoungTableau& t) {
    const std::size_t n = t.alphabet();
    std::vector<std::vector<std::int64_t>> rows(n);
    for (std::size_t i = 1; i <= n; ++i) rows[i - 1].assign(n - i + 1, 0);
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        for (Letter l : t.rows()[r]) {
            if (l < r + 1) throw std::invalid_argument("tableau letter below its row index");
            ++rows[r][l - r - 1];
        }
    return ConfigTableau(n, rows);
}

YoungTableau ctab_to_tab(const ConfigTableau& c) {
    if (!c.satisfies_laws()) throw std::invalid_argument("array violates the configuration laws");
    const std::size_t n = c.size();
    std::vector<std::vector<Letter>> rows;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Letter> row;
        for (std::size_t j = i; j <= n; ++j) row.insert(row.end(), static_cast<std::size_t>(c.lambda(i, j)), static_cast<Letter>(j));
        if (row.empty()) break;
        rows.push_back(std::move(row));
    }
    return YoungTableau(n, std::move(rows));
}

// Walk steps in (row, diagonal) coordinates: horizontal (r,d) -> (r,d+1),
// slant (r,d) -> (r-1,d).
std::int64_t nu(const ConfigTableau& c, std::size_t i, std::size_t j) {
    const std::size_t n = c.size();
    if (i < 1 || i > j || j > n) throw std::out_of_range("nu requires 1 <= i <= j <= n");
    const std::size_t width = j - i + 1;
    std::vector<std::int64_t> below(width, 0), cur(width, 0);
    for (std::size_t r = i; r >= 1; --r) {
        for (std::size_t d = i; d <= j; ++d) {
            const std::size_t k = d - i;
            std::int64_t best = std::numeric_limits<std::int64_t>::min();
            if (d > i) best = std::max(best, cur[k - 1]);
            if (r < i) best = std::max(best, below[k]);
            if (best == std::numeric_limits<std::int64_t>::min()) best = 0;  // start cell (i,i)
            cur[k] = best + c.lambda(r, d);
        }
        std::swap(below, cur);
    }
    return below[width - 1];
}

// A cover picks one cell in each column c = 1..j from rows r_1 >= r_2 >= ... >= r_j,
// all at most i; row r, column c is the cell lambda(r, r + c - 1).
std::int64_t eta(const ConfigTableau& c, std::size_t i, std::size_t j) {
    const std::size_t n = c.size();
    if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("eta indices outside 1..n");
    if (i < j) return 0;
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    // g[r]: least weight with the current column covered at row r; column 1 sits at row i
    std::vector<std::int64_t> g(i + 2, inf), next(i + 2, inf);
    g[i] = c.lambda(i, i);
    for (std::size_t col = 2; col <= j; ++col) {
        std::fill(next.begin(), next.end(), inf);
        std::int64_t above = inf;  // min of g over rows > r
        for (std::size_t r = i; r >= 1; --r) {
            above = std::min(above, g[r + 1]);
            if (above != inf) next[r] = above + c.lambda(r, r + col - 1);
        }
        std::swap(g, next);
    }
    return *std::min_element(g.begin() + 1, g.begin() + 1 + static_cast<std::ptrdiff_t>(i));
}

Matrix c_mat(const ConfigTableau& c) {
    const std::size_t n = c.size();
    Matrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) m.at(i - 1, j - 1) = Scalar(nu(c, i, j));
    return m;
}

Matrix c_mat_co(const ConfigTableau& c) {
    const std::size_t n = c.size();
    Matrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) m.at(i - 1, j - 1) = Scalar(-eta(c, n - i + 1, n - j + 1));
    return m;
}

ConfigTableau right_inject(const ConfigTableau& c, std::size_t n_target) {
    const std::size_t m = c.size();
    if (n_target < m) throw std::invalid_argument("right injection target smaller than source");
    const std::size_t s = n_target - m;
    std::vector<std::vector<std::int64_t>> rows(n_target);
    for (std::size_t i = 1; i <= n_target; ++i)
        for (std::size_t j = i; j <= n_target; ++j)
            rows[i - 1].push_back(j >= s + i ? c.lambda(i, j - s) : 0);
    return ConfigTableau(n_target, rows);
}

ConfigTableau right_project(const ConfigTableau& c, std::size_t m_target) {
    const std::size_t n = c.size();
    if (m_target < 1 || m_target > n) throw std::invalid_argument("projection target must be in 1..n");
    const std::size_t s = n - m_target;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n && j < s + i; ++j)
            if (c.lambda(i, j) != 0) throw std::invalid_argument("left columns are not zero");
    std::vector<std::vector<std::int64_t>> rows(m_target);
    for (std::size_t i = 1; i <= m_target; ++i)
        for (std::size_t j = i; j <= m_target; ++j) rows[i - 1].push_back(c.lambda(i, j + s));
    return ConfigTableau(m_target, rows);
}

ConfigTableau delete_bottom_row(const ConfigTableau& c) {
    const std::size_t n = c.size();
    if (n < 2) throw std::invalid_argument("cannot shrink a 1-configuration tableau");
    std::vector<std::vector<std::int64_t>> rows(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) rows[i - 1].push_back(c.lambda(i + 1, j + 1));
    return ConfigTableau(n - 1, rows);
}

ConfigTableau delete_last_diagonal(const ConfigTableau& c) {
    const std::size_t n = c.size();
    if (n < 2) throw std::invalid_argument("cannot shrink a 1-configuration tableau");
    std::vector<std::vector<std::int64_t>> rows(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) rows[i - 1].push_back(c.lambda(i, j));
    return ConfigTableau(n - 1, rows);
}

}  // namespace trop
