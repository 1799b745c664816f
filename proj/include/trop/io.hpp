#pragma once

#include <string>
#include <string_view>

#include "trop/matrix.hpp"
#include "trop/tableau.hpp"

namespace trop {

// n lines of space-separated entries, bottom written as "-inf".
std::string format_matrix(const Matrix& m);
Matrix parse_matrix_text(std::string_view text);
// {"n": n, "rows": [[...]]} with null for bottom.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(std::string_view text);
// Accepts either format.
Matrix parse_matrix(std::string_view text);

// One row per line, bottom row last; letters in word syntax.
std::string format_tableau(const YoungTableau& t);
// {"n": n, "rows": [[...], ...]} with rows bottom first and 1-based letters.
std::string tableau_to_json(const YoungTableau& t);
YoungTableau tableau_from_json(std::string_view text);

// One row per line, bottom row (lambda(1, 1..n)) last.
std::string format_ctab(const ConfigTableau& c);
// {"n": n, "rows": [[lambda(1,1..n)], [lambda(2,2..n)], ...]}.
std::string ctab_to_json(const ConfigTableau& c);
ConfigTableau ctab_from_json(std::string_view text);

}  // namespace trop
