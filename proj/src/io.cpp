#include "trop/io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace trop {

using nlohmann::json;

namespace {

std::string letter_token(std::size_t n, Letter l) {
    if (n <= 26) return std::string(1, static_cast<char>('a' + l - 1));
    return std::to_string(l);
}

Scalar parse_entry(std::string_view tok) {
    if (tok == "-inf") return kBottom;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec == std::errc::result_out_of_range) throw RangeError("matrix entry out of range: " + std::string(tok));
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad matrix entry '" + std::string(tok) + "'");
    return Scalar(v);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::size_t json_dim(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows") || !j["n"].is_number_unsigned() ||
        !j["rows"].is_array())
        throw ParseError("expected an object with \"n\" and \"rows\"");
    return j["n"].get<std::size_t>();
}

}  // namespace

std::string format_matrix(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out.push_back(' ');
            out += to_string(m.at(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

Matrix parse_matrix_text(std::string_view text) {
    std::vector<std::vector<Scalar>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Scalar> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_entry(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw ParseError("empty matrix");
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ParseError("matrix text is not square");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::string matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const Scalar s = m.at(i, j);
            row.push_back(s.is_bottom() ? json(nullptr) : json(s.value()));
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", m.dim()}, {"rows", std::move(rows)}}.dump();
}

Matrix matrix_from_json(std::string_view text) {
    const json j = parse_json(text);
    const std::size_t n = json_dim(j);
    const json& rows = j["rows"];
    if (n == 0 || rows.size() != n) throw ParseError("\"rows\" must hold n rows");
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("matrix JSON is not square");
        for (std::size_t k = 0; k < n; ++k) {
            const json& e = rows[i][k];
            if (e.is_null()) continue;
            if (!e.is_number_integer()) throw ParseError("matrix entries must be integers or null");
            m.at(i, k) = Scalar(e.get<std::int64_t>());
        }
    }
    return m;
}

Matrix parse_matrix(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
        return c == '{' ? matrix_from_json(text) : parse_matrix_text(text);
    }
    throw ParseError("empty matrix");
}

std::string format_tableau(const YoungTableau& t) {
    std::string out;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) {
        for (std::size_t c = 0; c < it->size(); ++c) {
            if (c) out.push_back(' ');
            out += letter_token(t.alphabet(), (*it)[c]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string tableau_to_json(const YoungTableau& t) {
    return json{{"n", t.alphabet()}, {"rows", t.rows()}}.dump();
}

YoungTableau tableau_from_json(std::string_view text) {
    const json j = parse_json(text);
    const std::size_t n = json_dim(j);
    try {
        return YoungTableau(n, j["rows"].get<std::vector<std::vector<Letter>>>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad tableau rows: ") + e.what());
    }
}

std::string format_ctab(const ConfigTableau& c) {
    std::string out;
    const auto rows = c.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        for (std::size_t k = 0; k < it->size(); ++k) {
            if (k) out.push_back(' ');
            out += std::to_string((*it)[k]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string ctab_to_json(const ConfigTableau& c) {
    return json{{"n", c.size()}, {"rows", c.rows()}}.dump();
}

ConfigTableau ctab_from_json(std::string_view text) {
    const json j = parse_json(text);
    const std::size_t n = json_dim(j);
    try {
        return ConfigTableau(n, j["rows"].get<std::vector<std::vector<std::int64_t>>>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad configuration rows: ") + e.what());
    }
}

}  // namespace trop
