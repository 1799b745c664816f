#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trop/trop.h"

namespace {

struct ApiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Violation {};

void check(trop_status s) {
    if (s != TROP_OK) throw ApiError(std::string(trop_status_name(s)) + ": " + trop_last_error());
}

struct WordDeleter {
    void operator()(trop_word* w) const { trop_word_free(w); }
};
struct MatrixDeleter {
    void operator()(trop_matrix* m) const { trop_matrix_free(m); }
};
struct TableauDeleter {
    void operator()(trop_tableau* t) const { trop_tableau_free(t); }
};
using WordPtr = std::unique_ptr<trop_word, WordDeleter>;
using MatrixPtr = std::unique_ptr<trop_matrix, MatrixDeleter>;
using TableauPtr = std::unique_ptr<trop_tableau, TableauDeleter>;

// Calls a buffer-style formatter twice: once for the size, once for the text.
template <class F>
std::string text_of(F&& f) {
    size_t needed = 0;
    const trop_status s = f(nullptr, 0, &needed);
    if (s != TROP_E_BUFFER && s != TROP_OK) check(s);
    std::string out(needed, '\0');
    check(f(out.data(), out.size(), &needed));
    out.resize(needed ? needed - 1 : 0);
    return out;
}

WordPtr parse_word(size_t n, const std::string& text) {
    trop_word* w = nullptr;
    check(trop_word_parse(n, text.c_str(), &w));
    return WordPtr(w);
}

MatrixPtr represent(const trop_word* w, int64_t kappa, trop_rep_kind kind) {
    trop_matrix* m = nullptr;
    check(trop_represent(w, kappa, kind, &m));
    return MatrixPtr(m);
}

std::string format(const trop_matrix* m, bool json) {
    return text_of([&](char* b, size_t c, size_t* n) { return trop_matrix_format(m, json ? 1 : 0, b, c, n); });
}

std::vector<size_t> shape_of(const trop_tableau* t) {
    size_t count = 0;
    const trop_status s = trop_tableau_shape(t, nullptr, 0, &count);
    if (s != TROP_E_BUFFER && s != TROP_OK) check(s);
    std::vector<size_t> parts(count);
    check(trop_tableau_shape(t, parts.data(), parts.size(), &count));
    return parts;
}

std::string join(const std::vector<size_t>& v, const char* sep) {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
    return out;
}

void cmd_tab(size_t n, const std::string& word, bool json) {
    const WordPtr w = parse_word(n, word);
    trop_tableau* raw = nullptr;
    check(trop_tableau_of_word(w.get(), &raw));
    const TableauPtr t(raw);
    const int j = json ? 1 : 0;
    const std::string tab = text_of([&](char* b, size_t c, size_t* k) { return trop_tableau_format(t.get(), j, b, c, k); });
    const std::string ctab = text_of([&](char* b, size_t c, size_t* k) { return trop_ctab_format(t.get(), j, b, c, k); });
    const auto shape = shape_of(t.get());
    if (json) {
        std::cout << "{\"tableau\":" << tab << ",\"ctab\":" << ctab << ",\"shape\":[" << join(shape, ",") << "]}\n";
        return;
    }
    std::cout << "tableau:\n" << tab << "configuration:\n" << ctab << "shape: " << join(shape, " ") << "\n";
}

void cmd_rep(size_t n, int64_t kappa, bool co, bool json, const std::string& word) {
    const WordPtr w = parse_word(n, word);
    std::cout << format(represent(w.get(), kappa, co ? TROP_REP_OMEGA : TROP_REP_MHO).get(), json);
    if (json) std::cout << "\n";
}

void cmd_subwords(size_t n, bool fast, bool from_stdin, const std::string& word) {
    const auto one = [&](const std::string& text) {
        const WordPtr w = parse_word(n, text);
        std::cout << format(represent(w.get(), 1, fast ? TROP_REP_MHO_FAST : TROP_REP_SUBWORDS).get(), false);
    };
    if (!from_stdin) return one(word);
    std::string line;
    bool first = true;
    while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!first) std::cout << "\n";
        first = false;
        one(line);
    }
}

void cmd_equiv(size_t n, const std::string& kind, const std::string& u, const std::string& v) {
    const trop_equiv_kind k = kind == "plc" ? TROP_EQUIV_PLACTIC : kind == "clk" ? TROP_EQUIV_CLOAKTIC : TROP_EQUIV_COCLOAKTIC;
    const WordPtr a = parse_word(n, u), b = parse_word(n, v);
    int result = 0;
    check(trop_equiv(k, a.get(), b.get(), &result));
    std::cout << (result ? "true" : "false") << "\n";
}

void cmd_identity(const std::vector<size_t>& pn, const std::string& monoid, uint64_t samples, uint64_t seed) {
    if (pn.size() != 2) throw CLI::ValidationError("--pn", "expected P,N");
    const size_t p = pn[0], n = pn[1];
    std::cout << text_of([&](char* b, size_t c, size_t* k) { return trop_identity_format(p, n, b, c, k); }) << "\n";
    const trop_monoid m = monoid == "tmat3" ? TROP_MONOID_TMAT3 : TROP_MONOID_PLACTIC3;
    trop_report r{};
    const std::string detail = text_of(
        [&](char* b, size_t c, size_t* k) { return trop_identity_check(p, n, m, samples, seed, &r, b, c, k); });
    std::cout << "monoid " << monoid << ", seed " << seed << ": " << r.cases << " samples, " << r.violations
              << " violations\n";
    if (!detail.empty()) std::cout << detail << "\n";
    if (r.violations) throw Violation{};
}

void cmd_sweep_list() {
    for (size_t k = 0; k < trop_check_count(); ++k)
        std::cout << trop_check_key(k) << "\t" << trop_check_description(k) << "\n";
}

void cmd_sweep(const std::string& key, size_t n, size_t maxlen) {
    trop_report r{};
    const std::string detail = text_of(
        [&](char* b, size_t c, size_t* k) { return trop_check_run(key.c_str(), n, maxlen, &r, b, c, k); });
    std::cout << key << " n=" << n << " maxlen=" << maxlen << ": " << r.cases << " cases, " << r.violations
              << " violations\n";
    if (!detail.empty()) std::cout << detail << "\n";
    if (r.violations) throw Violation{};
}

std::vector<size_t> parse_lengths(const std::string& text) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size() || !(v >= 0) || v != std::floor(v) || v > 1e9)
            throw CLI::ValidationError("--lens", "bad length '" + tok + "'");
        out.push_back(static_cast<size_t>(v));
    }
    if (out.empty()) throw CLI::ValidationError("--lens", "no lengths given");
    return out;
}

void cmd_bench(const std::string& lens, size_t n, uint64_t seed) {
    const auto lengths = parse_lengths(lens);
    std::vector<trop_bench_row> rows(lengths.size());
    check(trop_bench(n, lengths.data(), lengths.size(), seed, rows.data()));
    std::printf("%10s %12s %12s %14s %8s %6s\n", "length", "fast_s", "fold_s", "letters/s", "ratio", "equal");
    bool all_equal = true;
    for (size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        const double rate = r.fast_seconds > 0 ? static_cast<double>(r.length) / r.fast_seconds : 0.0;
        char ratio[32] = "-";
        if (k > 0 && rows[k - 1].fast_seconds > 0)
            std::snprintf(ratio, sizeof ratio, "%.2f", r.fast_seconds / rows[k - 1].fast_seconds);
        std::printf("%10zu %12.6f %12.6f %14.0f %8s %6s\n", r.length, r.fast_seconds, r.fold_seconds, rate, ratio,
                    r.equal ? "yes" : "NO");
        all_equal = all_equal && r.equal;
    }
    // least squares t = a + b * len; residual relative to each measurement
    if (rows.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& r : rows) {
            const double x = static_cast<double>(r.length), y = r.fast_seconds;
            sx += x, sy += y, sxx += x * x, sxy += x * y;
        }
        const double m = static_cast<double>(rows.size());
        const double den = m * sxx - sx * sx;
        if (den != 0) {
            const double b = (m * sxy - sx * sy) / den, a = (sy - b * sx) / m;
            double worst = 0;
            for (const auto& r : rows)
                if (r.fast_seconds > 0)
                    worst = std::max(worst, std::abs(r.fast_seconds - (a + b * static_cast<double>(r.length))) /
                                                r.fast_seconds);
            std::printf("linear fit: t = %.3e + %.3e * len, max relative residual %.3f\n", a, b, worst);
        }
    }
    if (!all_equal) throw Violation{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical representations of plactic-type monoids"};
    app.require_subcommand(1);

    size_t n = 3;
    int64_t kappa = 1;
    bool co = false, json = false, fast = false, from_stdin = false, list = false;
    std::string word, u, v, kind = "plc", monoid = "tmat3", key, lens = "1e4,1e5,1e6";
    std::vector<size_t> pn;
    uint64_t samples = 10000, seed = 0;
    size_t maxlen = 6;

    auto* tab = app.add_subcommand("tab", "Young tableau, configuration tableau and shape of a word");
    tab->add_option("-n", n, "alphabet size")->required()->check(CLI::PositiveNumber);
    tab->add_flag("--json", json, "JSON output");
    tab->add_option("word", word, "word (a..z or dotted integers)")->required();

    auto* rep = app.add_subcommand("rep", "forward (or co-) product matrix of a word");
    rep->add_option("-n", n, "alphabet size")->required()->check(CLI::PositiveNumber);
    rep->add_option("--kappa", kappa, "generator weight")->check(CLI::PositiveNumber);
    rep->add_flag("--co", co, "co-representation");
    rep->add_flag("--json", json, "JSON output");
    rep->add_option("word", word, "word")->required();

    auto* sub = app.add_subcommand("subwords", "longest nondecreasing subword lengths over every letter interval");
    sub->add_option("-n", n, "alphabet size")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--fast", fast, "divide-and-conquer matrix product");
    auto* stdin_flag = sub->add_flag("--stdin", from_stdin, "read one word per line");
    sub->add_option("word", word, "word")->excludes(stdin_flag);

    auto* eq = app.add_subcommand("equiv", "decide an equivalence between two words");
    eq->add_option("-n", n, "alphabet size")->required()->check(CLI::PositiveNumber);
    eq->add_option("--kind", kind, "plc, clk or coclk")->check(CLI::IsMember({"plc", "clk", "coclk"}));
    eq->add_option("u", u, "first word")->required();
    eq->add_option("v", v, "second word")->required();

    auto* id = app.add_subcommand("identity", "sample the two-variable identity for (P,N) at x = uv, y = vu");
    id->add_option("--pn", pn, "P,N")->required()->delimiter(',')->expected(2);
    id->add_option("--monoid", monoid, "tmat3 or plactic3")->check(CLI::IsMember({"tmat3", "plactic3"}));
    id->add_option("--samples", samples, "number of random pairs");
    id->add_option("--seed", seed, "random seed");

    auto* sw = app.add_subcommand("sweep", "run a named property exhaustively");
    auto* list_flag = sw->add_flag("--list", list, "list check names");
    sw->add_option("--check", key, "check name")->excludes(list_flag);
    sw->add_option("-n", n, "alphabet size")->check(CLI::PositiveNumber);
    sw->add_option("--maxlen", maxlen, "maximal word length (power bound for axioms)");

    auto* bench = app.add_subcommand("bench", "time the divide-and-conquer product against the sequential fold");
    bench->add_option("--lens", lens, "comma-separated lengths, e.g. 1e4,1e5,1e6");
    bench->add_option("-n", n, "alphabet size")->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tab->parsed()) cmd_tab(n, word, json);
        else if (rep->parsed()) cmd_rep(n, kappa, co, json, word);
        else if (sub->parsed()) {
            if (!from_stdin && sub->count("word") == 0) throw CLI::ValidationError("word", "give a word or --stdin");
            cmd_subwords(n, fast, from_stdin, word);
        } else if (eq->parsed()) cmd_equiv(n, kind, u, v);
        else if (id->parsed()) cmd_identity(pn, monoid, samples, seed);
        else if (sw->parsed()) {
            if (list) cmd_sweep_list();
            else if (key.empty()) throw CLI::ValidationError("--check", "required unless --list is given");
            else cmd_sweep(key, n, maxlen);
        } else if (bench->parsed()) {
            cmd_bench(lens, bench->count("-n") ? n : 5, seed);
        }
    } catch (const Violation&) {
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ApiError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
