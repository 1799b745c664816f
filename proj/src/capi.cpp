#include "trop/trop.h"

#include <cstring>
#include <new>
#include <string>

#include "trop/checks.hpp"
#include "trop/identity.hpp"
#include "trop/io.hpp"
#include "trop/reps.hpp"

struct trop_word {
    trop::Word value;
};
struct trop_matrix {
    trop::Matrix value;
};
struct trop_tableau {
    trop::YoungTableau tab;
    trop::ConfigTableau ctab;
};

namespace {

thread_local std::string g_last_error;

trop_status fail(trop_status s, std::string msg) {
    g_last_error = std::move(msg);
    return s;
}

template <class F>
trop_status guarded(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const trop::ParseError& e) {
        return fail(TROP_E_PARSE, e.what());
    } catch (const trop::DimensionError& e) {
        return fail(TROP_E_DIMENSION, e.what());
    } catch (const trop::RangeError& e) {
        return fail(TROP_E_RANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(TROP_E_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(TROP_E_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(TROP_E_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TROP_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TROP_E_INTERNAL, e.what());
    }
}

trop_status write_text(const std::string& text, char* buf, size_t cap, size_t* needed) {
    const size_t size = text.size() + 1;
    if (needed) *needed = size;
    if (cap < size || !buf) return fail(TROP_E_BUFFER, "buffer too small: need " + std::to_string(size) + " bytes");
    std::memcpy(buf, text.c_str(), size);
    return TROP_OK;
}

#define TROP_REQUIRE(cond, what) \
    if (!(cond)) return fail(TROP_E_ARGUMENT, what)

const std::vector<trop::CheckInfo>& catalog() {
    static const std::vector<trop::CheckInfo> c = trop::check_catalog();
    return c;
}

trop::Matrix subword_matrix(const trop::Word& w) {
    const std::size_t n = w.alphabet();
    trop::Matrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            m.at(i - 1, j - 1) = trop::Scalar(static_cast<std::int64_t>(trop::lnds_oracle(w, {i, j})));
    return m;
}

// A null detail buffer skips the text but still reports its size.
trop_status write_detail(const std::string& text, char* buf, size_t cap, size_t* needed) {
    if (!buf) {
        if (needed) *needed = text.size() + 1;
        return TROP_OK;
    }
    return write_text(text, buf, cap, needed);
}

}  // namespace

extern "C" {

const char* trop_status_name(trop_status s) {
    switch (s) {
        case TROP_OK: return "TROP_OK";
        case TROP_E_ARGUMENT: return "TROP_E_ARGUMENT";
        case TROP_E_PARSE: return "TROP_E_PARSE";
        case TROP_E_RANGE: return "TROP_E_RANGE";
        case TROP_E_DIMENSION: return "TROP_E_DIMENSION";
        case TROP_E_BUFFER: return "TROP_E_BUFFER";
        case TROP_E_INTERNAL: return "TROP_E_INTERNAL";
    }
    return "TROP_E_UNKNOWN";
}

const char* trop_last_error(void) { return g_last_error.c_str(); }

trop_status trop_word_parse(size_t n, const char* text, trop_word** out) {
    TROP_REQUIRE(text && out, "null argument");
    return guarded([&] {
        *out = new trop_word{trop::parse_word(text, n)};
        return TROP_OK;
    });
}

trop_status trop_word_from_letters(size_t n, const uint16_t* letters, size_t len, trop_word** out) {
    TROP_REQUIRE(out && (letters || len == 0), "null argument");
    return guarded([&] {
        *out = new trop_word{trop::Word(n, std::vector<trop::Letter>(letters, letters + len))};
        return TROP_OK;
    });
}

void trop_word_free(trop_word* w) { delete w; }

size_t trop_word_length(const trop_word* w) { return w ? w->value.size() : 0; }

size_t trop_word_alphabet(const trop_word* w) { return w ? w->value.alphabet() : 0; }

trop_status trop_word_format(const trop_word* w, char* buf, size_t cap, size_t* needed) {
    TROP_REQUIRE(w, "null word");
    return guarded([&] { return write_text(trop::to_string(w->value), buf, cap, needed); });
}

trop_status trop_word_reverse(const trop_word* w, trop_word** out) {
    TROP_REQUIRE(w && out, "null argument");
    return guarded([&] {
        *out = new trop_word{trop::reverse(w->value)};
        return TROP_OK;
    });
}

trop_status trop_word_co_mirror(const trop_word* w, trop_word** out) {
    TROP_REQUIRE(w && out, "null argument");
    return guarded([&] {
        *out = new trop_word{trop::co_mirror(w->value)};
        return TROP_OK;
    });
}

trop_status trop_represent(const trop_word* w, int64_t kappa, trop_rep_kind kind, trop_matrix** out) {
    TROP_REQUIRE(w && out, "null argument");
    return guarded([&] {
        const trop::Word& word = w->value;
        switch (kind) {
            case TROP_REP_MHO: *out = new trop_matrix{trop::mho(trop::RepContext(word.alphabet(), kappa), word)}; break;
            case TROP_REP_MHO_FAST:
                *out = new trop_matrix{trop::mho_fast(trop::RepContext(word.alphabet(), kappa), word)};
                break;
            case TROP_REP_OMEGA:
                *out = new trop_matrix{trop::omega(trop::RepContext(word.alphabet(), kappa), word)};
                break;
            case TROP_REP_SUBWORDS: *out = new trop_matrix{subword_matrix(word)}; break;
            case TROP_REP_WP_FWD:
            case TROP_REP_WP_CO: {
                if (kappa != 1) return fail(TROP_E_ARGUMENT, "tableau matrices are defined at kappa = 1");
                const trop::ConfigTableau c = trop::ctab(word);
                *out = new trop_matrix{kind == TROP_REP_WP_FWD ? trop::c_mat(c) : trop::c_mat_co(c)};
                break;
            }
            default: return fail(TROP_E_ARGUMENT, "unknown representation kind");
        }
        return TROP_OK;
    });
}

trop_status trop_matrix_parse(const char* text, trop_matrix** out) {
    TROP_REQUIRE(text && out, "null argument");
    return guarded([&] {
        *out = new trop_matrix{trop::parse_matrix(text)};
        return TROP_OK;
    });
}

void trop_matrix_free(trop_matrix* m) { delete m; }

size_t trop_matrix_dim(const trop_matrix* m) { return m ? m->value.dim() : 0; }

trop_status trop_matrix_entry(const trop_matrix* m, size_t i, size_t j, int* is_bottom, int64_t* value) {
    TROP_REQUIRE(m && is_bottom && value, "null argument");
    const size_t n = m->value.dim();
    TROP_REQUIRE(i >= 1 && j >= 1 && i <= n && j <= n, "entry index outside 1..n");
    const trop::Scalar s = m->value.at(i - 1, j - 1);
    *is_bottom = s.is_bottom() ? 1 : 0;
    *value = s.is_bottom() ? 0 : s.value();
    return TROP_OK;
}

int trop_matrix_equal(const trop_matrix* a, const trop_matrix* b) {
    return a && b && a->value == b->value ? 1 : 0;
}

trop_status trop_matrix_multiply(const trop_matrix* a, const trop_matrix* b, trop_matrix** out) {
    TROP_REQUIRE(a && b && out, "null argument");
    return guarded([&] {
        *out = new trop_matrix{a->value * b->value};
        return TROP_OK;
    });
}

trop_status trop_matrix_format(const trop_matrix* m, int json, char* buf, size_t cap, size_t* needed) {
    TROP_REQUIRE(m, "null matrix");
    return guarded([&] {
        return write_text(json ? trop::matrix_to_json(m->value) : trop::format_matrix(m->value), buf, cap, needed);
    });
}

trop_status trop_tableau_of_word(const trop_word* w, trop_tableau** out) {
    TROP_REQUIRE(w && out, "null argument");
    return guarded([&] {
        *out = new trop_tableau{trop::tab(w->value), trop::ctab(w->value)};
        return TROP_OK;
    });
}

void trop_tableau_free(trop_tableau* t) { delete t; }

trop_status trop_tableau_format(const trop_tableau* t, int json, char* buf, size_t cap, size_t* needed) {
    TROP_REQUIRE(t, "null tableau");
    return guarded([&] {
        return write_text(json ? trop::tableau_to_json(t->tab) : trop::format_tableau(t->tab), buf, cap, needed);
    });
}

trop_status trop_ctab_format(const trop_tableau* t, int json, char* buf, size_t cap, size_t* needed) {
    TROP_REQUIRE(t, "null tableau");
    return guarded([&] {
        return write_text(json ? trop::ctab_to_json(t->ctab) : trop::format_ctab(t->ctab), buf, cap, needed);
    });
}

trop_status trop_tableau_shape(const trop_tableau* t, size_t* parts, size_t cap, size_t* count) {
    TROP_REQUIRE(t && count, "null argument");
    const auto shape = t->tab.shape();
    *count = shape.size();
    if (cap < shape.size() || (!parts && !shape.empty()))
        return fail(TROP_E_BUFFER, "shape buffer too small: need " + std::to_string(shape.size()) + " entries");
    for (size_t k = 0; k < shape.size(); ++k) parts[k] = shape[k];
    return TROP_OK;
}

trop_status trop_tableau_reading_word(const trop_tableau* t, trop_word** out) {
    TROP_REQUIRE(t && out, "null argument");
    return guarded([&] {
        *out = new trop_word{trop::reading_word(t->tab)};
        return TROP_OK;
    });
}

trop_status trop_equiv(trop_equiv_kind kind, const trop_word* u, const trop_word* v, int* result) {
    TROP_REQUIRE(u && v && result, "null argument");
    if (u->value.alphabet() != v->value.alphabet())
        return fail(TROP_E_DIMENSION, "words over different alphabets");
    return guarded([&] {
        const trop::RepContext ctx(u->value.alphabet());
        bool r = false;
        switch (kind) {
            case TROP_EQUIV_PLACTIC: r = trop::plc_equiv(u->value, v->value); break;
            case TROP_EQUIV_CLOAKTIC: r = trop::clk_equiv(ctx, u->value, v->value); break;
            case TROP_EQUIV_COCLOAKTIC: r = trop::coclk_equiv(ctx, u->value, v->value); break;
            default: return fail(TROP_E_ARGUMENT, "unknown equivalence kind");
        }
        *result = r ? 1 : 0;
        return TROP_OK;
    });
}

trop_status trop_identity_format(size_t p, size_t n, char* buf, size_t cap, size_t* needed) {
    return guarded([&] { return write_text(trop::to_string(trop::build_identity(p, n)), buf, cap, needed); });
}

trop_status trop_identity_check(size_t p, size_t n, trop_monoid monoid, uint64_t samples, uint64_t seed,
                                trop_report* report, char* detail, size_t cap, size_t* needed) {
    TROP_REQUIRE(report, "null report");
    TROP_REQUIRE(monoid == TROP_MONOID_TMAT3 || monoid == TROP_MONOID_PLACTIC3, "unknown monoid");
    return guarded([&] {
        const auto m = monoid == TROP_MONOID_TMAT3 ? trop::IdentityMonoid::TMat3 : trop::IdentityMonoid::Plactic3;
        const trop::CheckReport r = trop::check_identity_random(trop::build_identity(p, n), m, samples, seed);
        *report = {r.cases, r.violations};
        return write_detail(r.detail, detail, cap, needed);
    });
}

size_t trop_check_count(void) { return catalog().size(); }

const char* trop_check_key(size_t index) {
    return index < catalog().size() ? catalog()[index].key.c_str() : nullptr;
}

const char* trop_check_description(size_t index) {
    return index < catalog().size() ? catalog()[index].description.c_str() : nullptr;
}

trop_status trop_check_run(const char* key, size_t n, size_t maxlen, trop_report* report, char* detail, size_t cap,
                           size_t* needed) {
    TROP_REQUIRE(key && report, "null argument");
    return guarded([&] {
        const trop::CheckReport r = trop::run_check(key, n, maxlen);
        *report = {r.cases, r.violations};
        return write_detail(r.detail, detail, cap, needed);
    });
}

trop_status trop_bench(size_t n, const size_t* lengths, size_t count, uint64_t seed, trop_bench_row* rows) {
    TROP_REQUIRE((lengths && rows) || count == 0, "null argument");
    return guarded([&] {
        const auto out = trop::bench_mho(n, std::vector<std::size_t>(lengths, lengths + count), seed);
        for (size_t k = 0; k < out.size(); ++k)
            rows[k] = {out[k].length, out[k].fast_seconds, out[k].fold_seconds, out[k].equal ? 1 : 0};
        return TROP_OK;
    });
}

}  // extern "C"
