// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "trop/checks.hpp"
#include "trop/reps.hpp"

using namespace trop;

namespace {

constexpr Scalar B = kBottom;
using Rows = std::vector<std::vector<std::int64_t>>;

struct Outcome {
    bool ok = true;
    std::string note;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = budget_s <= 0 || s < budget_s;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("%s %2d %s [%.2fs", pass ? "PASS" : "FAIL", id, title, s);
    if (budget_s > 0) std::printf(" / limit %.0fs", budget_s);
    std::printf("]%s%s\n", o.note.empty() ? "" : " ", o.note.c_str());
    std::fflush(stdout);
}

// Accumulates sweep reports into one outcome.
struct Tally {
    std::uint64_t cases = 0, violations = 0;
    std::string first;
    void add(const CheckReport& r) {
        cases += r.cases;
        violations += r.violations;
        if (!r.passed() && first.empty()) first = r.key + ": " + r.detail;
    }
    Outcome outcome() const {
        std::string note = std::to_string(cases) + " cases, " + std::to_string(violations) + " violations";
        if (!first.empty()) note += "; " + first;
        return {violations == 0, note};
    }
};

Outcome golden() {
    std::vector<std::string> bad;
    auto expect = [&](bool ok, const char* what) {
        if (!ok) bad.emplace_back(what);
    };
    const RepContext c3(3);
    auto w3 = [](const char* s) { return parse_word(s, 3); };
    auto w4 = [](const char* s) { return parse_word(s, 4); };

    // 3x3 generator products
    expect(mho(c3, w3("a")) == Matrix{{1, 1, 1}, {B, 0, 0}, {B, B, 0}}, "A");
    expect(mho(c3, w3("b")) == Matrix{{0, 1, 1}, {B, 1, 1}, {B, B, 0}}, "B");
    expect(mho(c3, w3("c")) == Matrix{{0, 0, 1}, {B, 0, 1}, {B, B, 1}}, "C");
    expect(mho(c3, w3("acb")) == Matrix{{1, 2, 2}, {B, 1, 1}, {B, B, 1}} && mho(c3, w3("cab")) == mho(c3, w3("acb")), "ACB");
    expect(mho(c3, w3("bac")) == Matrix{{1, 1, 2}, {B, 1, 2}, {B, B, 1}} && mho(c3, w3("bca")) == mho(c3, w3("bac")), "BAC");
    expect(mho(c3, w3("aba")) == Matrix{{2, 2, 2}, {B, 1, 1}, {B, B, 0}} && mho(c3, w3("baa")) == mho(c3, w3("aba")), "ABA");
    expect(mho(c3, w3("bba")) == Matrix{{1, 2, 2}, {B, 2, 2}, {B, B, 0}} && mho(c3, w3("bab")) == mho(c3, w3("bba")), "BBA");
    expect(mho(c3, w3("aca")) == Matrix{{2, 2, 2}, {B, 0, 1}, {B, B, 1}} && mho(c3, w3("caa")) == mho(c3, w3("aca")), "ACA");
    expect(mho(c3, w3("cca")) == Matrix{{1, 1, 2}, {B, 0, 2}, {B, B, 2}} && mho(c3, w3("cac")) == mho(c3, w3("cca")), "CCA");
    expect(mho(c3, w3("bcb")) == Matrix{{0, 2, 2}, {B, 2, 2}, {B, B, 1}} && mho(c3, w3("cbb")) == mho(c3, w3("bcb")), "BCB");
    expect(mho(c3, w3("ccb")) == Matrix{{0, 1, 2}, {B, 1, 2}, {B, B, 2}} && mho(c3, w3("cbc")) == mho(c3, w3("ccb")), "CCB");
    expect(mho(c3, w3("abc")) == Matrix{{1, 2, 3}, {B, 1, 2}, {B, B, 1}}, "ABC");
    expect(mho(c3, w3("cba")) == Matrix{{1, 1, 1}, {B, 1, 1}, {B, B, 1}}, "CBA");

    // co-generators
    expect(omega(c3, w3("a")) == Matrix{{0, 0, 0}, {B, 0, 0}, {B, B, -1}}, "co A1");
    expect(omega(c3, w3("b")) == Matrix{{0, 0, 0}, {B, -1, 0}, {B, B, 0}}, "co A2");
    expect(omega(c3, w3("c")) == Matrix{{-1, 0, 0}, {B, 0, 0}, {B, B, 0}}, "co A3");
    expect(omega(c3, w3("ab")) == Matrix{{0, 0, 0}, {B, -1, 0}, {B, B, -1}}, "co A1A2");
    expect(omega(c3, w3("ba")) == Matrix{{0, 0, 0}, {B, -1, -1}, {B, B, -1}}, "co A2A1");

    // configuration tableaux of letters and of a 4-letter word
    expect(ctab(w3("a")).rows() == Rows{{1, 0, 0}, {0, 0}, {0}}, "ctab a");
    expect(ctab(w3("b")).rows() == Rows{{0, 1, 0}, {0, 0}, {0}}, "ctab b");
    expect(ctab(w3("c")).rows() == Rows{{0, 0, 1}, {0, 0}, {0}}, "ctab c");
    expect(c_mat(ctab(w3("a"))) == mho(c3, w3("a")) && c_mat(ctab(w3("c"))) == mho(c3, w3("c")), "c_mat letters");
    const Word w = parse_word("dcdbbddaaaccd", 4);
    expect(tab(w).rows() == std::vector<std::vector<Letter>>{{1, 1, 1, 3, 3, 4}, {2, 2, 4, 4}, {3, 4}, {4}}, "tab w");
    expect(ctab(w).rows() == Rows{{3, 0, 2, 1}, {2, 0, 2}, {1, 1}, {1}}, "ctab w");
    expect(c_mat(ctab(w)) == Matrix{{3, 3, 5, 6}, {B, 2, 4, 5}, {B, B, 3, 5}, {B, B, B, 5}}, "c_mat w");

    // non-injectivity pair u, v
    const Word u = w3("cbbccaabbc"), v = w3("ccbbcaabbc");
    expect(ctab(u).rows() == Rows{{2, 2, 1}, {2, 2}, {1}}, "ctab u");
    expect(ctab(v).rows() == Rows{{2, 2, 1}, {2, 1}, {2}}, "ctab v");
    expect(c_mat(ctab(u)) == Matrix{{2, 4, 5}, {B, 4, 5}, {B, B, 4}} && c_mat(ctab(v)) == c_mat(ctab(u)), "c_mat u,v");
    expect(c_mat_co(ctab(u)) == Matrix{{-4, -3, -1}, {B, -4, -2}, {B, B, -2}}, "c_mat_co u");
    expect(c_mat_co(ctab(v)) == Matrix{{-4, -3, -2}, {B, -4, -2}, {B, B, -2}}, "c_mat_co v");

    // 4-letter witness
    const PlacticImage p = wp(w4("bdac"));
    expect(p.fwd == Matrix{{1, 1, 2, 2}, {B, 1, 2, 2}, {B, B, 1, 1}, {B, B, B, 1}}, "wp fwd bdac");
    expect(p.co == Matrix{{-1, -1, 0, 0}, {B, -1, 0, 0}, {B, B, -1, -1}, {B, B, B, -1}}, "wp co bdac");
    expect(wp(w4("dbac")) == p, "wp dbac");

    // co-mirrored Knuth relations on three letters
    struct Co {
        const char* x;
        const char* y;
        const char* canonical;
        Rows ct;
    };
    for (const Co& c : {Co{"acb", "cab", "cbbaac", {{2, 0, 1}, {2, 0}, {1}}},
                        Co{"aba", "baa", "cbbaaa", {{3, 0, 0}, {2, 0}, {1}}},
                        Co{"bac", "bca", "cbcaab", {{2, 1, 0}, {1, 1}, {1}}},
                        Co{"cbc", "ccb", "cbcabc", {{1, 1, 1}, {1, 1}, {1}}}}) {
        const Word a = co_mirror(w3(c.x)), b = co_mirror(w3(c.y));
        expect(tab(a) == tab(b) && reading_word(tab(a)) == w3(c.canonical) && ctab(a).rows() == c.ct, c.x);
    }

    std::string note = bad.empty() ? "all golden vectors match" : "mismatch:";
    for (const auto& s : bad) note += " " + s;
    return {bad.empty(), note};
}

}  // namespace

int main() {
    criterion(1, "golden vectors", 1, golden);

    criterion(2, "subword matrix equals brute force (n<=4 len<=8 exhaustive, 1e4 random n<=6 len<=40)", 60, [] {
        Tally t;
        for (std::size_t n = 1; n <= 4; ++n) t.add(run_check("subword-matrix", n, 8));
        t.add(check_subword_matrix_random(10000, 6, 40, 2024));
        return t.outcome();
    });

    criterion(3, "tableau matrices commute with the products (same sweep)", 60, [] {
        Tally t;
        for (std::size_t n = 1; n <= 4; ++n) t.add(run_check("commuting", n, 8));
        t.add(check_commuting_random(10000, 6, 40, 2025));
        return t.outcome();
    });

    criterion(4, "faithful on 3 letters, len<=8", 120, [] {
        Tally t;
        t.add(run_check("faithful", 3, 8));
        return t.outcome();
    });

    criterion(5, "4-letter witness: wp(bdac) = wp(dbac), tab differs", 0, [] {
        const Word a = parse_word("bdac", 4), b = parse_word("dbac", 4);
        const bool ok = wp(a) == wp(b) && !(tab(a) == tab(b));
        return Outcome{ok, ok ? "images equal, tableaux differ" : "witness failed"};
    });

    criterion(6, "Knuth / troplactic / dual / Frobenius (m<=6) axioms, n<=6", 0, [] {
        std::uint64_t cases = 0, violations = 0;
        std::string first;
        for (std::size_t n = 1; n <= 6; ++n)
            for (const auto& a : check_axioms(n, 6)) {
                cases += a.cases;
                violations += a.violations;
                if (a.violations && first.empty()) first = a.name + " at n=" + std::to_string(n);
            }
        std::string note = std::to_string(cases) + " cases, " + std::to_string(violations) + " violations";
        if (!first.empty()) note += "; " + first;
        return Outcome{violations == 0, note};
    });

    criterion(7, "identity (2,2): 1e4 samples in TMat3 and in 3-letter plactic", 0, [] {
        Tally t;
        const Identity id = build_identity(2, 2);
        t.add(check_identity_random(id, IdentityMonoid::TMat3, 10000, 7));
        t.add(check_identity_random(id, IdentityMonoid::Plactic3, 10000, 8));
        return t.outcome();
    });

    criterion(8, "co-mirror preserves tableau equality, n=3,4 len<=6", 300, [] {
        Tally t;
        t.add(run_check("co-mirror-knuth", 3, 6));
        t.add(run_check("co-mirror-knuth", 4, 6));
        return t.outcome();
    });

    criterion(9, "permutations: tab equal iff cloaktic and reverse-cloaktic, n<=6", 0, [] {
        Tally t;
        for (std::size_t n = 1; n <= 6; ++n) t.add(run_check("reversal", n, n));
        return t.outcome();
    });

    criterion(10, "divide and conquer equals fold at 1e4/1e5/1e6 (n=5)", 0, [] {
        const auto rows = bench_mho(5, {10000, 100000, 1000000}, 10);
        bool equal = true;
        std::string note = "ratios";
        for (std::size_t k = 0; k < rows.size(); ++k) {
            equal = equal && rows[k].equal;
            if (k) {
                char buf[64];
                const double r = rows[k].fast_seconds / rows[k - 1].fast_seconds;
                std::snprintf(buf, sizeof buf, " %.2f%s", r, (r >= 8 && r <= 13) ? "" : " (outside 8..13)");
                note += buf;
            }
        }
        note += equal ? "; results equal" : "; results differ";
        note += " (timing informational)";
        return Outcome{equal, note};
    });

    return failures ? 1 : 0;
}
