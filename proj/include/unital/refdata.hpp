#pragma once

// Embedded reference tables for the classical classification of N-unital
// functions, N <= 4: expected counts, the value sets C^N, and the published
// function tables transcribed entry by entry.
//
// The tables are transcribed verbatim, typos included; entries copied from a
// suspect spot carry verbatim_uncertain = true.  Comparisons against the
// computed sets treat table disagreements as warnings, never as failures: the
// computed set, validated by the definitional oracle and the expected counts,
// is the source of truth.

#include <cstddef>
#include <vector>

namespace unital::refdata {

struct AppendixEntry {
    const char* expr;
    const char* source;
    bool verbatim_uncertain;
};

// One classical family of U_4, given as a union of sextets.
struct FamilySpec {
    const char* name;
    const char* representative;                 // the family's named generator
    std::vector<const char*> sextet_generators;  // one per sextet in the union
    size_t expected_size;
};

inline const std::vector<std::pair<int, size_t>>& expected_counts() {
    static const std::vector<std::pair<int, size_t>> counts{{1, 6}, {2, 36}, {3, 84}, {4, 252}};
    return counts;
}

// C^N displays; 1+u = -u^2 and 1+u^2 = -u make two entries of the N = 3 list
// redundant, so it holds 13 expressions for 11 distinct values.
inline const std::vector<const char*>* value_set_exprs(int n) {
    static const std::vector<const char*> c2{"0", "1", "-1", "1/2", "2", "inf"};
    static const std::vector<const char*> c3{"0",     "1",     "u",       "-u",         "u^2",
                                             "-u^2",  "1+u",   "1-u",     "1+u^2",      "1-u^2",
                                             "1/(1-u)", "1/(1-u^2)", "inf"};
    static const std::vector<const char*> c4{"0",   "1",   "-1",  "1/2",     "2",         "i",
                                             "-i",  "1+i", "1-i", "(1+i)/2", "(1-i)/2",   "inf"};
    switch (n) {
        case 2: return &c2;
        case 3: return &c3;
        case 4: return &c4;
        default: return nullptr;
    }
}

inline const std::vector<size_t>& family_sizes_4() {
    static const std::vector<size_t> sizes{72, 36, 18, 36, 6, 48, 24, 12};
    return sizes;
}

// The eight families of U_4 as unions of sextets (the defining displays, with
// the epsilon-unions over roots of unity expanded).
inline const std::vector<FamilySpec>& u4_families() {
    static const std::vector<FamilySpec> families{
        {"O(x)",
         "x",
         {"x", "-x", "ix", "-ix",
          "i(x+1)/(x-1)", "i(-x+1)/(-x-1)", "i(ix+1)/(ix-1)", "i(-ix+1)/(-ix-1)",
          "(x+1)/(x+i)", "(-x+1)/(-x+i)", "(ix+1)/(ix+i)", "(-ix+1)/(-ix+i)"},
         72},
        {"O(x^2)",
         "x^2",
         {"x^2", "-x^2", "((x-1)/(x+1))^2", "-((x-1)/(x+1))^2", "((x-i)/(x+i))^2", "-((x-i)/(x+i))^2"},
         36},
        {"O(x^4)", "x^4", {"x^4", "((x+1)/(x-1))^4", "((x-i)/(x+i))^4"}, 18},
        {"O(2x/(x^2+1))",
         "2x/(x^2+1)",
         {"2x/(x^2+1)", "-2x/(x^2+1)", "2ix/(x^2-1)", "-2ix/(x^2-1)", "(x^2-1)/(x^2+1)",
          "-(x^2-1)/(x^2+1)"},
         36},
        {"<4x^2/(x^2+1)^2>", "4x^2/((x^2+1)^2)", {"4x^2/((x^2+1)^2)"}, 6},
        {"O(2x/(x+1))",
         "2x/(x+1)",
         {"(x-1)/(x+1)", "-(x-1)/(x+1)", "(x-i)/(x+i)", "-(x-i)/(x+i)", "(1-i)x/(x+1)",
          "(1-i)x/(x-1)", "(1+i)x/(x+1)", "(1+i)x/(x-1)"},
         48},
        {"O(x(x-1)/(x^2+1))",
         "x(x-1)/(x^2+1)",
         {"x(x-1)/(x^2+1)", "x(x+1)/(x^2+1)", "x(x-i)/(x^2-1)", "x(x+i)/(x^2-1)"},
         24},
        {"O(2(1+i)x/((x+1)(x+i)))",
         "2(1+i)x/((x+1)(x+i))",
         {"2(1+i)x/((x+1)(x+i))", "2(1-i)x/((x+1)(x-i))"},
         12},
    };
    return families;
}

namespace detail {

#define UNITAL_REF(expr, src) {expr, src, false}
#define UNITAL_REF_UNCERTAIN(expr, src) {expr, src, true}

inline const std::vector<AppendixEntry>& u1_table() {
    static const std::vector<AppendixEntry> t{
        UNITAL_REF("x", "U1 table"),
        UNITAL_REF("1/x", "U1 table"),
        UNITAL_REF("x/(x-1)", "U1 table"),
        UNITAL_REF("(x-1)/x", "U1 table"),
        UNITAL_REF("1-x", "U1 table"),
        UNITAL_REF("1/(1-x)", "U1 table"),
    };
    return t;
}

inline const std::vector<AppendixEntry>& u2_table() {
    static const std::vector<AppendixEntry> t{
        // row 1
        UNITAL_REF("x", "U2 table, row 1"),
        UNITAL_REF("1/x", "U2 table, row 1"),
        UNITAL_REF("x/(x-1)", "U2 table, row 1"),
        UNITAL_REF("(x-1)/x", "U2 table, row 1"),
        UNITAL_REF("1-x", "U2 table, row 1"),
        UNITAL_REF("1/(1-x)", "U2 table, row 1"),
        UNITAL_REF("1/x^2", "U2 table, row 1"),
        UNITAL_REF("x^2", "U2 table, row 1"),
        UNITAL_REF("x^2/(x^2-1)", "U2 table, row 1"),
        UNITAL_REF("(x^2-1)/x^2", "U2 table, row 1"),
        UNITAL_REF("1/(1-x^2)", "U2 table, row 1"),
        UNITAL_REF("1-x^2", "U2 table, row 1"),
        // row 2
        UNITAL_REF("1/(1+x)", "U2 table, row 2"),
        UNITAL_REF("x/(1+x)", "U2 table, row 2"),
        UNITAL_REF("(1+x)/x", "U2 table, row 2"),
        UNITAL_REF("-x", "U2 table, row 2"),
        UNITAL_REF("-1/x", "U2 table, row 2"),
        UNITAL_REF("1+x", "U2 table, row 2"),
        UNITAL_REF("(x+1)/2", "U2 table, row 2"),
        UNITAL_REF("(1-x)/2", "U2 table, row 2"),
        UNITAL_REF("(1+x)/(x-1)", "U2 table, row 2"),
        UNITAL_REF("(x-1)/(1+x)", "U2 table, row 2"),
        UNITAL_REF("2/(1+x)", "U2 table, row 2"),
        UNITAL_REF("2/(1-x)", "U2 table, row 2"),
        // row 3
        UNITAL_REF("(1+x)/(1-x)", "U2 table, row 3"),
        UNITAL_REF("(1-x)/(1+x)", "U2 table, row 3"),
        UNITAL_REF("2x/(1+x)", "U2 table, row 3"),
        UNITAL_REF("2x/(x-1)", "U2 table, row 3"),
        UNITAL_REF("(1+x)/(2x)", "U2 table, row 3"),
        UNITAL_REF("(x-1)/(2x)", "U2 table, row 3"),
        UNITAL_REF("(1+x)^2/((x-1)^2)", "U2 table, row 3"),
        UNITAL_REF("(x-1)^2/((1+x)^2)", "U2 table, row 3"),
        UNITAL_REF("(1+x)^2/(4x)", "U2 table, row 3"),
        UNITAL_REF("4x/((1+x)^2)", "U2 table, row 3"),
        UNITAL_REF("-4x/((x-1)^2)", "U2 table, row 3"),
        UNITAL_REF("(x-1)^2/(-4x)", "U2 table, row 3"),
    };
    return t;
}

inline const std::vector<AppendixEntry>& u3_table() {
    static const std::vector<AppendixEntry> t{
        // row 1
        UNITAL_REF("x", "U3 table, row 1"),
        UNITAL_REF("1-x", "U3 table, row 1"),
        UNITAL_REF("x/(x-1)", "U3 table, row 1"),
        UNITAL_REF("(x-1)/x", "U3 table, row 1"),
        UNITAL_REF("1/x", "U3 table, row 1"),
        UNITAL_REF("1/(1-x)", "U3 table, row 1"),
        UNITAL_REF("ux", "U3 table, row 1"),
        UNITAL_REF("1-ux", "U3 table, row 1"),
        UNITAL_REF("(ux-1)/(ux)", "U3 table, row 1"),
        UNITAL_REF("1/(1-ux)", "U3 table, row 1"),
        UNITAL_REF("1/(ux)", "U3 table, row 1"),
        UNITAL_REF("ux/(ux-1)", "U3 table, row 1"),
        // row 2
        UNITAL_REF("u^2x", "U3 table, row 2"),
        UNITAL_REF("1-u^2x", "U3 table, row 2"),
        UNITAL_REF("1/(u^2x)", "U3 table, row 2"),
        UNITAL_REF("1/(1-u^2x)", "U3 table, row 2"),
        UNITAL_REF("u^2x/(u^2x-1)", "U3 table, row 2"),
        UNITAL_REF("(u^2x-1)/(u^2x)", "U3 table, row 2"),
        UNITAL_REF("x^3", "U3 table, row 2"),
        UNITAL_REF("1-x^3", "U3 table, row 2"),
        UNITAL_REF("1/x^3", "U3 table, row 2"),
        UNITAL_REF("1/(1-x^3)", "U3 table, row 2"),
        UNITAL_REF("x^3/(x^3-1)", "U3 table, row 2"),
        UNITAL_REF("(x^3-1)/x^3", "U3 table, row 2"),
        // row 3
        UNITAL_REF("(1-u)/(x-u)", "U3 table, row 3"),
        UNITAL_REF("(x-u)/(1-u)", "U3 table, row 3"),
        UNITAL_REF("(x-1)/(u-1)", "U3 table, row 3"),
        UNITAL_REF("(u-1)/(x-1)", "U3 table, row 3"),
        UNITAL_REF("(x-u)/(x-1)", "U3 table, row 3"),
        UNITAL_REF("(x-1)/(x-u)", "U3 table, row 3"),
        UNITAL_REF("(1-u^2)/(x-u^2)", "U3 table, row 3"),
        UNITAL_REF("(x-u^2)/(1-u^2)", "U3 table, row 3"),
        UNITAL_REF("(x-1)/(u^2-1)", "U3 table, row 3"),
        UNITAL_REF("(u^2-1)/(x-1)", "U3 table, row 3"),
        UNITAL_REF("(x-u^2)/(x-1)", "U3 table, row 3"),
        UNITAL_REF("(x-1)/(x-u^2)", "U3 table, row 3"),
        // row 4
        UNITAL_REF("(1-u^2)x/(x-u)", "U3 table, row 4"),
        UNITAL_REF("(x-u)/((1-u^2)x)", "U3 table, row 4"),
        UNITAL_REF("(1-u)x/(x-u^2)", "U3 table, row 4"),
        UNITAL_REF("(x-u^2)/((1-u)x)", "U3 table, row 4"),
        UNITAL_REF("(x-u^2)/(u(x-u))", "U3 table, row 4"),
        UNITAL_REF("u(x-u)/(x-u^2)", "U3 table, row 4"),
        // row 5
        UNITAL_REF("(x-u^2)/(u-u^2)", "U3 table, row 5"),
        UNITAL_REF("(u-u^2)/(x-u^2)", "U3 table, row 5"),
        UNITAL_REF("(u^2-u)/(x-u)", "U3 table, row 5"),
        UNITAL_REF("(x-u)/(u^2-u)", "U3 table, row 5"),
        UNITAL_REF("(x-u)/(x-u^2)", "U3 table, row 5"),
        UNITAL_REF("(x-u^2)/(x-u)", "U3 table, row 5"),
        // row 6: entries 3 and 4 repeat row 4 verbatim in the printed table
        UNITAL_REF("(1-ux)/(x-u)", "U3 table, row 6"),
        UNITAL_REF("(x-u)/(1-ux)", "U3 table, row 6"),
        UNITAL_REF_UNCERTAIN("(x-u^2)/(u(x-u))", "U3 table, row 6 (repeats row 4)"),
        UNITAL_REF_UNCERTAIN("u(x-u)/(x-u^2)", "U3 table, row 6 (repeats row 4)"),
        UNITAL_REF_UNCERTAIN("(x-1)/(u^2-ux)", "U3 table, row 6"),
        UNITAL_REF_UNCERTAIN("(x-1)/(u-u^2x)", "U3 table, row 6"),
        // row 7
        UNITAL_REF("(1-ux)/(1-x)", "U3 table, row 7"),
        UNITAL_REF("(1-x)/(1-ux)", "U3 table, row 7"),
        UNITAL_REF("(1-u)x/(x-1)", "U3 table, row 7"),
        UNITAL_REF("(x-1)/((1-u)x)", "U3 table, row 7"),
        UNITAL_REF("(1-u^2)x/(x-u^2)", "U3 table, row 7"),
        UNITAL_REF("(x-u^2)/((1-u^2)x)", "U3 table, row 7"),
        // row 8
        UNITAL_REF("(1-u^2)x/(x-1)", "U3 table, row 8"),
        UNITAL_REF("(x-1)/((1-u^2)x)", "U3 table, row 8"),
        UNITAL_REF("(1-u^2x)/(1-x)", "U3 table, row 8"),
        UNITAL_REF("(1-x)/(1-u^2x)", "U3 table, row 8"),
        UNITAL_REF("(1-u)x/(x-u)", "U3 table, row 8"),
        UNITAL_REF("(x-u)/((1-u)x)", "U3 table, row 8"),
        // row 9
        UNITAL_REF("-3x/((x-1)^2)", "U3 table, row 9"),
        UNITAL_REF("(x-1)^2/(-3x)", "U3 table, row 9"),
        UNITAL_REF("(x-1)^2/(x^2+x+1)", "U3 table, row 9"),
        UNITAL_REF("(x^2+x+1)/((x-1)^2)", "U3 table, row 9"),
        UNITAL_REF("(x^2+x+1)/(3x)", "U3 table, row 9"),
        UNITAL_REF("3x/(x^2+x+1)", "U3 table, row 9"),
        // row 10
        UNITAL_REF("-3u^2x/((x-u^2)^2)", "U3 table, row 10"),
        UNITAL_REF("(x-u^2)^2/(-3u^2x)", "U3 table, row 10"),
        UNITAL_REF("(x-1)(x-u)/((x-u^2)^2)", "U3 table, row 10"),
        UNITAL_REF("(x-u^2)^2/((x-1)(x-u))", "U3 table, row 10"),
        UNITAL_REF("3u^2x/((x-1)(x-u))", "U3 table, row 10"),
        UNITAL_REF("(x-1)(x-u)/(3u^2x)", "U3 table, row 10"),
        // row 11
        UNITAL_REF("-3ux/((x-u)^2)", "U3 table, row 11"),
        UNITAL_REF("(x-u)^2/(-3ux)", "U3 table, row 11"),
        UNITAL_REF("(x-1)(x-u^2)/((x-u)^2)", "U3 table, row 11"),
        UNITAL_REF("(x-u)^2/((x-1)(x-u^2))", "U3 table, row 11"),
        UNITAL_REF("3ux/((x-1)(x-u^2))", "U3 table, row 11"),
        UNITAL_REF("(x-1)(x-u^2)/(3ux)", "U3 table, row 11"),
    };
    return t;
}

inline const std::vector<AppendixEntry>& u4_table() {
    static const std::vector<AppendixEntry> t{
        // ---- O(x) block, rows 1..6 (w = 1-i, wbar = 1+i written out) ----
        UNITAL_REF("1-x", "U4 table, O(x) row 1"),
        UNITAL_REF("x", "U4 table, O(x) row 1"),
        UNITAL_REF("1/(1-x)", "U4 table, O(x) row 1"),
        UNITAL_REF("1/x", "U4 table, O(x) row 1"),
        UNITAL_REF("(x-1)/x", "U4 table, O(x) row 1"),
        UNITAL_REF("x/(x-1)", "U4 table, O(x) row 1"),
        UNITAL_REF("i(x+1)/(x-1)", "U4 table, O(x) row 1"),
        UNITAL_REF("(x-1)/(i(x+1))", "U4 table, O(x) row 1"),
        UNITAL_REF("(1+i)(x-i)/(x+1)", "U4 table, O(x) row 1"),
        UNITAL_REF("(1-i)(x+1)/(2(x-i))", "U4 table, O(x) row 1"),
        UNITAL_REF("(1-i)(x-i)/(x-1)", "U4 table, O(x) row 1"),
        UNITAL_REF("(1+i)(x-1)/(2(x-i))", "U4 table, O(x) row 1"),
        UNITAL_REF("-x", "U4 table, O(x) row 2"),
        UNITAL_REF("x+1", "U4 table, O(x) row 2"),
        UNITAL_REF("-1/x", "U4 table, O(x) row 2"),
        UNITAL_REF("1/(x+1)", "U4 table, O(x) row 2"),
        UNITAL_REF("(x+1)/x", "U4 table, O(x) row 2"),
        UNITAL_REF("x/(x+1)", "U4 table, O(x) row 2"),
        UNITAL_REF("(1-x)/(i(x+1))", "U4 table, O(x) row 2"),
        UNITAL_REF("i(x+1)/(1-x)", "U4 table, O(x) row 2"),
        UNITAL_REF("(1+i)(x+1)/(2(x+i))", "U4 table, O(x) row 2"),
        UNITAL_REF("(1-i)(x+i)/(x+1)", "U4 table, O(x) row 2"),
        UNITAL_REF("(1-i)(x-1)/(2(x+i))", "U4 table, O(x) row 2"),
        UNITAL_REF("(1+i)(x+i)/(x-1)", "U4 table, O(x) row 2"),
        UNITAL_REF("ix", "U4 table, O(x) row 3"),
        UNITAL_REF("-i/x", "U4 table, O(x) row 3"),
        UNITAL_REF("i/(x+i)", "U4 table, O(x) row 3"),
        UNITAL_REF("(x+i)/i", "U4 table, O(x) row 3"),
        UNITAL_REF("(x+i)/x", "U4 table, O(x) row 3"),
        UNITAL_REF("x/(x+i)", "U4 table, O(x) row 3"),
        UNITAL_REF("i(x-i)/(x+i)", "U4 table, O(x) row 3"),
        UNITAL_REF("(x+i)/(i(x-i))", "U4 table, O(x) row 3"),
        UNITAL_REF("(1-i)(x-1)/(x+i)", "U4 table, O(x) row 3"),
        UNITAL_REF("(1+i)(x+i)/(2(x-1))", "U4 table, O(x) row 3"),
        UNITAL_REF("(1+i)(x-1)/(x-i)", "U4 table, O(x) row 3"),
        UNITAL_REF("(1-i)(x-i)/(2(x-1))", "U4 table, O(x) row 3"),
        UNITAL_REF("-ix", "U4 table, O(x) row 4"),
        UNITAL_REF("-i/(x-i)", "U4 table, O(x) row 4"),
        UNITAL_REF("i/x", "U4 table, O(x) row 4"),
        UNITAL_REF("(x-i)/(-i)", "U4 table, O(x) row 4"),
        UNITAL_REF("(x-i)/x", "U4 table, O(x) row 4"),
        UNITAL_REF("x/(x-i)", "U4 table, O(x) row 4"),
        UNITAL_REF("(x-i)/(i(x+i))", "U4 table, O(x) row 4"),
        UNITAL_REF("i(x+i)/(x-i)", "U4 table, O(x) row 4"),
        UNITAL_REF("(1+i)(x-i)/(2(x+1))", "U4 table, O(x) row 4"),
        UNITAL_REF("(1-i)(x+1)/(x-i)", "U4 table, O(x) row 4"),
        UNITAL_REF("(1-i)(x+i)/(2(x+1))", "U4 table, O(x) row 4"),
        UNITAL_REF("(1+i)(x+1)/(x+i)", "U4 table, O(x) row 4"),
        UNITAL_REF("(x-1)/(x-i)", "U4 table, O(x) row 5"),
        UNITAL_REF("(x-i)/(x-1)", "U4 table, O(x) row 5"),
        UNITAL_REF("(1-i)/(1-x)", "U4 table, O(x) row 5"),
        UNITAL_REF("(1-x)/(1-i)", "U4 table, O(x) row 5"),
        UNITAL_REF("(1-i)/(x-i)", "U4 table, O(x) row 5"),
        UNITAL_REF("(x-i)/(1-i)", "U4 table, O(x) row 5"),
        UNITAL_REF("(x+1)/(x-i)", "U4 table, O(x) row 5"),
        UNITAL_REF("(x-i)/(x+1)", "U4 table, O(x) row 5"),
        UNITAL_REF("(i-x)/(1+i)", "U4 table, O(x) row 5"),
        UNITAL_REF("(1+i)/(i-x)", "U4 table, O(x) row 5"),
        UNITAL_REF("(x+1)/(1+i)", "U4 table, O(x) row 5"),
        UNITAL_REF("(1+i)/(x+1)", "U4 table, O(x) row 5"),
        UNITAL_REF("(x-1)/(x+i)", "U4 table, O(x) row 6"),
        UNITAL_REF("(x+i)/(x-1)", "U4 table, O(x) row 6"),
        UNITAL_REF("(1+i)/(1-x)", "U4 table, O(x) row 6"),
        UNITAL_REF("(1-x)/(1+i)", "U4 table, O(x) row 6"),
        UNITAL_REF("(1+i)/(x+i)", "U4 table, O(x) row 6"),
        UNITAL_REF("(x+i)/(1+i)", "U4 table, O(x) row 6"),
        // missing separator in the printed row; read as two entries
        UNITAL_REF_UNCERTAIN("(x+1)/(x+i)", "U4 table, O(x) row 6"),
        UNITAL_REF("(x+i)/(x+1)", "U4 table, O(x) row 6"),
        UNITAL_REF("(x+1)/(1-i)", "U4 table, O(x) row 6"),
        UNITAL_REF("(1-i)/(x+1)", "U4 table, O(x) row 6"),
        UNITAL_REF("(x+i)/(-(1-i))", "U4 table, O(x) row 6"),
        UNITAL_REF("-(1-i)/(x+i)", "U4 table, O(x) row 6"),
        // ---- O(x^2) block ----
        UNITAL_REF("1-x^2", "U4 table, O(x^2) row 1"),
        UNITAL_REF("x^2", "U4 table, O(x^2) row 1"),
        UNITAL_REF("1/(1-x^2)", "U4 table, O(x^2) row 1"),
        UNITAL_REF("1/x^2", "U4 table, O(x^2) row 1"),
        UNITAL_REF("(x^2-1)/x^2", "U4 table, O(x^2) row 1"),
        UNITAL_REF("x^2/(x^2-1)", "U4 table, O(x^2) row 1"),
        UNITAL_REF("(x+i)^2/((x-i)^2)", "U4 table, O(x^2) row 1"),
        UNITAL_REF("(x+i)^2/(4ix)", "U4 table, O(x^2) row 1"),
        UNITAL_REF("(x-i)^2/((x+i)^2)", "U4 table, O(x^2) row 1"),
        UNITAL_REF("(x-i)^2/(-4ix)", "U4 table, O(x^2) row 1"),
        UNITAL_REF("-4ix/((x-i)^2)", "U4 table, O(x^2) row 1"),
        UNITAL_REF("4ix/((x+i)^2)", "U4 table, O(x^2) row 1"),
        UNITAL_REF("-x^2", "U4 table, O(x^2) row 2"),
        UNITAL_REF("x^2+1", "U4 table, O(x^2) row 2"),
        UNITAL_REF("-1/x^2", "U4 table, O(x^2) row 2"),
        UNITAL_REF("1/(x^2+1)", "U4 table, O(x^2) row 2"),
        UNITAL_REF("(x^2+1)/x^2", "U4 table, O(x^2) row 2"),
        UNITAL_REF("x^2/(x^2+1)", "U4 table, O(x^2) row 2"),
        // the printed row repeats the six (x+-i)^2 entries of row 1 verbatim
        UNITAL_REF_UNCERTAIN("(x+i)^2/((x-i)^2)", "U4 table, O(x^2) row 2 (repeats row 1)"),
        UNITAL_REF_UNCERTAIN("(x+i)^2/(4ix)", "U4 table, O(x^2) row 2 (repeats row 1)"),
        UNITAL_REF_UNCERTAIN("(x-i)^2/((x+i)^2)", "U4 table, O(x^2) row 2 (repeats row 1)"),
        UNITAL_REF_UNCERTAIN("(x-i)^2/(-4ix)", "U4 table, O(x^2) row 2 (repeats row 1)"),
        UNITAL_REF_UNCERTAIN("-4ix/((x-i)^2)", "U4 table, O(x^2) row 2 (repeats row 1)"),
        UNITAL_REF_UNCERTAIN("4ix/((x+i)^2)", "U4 table, O(x^2) row 2 (repeats row 1)"),
        // the printed row 3 lists the <(x^2-1)/(x^2+1)> sextets, which the
        // defining display assigns to O(2x/(x^2+1)); they recur there
        UNITAL_REF_UNCERTAIN("(1+x^2)/2", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("(1-x^2)/2", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("2/(1-x^2)", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("2/(x^2+1)", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("(x^2+1)/(x^2-1)", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("(x^2-1)/(x^2+1)", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("2x^2/(x^2+1)", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("2x^2/(x^2-1)", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("(x^2+1)/(2x^2)", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("(x^2-1)/(2x^2)", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("(1-x^2)/(x^2+1)", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        UNITAL_REF_UNCERTAIN("(x^2+1)/(1-x^2)", "U4 table, O(x^2) row 3 (recurs under O(2x/(x^2+1)))"),
        // ---- O(x^4) block ----
        UNITAL_REF("1-x^4", "U4 table, O(x^4)"),
        UNITAL_REF("x^4", "U4 table, O(x^4)"),
        UNITAL_REF("1/(1-x^4)", "U4 table, O(x^4)"),
        UNITAL_REF("1/x^4", "U4 table, O(x^4)"),
        UNITAL_REF("(x^4-1)/x^4", "U4 table, O(x^4)"),
        UNITAL_REF("x^4/(x^4-1)", "U4 table, O(x^4)"),
        UNITAL_REF("(x+1)^4/(8x(x^2+1))", "U4 table, O(x^4)"),
        UNITAL_REF("8x(x^2+1)/((x+1)^4)", "U4 table, O(x^4)"),
        UNITAL_REF("-(x-1)^4/(8x(x^2+1))", "U4 table, O(x^4)"),
        UNITAL_REF("-8x(x^2+1)/((x-1)^4)", "U4 table, O(x^4)"),
        UNITAL_REF("(x+1)^4/((x-1)^4)", "U4 table, O(x^4)"),
        UNITAL_REF("(x-1)^4/((x+1)^4)", "U4 table, O(x^4)"),
        UNITAL_REF("(x+i)^4/((x-i)^4)", "U4 table, O(x^4)"),
        UNITAL_REF("(x-i)^4/((x+i)^4)", "U4 table, O(x^4)"),
        UNITAL_REF("8ix(1-x^2)/((x-i)^4)", "U4 table, O(x^4)"),
        UNITAL_REF("8ix(x^2-1)/((x+i)^4)", "U4 table, O(x^4)"),
        UNITAL_REF("i(x-i)^4/(8x(x^2-1))", "U4 table, O(x^4)"),
        UNITAL_REF("-i(x+i)^4/(8x(x^2-1))", "U4 table, O(x^4)"),
        // ---- O(2x/(x^2+1)) block ----
        UNITAL_REF("2x/(x^2+1)", "U4 table, O(2x/(x^2+1)) row 1"),
        UNITAL_REF("(x^2+1)/(2x)", "U4 table, O(2x/(x^2+1)) row 1"),
        UNITAL_REF("(x-1)^2/(-2x)", "U4 table, O(2x/(x^2+1)) row 1"),
        UNITAL_REF("(x-1)^2/(x^2+1)", "U4 table, O(2x/(x^2+1)) row 1"),
        UNITAL_REF("-2x/((x-1)^2)", "U4 table, O(2x/(x^2+1)) row 1"),
        UNITAL_REF("(x^2+1)/((x-1)^2)", "U4 table, O(2x/(x^2+1)) row 1"),
        UNITAL_REF("(x+1)^2/(2x)", "U4 table, O(2x/(x^2+1)) row 2"),
        UNITAL_REF("2x/((x+1)^2)", "U4 table, O(2x/(x^2+1)) row 2"),
        UNITAL_REF("-2x/(x^2+1)", "U4 table, O(2x/(x^2+1)) row 2"),
        UNITAL_REF("(x^2+1)/(-2x)", "U4 table, O(2x/(x^2+1)) row 2"),
        UNITAL_REF("(x+1)^2/(x^2+1)", "U4 table, O(2x/(x^2+1)) row 2"),
        UNITAL_REF("(x^2+1)/((x+1)^2)", "U4 table, O(2x/(x^2+1)) row 2"),
        UNITAL_REF("2ix/(x^2-1)", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("(x^2-1)/(2ix)", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("(x-i)^2/(-2ix)", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("-2ix/((x-i)^2)", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("(x-i)^2/(x^2-1)", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("(x^2-1)/((x-i)^2)", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("(1+x^2)/2", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("2/(x^2+1)", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("(1-x^2)/2", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("2/(1-x^2)", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("(x^2+1)/(x^2-1)", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("(x^2-1)/(x^2+1)", "U4 table, O(2x/(x^2+1)) row 3"),
        UNITAL_REF("-2ix/(x^2-1)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("(x^2-1)/(-2ix)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("(x+i)^2/(2ix)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("2ix/((x+i)^2)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("(x+i)^2/(x^2-1)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("(x^2-1)/((x+i)^2)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("2x^2/(x^2+1)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("(x^2+1)/(2x^2)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("2x^2/(x^2-1)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("(x^2-1)/(2x^2)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("(1-x^2)/(x^2+1)", "U4 table, O(2x/(x^2+1)) row 4"),
        UNITAL_REF("(x^2+1)/(1-x^2)", "U4 table, O(2x/(x^2+1)) row 4"),
        // ---- <4x^2/(x^2+1)^2> sextet ----
        UNITAL_REF("(x^2+1)^2/(4x^2)", "U4 table, <4x^2/(x^2+1)^2>"),
        UNITAL_REF("(x^2-1)^2/(-4x^2)", "U4 table, <4x^2/(x^2+1)^2>"),
        UNITAL_REF("-4x^2/((x^2-1)^2)", "U4 table, <4x^2/(x^2+1)^2>"),
        UNITAL_REF("4x^2/((x^2+1)^2)", "U4 table, <4x^2/(x^2+1)^2>"),
        UNITAL_REF("(x^2+1)^2/((x^2-1)^2)", "U4 table, <4x^2/(x^2+1)^2>"),
        UNITAL_REF("(x^2-1)^2/((x^2+1)^2)", "U4 table, <4x^2/(x^2+1)^2>"),
        // ---- O(2x/(x+1)) block ----
        UNITAL_REF("(1-x)/2", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("2/(1-x)", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("2/(x+1)", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("(x+1)/2", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("(x+1)/(x-1)", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("(x-1)/(x+1)", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("(1+i)x/(x+i)", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("(x+i)/((1+i)x)", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("(x-1)/((1-i)x)", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("(1-i)x/(x-1)", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("i(x+i)/(x-1)", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("(x-1)/(i(x+i))", "U4 table, O(2x/(x+1)) row 1"),
        UNITAL_REF("-2i/(x-i)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("(x-i)/(-2i)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("2i/(x+i)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("(x+i)/(2i)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("(x+i)/(x-i)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("(x-i)/(x+i)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("(1+i)x/(x-1)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("(x-1)/((1+i)x)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("(x-i)/((1-i)x)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("(1-i)x/(x-i)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("(1-x)/(i(x-i))", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("i(x-i)/(1-x)", "U4 table, O(2x/(x+1)) row 2"),
        UNITAL_REF("(1-x)/(x+1)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("(x+1)/(1-x)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("(x+1)/(2x)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("2x/(x+1)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("2x/(x-1)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("(x-1)/(2x)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("(1+i)x/(x+1)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("(x+1)/((1+i)x)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("(x+i)/((1-i)x)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("(1-i)x/(x+i)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("i(x+1)/(x+i)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("-i(x+i)/(x+1)", "U4 table, O(2x/(x+1)) row 3"),
        UNITAL_REF("2x/(x+i)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("(x+i)/(2x)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("(x-i)/(2x)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("2x/(x-i)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("(i-x)/(x+i)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("(x+i)/(i-x)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("(1+i)x/(x-i)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("(x-i)/((1+i)x)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("(1-i)x/(x+1)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("(x+1)/((1-i)x)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("i(x-i)/(x+1)", "U4 table, O(2x/(x+1)) row 4"),
        UNITAL_REF("(x+1)/(i(x-i))", "U4 table, O(2x/(x+1)) row 4"),
        // ---- O(x(x-1)/(x^2+1)) block; printed row 3 has only five entries ----
        UNITAL_REF("(1+x^2)/(1-x)", "U4 table, O(x(x-1)/(x^2+1)) row 1"),
        UNITAL_REF("(1-x)/(1+x^2)", "U4 table, O(x(x-1)/(x^2+1)) row 1"),
        UNITAL_REF("x(x+1)/(x-1)", "U4 table, O(x(x-1)/(x^2+1)) row 1"),
        UNITAL_REF("(x-1)/(x(x+1))", "U4 table, O(x(x-1)/(x^2+1)) row 1"),
        UNITAL_REF("x(x+1)/(x^2+1)", "U4 table, O(x(x-1)/(x^2+1)) row 1"),
        UNITAL_REF("(x^2+1)/(x(x+1))", "U4 table, O(x(x-1)/(x^2+1)) row 1"),
        UNITAL_REF("x(1-x)/(x+1)", "U4 table, O(x(x-1)/(x^2+1)) row 2"),
        UNITAL_REF("(x+1)/(x(1-x))", "U4 table, O(x(x-1)/(x^2+1)) row 2"),
        UNITAL_REF("(x+1)/(x^2+1)", "U4 table, O(x(x-1)/(x^2+1)) row 2"),
        UNITAL_REF("(x^2+1)/(x+1)", "U4 table, O(x(x-1)/(x^2+1)) row 2"),
        UNITAL_REF("x(x-1)/(x^2+1)", "U4 table, O(x(x-1)/(x^2+1)) row 2"),
        UNITAL_REF("(x^2+1)/(x(x-1))", "U4 table, O(x(x-1)/(x^2+1)) row 2"),
        UNITAL_REF_UNCERTAIN("-ix(x+i)/(x-i)", "U4 table, O(x(x-1)/(x^2+1)) row 3 (row lists 5 entries)"),
        UNITAL_REF_UNCERTAIN("(1-x^2)/(i(x-i))", "U4 table, O(x(x-1)/(x^2+1)) row 3 (row lists 5 entries)"),
        UNITAL_REF_UNCERTAIN("i(x-i)/(1-x^2)", "U4 table, O(x(x-1)/(x^2+1)) row 3 (row lists 5 entries)"),
        UNITAL_REF_UNCERTAIN("x(x+i)/(x^2-1)", "U4 table, O(x(x-1)/(x^2+1)) row 3 (row lists 5 entries)"),
        UNITAL_REF_UNCERTAIN("(x^2-1)/(x(x+i))", "U4 table, O(x(x-1)/(x^2+1)) row 3 (row lists 5 entries)"),
        UNITAL_REF("i(x+i)/(x(i-x))", "U4 table, O(x(x-1)/(x^2+1)) row 4"),
        UNITAL_REF("x(i-x)/(i(x+i))", "U4 table, O(x(x-1)/(x^2+1)) row 4"),
        UNITAL_REF("i(x+i)/(x^2-1)", "U4 table, O(x(x-1)/(x^2+1)) row 4"),
        UNITAL_REF("(x^2-1)/(i(x+i))", "U4 table, O(x(x-1)/(x^2+1)) row 4"),
        UNITAL_REF("x(x-i)/(x^2-1)", "U4 table, O(x(x-1)/(x^2+1)) row 4"),
        UNITAL_REF("(x^2-1)/(x(x-i))", "U4 table, O(x(x-1)/(x^2+1)) row 4"),
        // ---- O(2(1+i)x/((x+1)(x+i))) block ----
        UNITAL_REF("2(1+i)x/((x+1)(x+i))", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("(x+1)(x+i)/(2(1+i)x)", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("(x-1)(x-i)/((x+1)(x+i))", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("(x+1)(x+i)/((x-1)(x-i))", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("-2(1+i)x/((x-1)(x-i))", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("(x-1)(x-i)/(-2(1+i)x)", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("2(1-i)x/((x+1)(x-i))", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("(x+1)(x-i)/(2(1-i)x)", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("(x-1)(x+i)/((x+1)(x-i))", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("(x+1)(x-i)/((x-1)(x+i))", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("-2(1-i)x/((x-1)(x+i))", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
        UNITAL_REF("(x-1)(x+i)/(-2(1-i)x)", "U4 table, O(2(1+i)x/((x+1)(x+i)))"),
    };
    return t;
}

#undef UNITAL_REF
#undef UNITAL_REF_UNCERTAIN

}  // namespace detail

inline const std::vector<AppendixEntry>* appendix_table(int n) {
    switch (n) {
        case 1: return &detail::u1_table();
        case 2: return &detail::u2_table();
        case 3: return &detail::u3_table();
        case 4: return &detail::u4_table();
        default: return nullptr;
    }
}

}  // namespace unital::refdata
