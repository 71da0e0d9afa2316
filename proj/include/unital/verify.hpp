#pragma once

// Comparison of the computed sets against the embedded reference tables, and
// the expansion of the eight classical U_4 families from their defining
// sextet generators.
//
// Policy: the expected counts and the value sets C^N are hard checks; the
// transcribed function tables are typo-prone, so any disagreement with them is
// reported as a warning and never fails a verification.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "unital/enumerate.hpp"
#include "unital/parse.hpp"
#include "unital/refdata.hpp"
#include "unital/values.hpp"

namespace unital {

struct VerifyReport {
    int order = 0;
    size_t computed_count = 0;
    size_t expected_count = 0;
    bool count_match = false;

    bool value_set_checked = false;
    bool value_set_match = true;
    std::vector<std::string> values_missing;  // expected but not computed
    std::vector<std::string> values_extra;    // computed but not expected

    bool table_checked = false;
    size_t table_entries = 0;   // as printed, duplicates included
    size_t table_distinct = 0;  // after parsing to canonical form
    std::vector<std::string> table_warnings;       // per-entry problems, flags
    std::vector<std::string> listed_not_computed;  // table entries outside the computed set
    std::vector<std::string> computed_not_listed;  // computed members absent from the table

    bool ok() const { return count_match && value_set_match; }
};

// Comparison against explicit fixtures; verify_order wires in the embedded
// ones.  Kept separate so a deliberately corrupted fixture can be exercised.
inline VerifyReport verify_against(const std::vector<UnitalFn>& fns, int n, size_t expected_count,
                                   const std::vector<const char*>* value_exprs,
                                   const std::vector<refdata::AppendixEntry>* table) {
    VerifyReport rep;
    rep.order = n;
    rep.computed_count = fns.size();
    rep.expected_count = expected_count;
    rep.count_match = rep.expected_count != 0 && rep.computed_count == rep.expected_count;

    std::set<std::string> computed_keys;
    for (const auto& f : fns) computed_keys.insert(f.canonical_key());

    if (value_exprs) {
        rep.value_set_checked = true;
        std::map<std::string, std::string> expected;  // key -> expression
        for (const char* e : *value_exprs) expected.emplace(parse_p1(e, n).key(), e);
        std::set<std::string> computed;
        for (const auto& v : value_set(fns)) computed.insert(v.key());
        for (const auto& [key, expr] : expected)
            if (!computed.count(key)) rep.values_missing.push_back(expr);
        for (const auto& v : value_set(fns))
            if (!expected.count(v.key())) rep.values_extra.push_back(v.to_string());
        rep.value_set_match = rep.values_missing.empty() && rep.values_extra.empty();
    }

    if (table) {
        rep.table_checked = true;
        rep.table_entries = table->size();
        std::map<std::string, const refdata::AppendixEntry*> listed;  // canonical key -> entry
        for (const auto& entry : *table) {
            if (entry.verbatim_uncertain)
                rep.table_warnings.push_back(std::string("uncertain transcription: \"") + entry.expr +
                                             "\" (" + entry.source + ")");
            try {
                const UnitalFn f = parse_unital(entry.expr, n);
                auto [it, fresh] = listed.emplace(f.canonical_key(), &entry);
                if (!fresh)
                    rep.table_warnings.push_back(std::string("duplicate entry: \"") + entry.expr + "\" (" +
                                                 entry.source + ") repeats \"" + it->second->expr + "\" (" +
                                                 it->second->source + ")");
            } catch (const ParseError& err) {
                rep.table_warnings.push_back(std::string("unusable entry: \"") + entry.expr + "\" (" +
                                             entry.source + "): " + err.what());
            }
        }
        rep.table_distinct = listed.size();
        for (const auto& [key, entry] : listed)
            if (!computed_keys.count(key))
                rep.listed_not_computed.push_back(std::string(entry->expr) + " (" + entry->source + ")");
        for (const auto& f : fns)
            if (!listed.count(f.canonical_key())) rep.computed_not_listed.push_back(f.to_text());
    }
    return rep;
}

inline VerifyReport verify_order(int n, int jobs = 1) {
    size_t expected_count = 0;
    for (const auto& [order, count] : refdata::expected_counts())
        if (order == n) expected_count = count;
    return verify_against(enumerate_unital(n, jobs), n, expected_count, refdata::value_set_exprs(n),
                          refdata::appendix_table(n));
}

// ---- classical family structure of U_4 ----

struct FamilyReport {
    std::string name;
    std::string representative_key;
    size_t expected_size = 0;
    std::set<std::string> members;  // canonical keys
};

struct FamilyCheck {
    std::vector<FamilyReport> families;
    bool sizes_match = false;       // per-family sizes all as published
    bool disjoint = false;          // families pairwise disjoint
    bool covers = false;            // union is exactly U_4
    bool reps_in_own_family = false;
    bool ok() const { return sizes_match && disjoint && covers && reps_in_own_family; }
};

// Expands each family as the union of the sextets of its published
// generators, then checks the partition claims against the computed U_4.
inline FamilyCheck check_u4_families(const std::vector<UnitalFn>& u4) {
    FamilyCheck out;
    std::set<std::string> u4_keys;
    for (const auto& f : u4) u4_keys.insert(f.canonical_key());

    for (const auto& spec : refdata::u4_families()) {
        FamilyReport fam;
        fam.name = spec.name;
        fam.expected_size = spec.expected_size;
        fam.representative_key = parse_unital(spec.representative, 4).canonical_key();
        for (const char* gen : spec.sextet_generators) {
            const auto six = parse_unital(gen, 4).sextet();
            if (!six) throw std::logic_error(std::string("family generator not 4-unital: ") + gen);
            for (const auto& g : *six) fam.members.insert(g.canonical_key());
        }
        out.families.push_back(std::move(fam));
    }

    out.sizes_match = true;
    out.disjoint = true;
    out.reps_in_own_family = true;
    std::set<std::string> all;
    for (const auto& fam : out.families) {
        if (fam.members.size() != fam.expected_size) out.sizes_match = false;
        if (!fam.members.count(fam.representative_key)) out.reps_in_own_family = false;
        for (const auto& key : fam.members) {
            if (!all.insert(key).second) out.disjoint = false;
        }
    }
    out.covers = all == u4_keys;
    return out;
}

}  // namespace unital
