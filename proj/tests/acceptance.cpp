// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance <criterion> [path-to-cli]
//
// criterion is 1..7, "3b" (family-structure companion to 3) or "all".
// Exit status: number of failing criteria.
//
// Criterion 3 asserts that the eight classical families of U_4 are the orbits
// of the group generated by the sextet maps, the scalings x -> zeta^r x and
// the Galois twists.  That premise is false: every one of those generators
// fixes 0 and infinity, so the number of times 0 resp. infinity occurs among
// the zeros/poles of {f, 1-f} is constant along an orbit, and it already
// separates x, i(x+1)/(x-1) and (x+1)/(x+i), which the first classical family
// contains together.  The decomposition under that group has 17 orbits, so
// criterion 3 reports FAIL by design; criterion 3b verifies the families
// themselves (as unions of sextets) exactly.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "unital/enumerate.hpp"
#include "unital/json_io.hpp"
#include "unital/orbits.hpp"
#include "unital/parse.hpp"
#include "unital/refdata.hpp"
#include "unital/values.hpp"
#include "unital/verify.hpp"

using namespace unital;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

const std::vector<UnitalFn>& cached_un(int n) {
    static std::map<int, std::vector<UnitalFn>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_unital(n, n >= 5 ? 4 : 1)).first;
    return it->second;
}

// ---- criterion 1: counts ----
Outcome criterion_counts() {
    Outcome out;
    const std::array<size_t, 4> expect{6, 36, 84, 252};
    for (int n = 1; n <= 4; ++n) {
        const auto start = clock_type::now();
        const auto fns = enumerate_unital(n, 1);
        const double secs = seconds_since(start);
        if (fns.size() != expect[static_cast<size_t>(n - 1)])
            out.fail("|U_" + std::to_string(n) + "| = " + std::to_string(fns.size()) + ", expected " +
                     std::to_string(expect[static_cast<size_t>(n - 1)]));
        if (n <= 3 && secs > 1.0) out.fail("order " + std::to_string(n) + " took " + std::to_string(secs) + "s");
        if (n == 4) {
            if (secs > 60.0) out.fail("order 4 took " + std::to_string(secs) + "s single-threaded");
            char buf[64];
            std::snprintf(buf, sizeof buf, "order 4 single-threaded in %.2fs", secs);
            out.note(buf);
        }
    }
    if (out.pass) out.note("counts 6, 36, 84, 252");
    return out;
}

// ---- criterion 2: value sets ----
Outcome criterion_value_sets() {
    Outcome out;
    const std::array<size_t, 3> expected_distinct{6, 11, 12};
    for (int n = 2; n <= 4; ++n) {
        const auto* exprs = refdata::value_set_exprs(n);
        std::set<std::string> expect;
        for (const char* e : *exprs) expect.insert(parse_p1(e, n).key());
        if (expect.size() != expected_distinct[static_cast<size_t>(n - 2)]) {
            out.fail("reference C^" + std::to_string(n) + " has " + std::to_string(expect.size()) +
                     " distinct values");
            continue;
        }
        std::set<std::string> got;
        for (const auto& v : value_set(cached_un(n))) got.insert(v.key());
        if (got != expect) out.fail("C^" + std::to_string(n) + " differs from the reference set");
    }
    if (out.pass) out.note("C^2, C^3, C^4 match exactly (6, 11, 12 values)");
    return out;
}

// ---- criterion 3: orbit decomposition under the specified group ----
Outcome criterion_orbits() {
    Outcome out;
    const auto orbits = orbit_decompose(cached_un(4));
    std::multiset<size_t> sizes;
    for (const auto& o : orbits) sizes.insert(o.size);
    const std::multiset<size_t> expect{72, 36, 18, 36, 6, 48, 24, 12};

    std::string got = "{";
    for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) got += std::to_string(*it) + ",";
    got.back() = '}';
    out.note("computed " + std::to_string(orbits.size()) + " orbits, sizes " + got);

    if (orbits.size() != 8) out.fail("expected 8 orbits under sextet+scaling+Galois");
    if (sizes != expect) out.fail("size multiset differs from {72,36,18,36,6,48,24,12}");

    // the eight named generators must land in distinct orbits (this part holds)
    std::map<std::string, size_t> member_to_orbit;
    for (size_t i = 0; i < orbits.size(); ++i)
        for (const auto& key : orbits[i].members) member_to_orbit.emplace(key, i);
    std::set<size_t> hit;
    for (const auto& fam : refdata::u4_families())
        hit.insert(member_to_orbit.at(parse_unital(fam.representative, 4).canonical_key()));
    if (hit.size() != 8)
        out.fail("the eight named generators fall into " + std::to_string(hit.size()) + " orbits");
    else
        out.note("the eight named generators do land in distinct orbits");
    return out;
}

// ---- criterion 3b: the classical families as unions of sextets ----
Outcome criterion_families() {
    Outcome out;
    const auto check = check_u4_families(cached_un(4));
    if (!check.sizes_match) out.fail("family sizes differ from {72,36,18,36,6,48,24,12}");
    if (!check.disjoint) out.fail("families overlap");
    if (!check.covers) out.fail("families do not cover U_4");
    if (!check.reps_in_own_family) out.fail("a named generator is missing from its family");
    std::set<std::string> reps;
    for (const auto& fam : check.families) reps.insert(fam.representative_key);
    if (reps.size() != 8) out.fail("named generators are not pairwise distinct");
    if (out.pass)
        out.note("eight families partition U_4 with sizes 72/36/18/36/6/48/24/12, "
                 "representatives pairwise distinct");
    return out;
}

// ---- criterion 4: conjecture reports ----
Outcome criterion_conjecture() {
    Outcome out;
    const std::array<size_t, 4> cards{3, 6, 11, 12};
    const std::array<size_t, 4> bounds{3, 6, 15, 12};
    for (int n = 1; n <= 4; ++n) {
        ConjectureReport rep;
        rep.order = n;
        rep.computed = value_set(cached_un(n));
        rep.conjectured = conjectured_value_set(n);
        rep.cardinality = rep.computed.size();
        rep.bound = n % 2 == 0 ? static_cast<size_t>(3 * n) : static_cast<size_t>(6 * n - 3);
        rep.bound_holds = rep.cardinality <= rep.bound;
        auto keys = [](const std::vector<P1Value>& vs) {
            std::vector<std::string> ks;
            for (const auto& v : vs) ks.push_back(v.key());
            return ks;
        };
        rep.match = keys(rep.computed) == keys(rep.conjectured);
        if (!rep.match) out.fail("order " + std::to_string(n) + ": computed C^N differs from prediction");
        if (rep.cardinality != cards[static_cast<size_t>(n - 1)])
            out.fail("order " + std::to_string(n) + ": cardinality " + std::to_string(rep.cardinality));
        if (rep.bound != bounds[static_cast<size_t>(n - 1)] || !rep.bound_holds)
            out.fail("order " + std::to_string(n) + ": bound check");
    }
    if (out.pass) out.note("orders 1..4 match with cardinalities 3, 6, 11, 12");

    // Order 5 is exploratory: the report must complete and state its outcome;
    // no expected value is prescribed.
    const auto& u5 = cached_un(5);
    ConjectureReport rep5;
    rep5.computed = value_set(u5);
    rep5.conjectured = conjectured_value_set(5);
    std::set<std::string> conj_keys;
    for (const auto& v : rep5.conjectured) conj_keys.insert(v.key());
    std::set<std::string> comp_keys;
    for (const auto& v : rep5.computed) comp_keys.insert(v.key());
    const bool match5 = comp_keys == conj_keys;
    const bool bound5 = rep5.computed.size() <= 27;
    out.note("order 5 completed: |U_5| = " + std::to_string(u5.size()) + ", #C^5 = " +
             std::to_string(rep5.computed.size()) + ", match = " + (match5 ? "yes" : "no") +
             ", bound 27 " + (bound5 ? "holds" : "exceeded") + " (status reported, not asserted)");
    return out;
}

// ---- criterion 5: definitional oracle and symmetry closure ----
Outcome criterion_oracle() {
    Outcome out;
    for (int n = 1; n <= 4; ++n) {
        const auto& fns = cached_un(n);
        std::set<std::string> keys;
        for (const auto& f : fns) keys.insert(f.canonical_key());
        size_t checked = 0;
        for (const auto& f : fns) {
            auto [nf, df] = f.as_fraction();
            if (!peel_roots(nf)) {
                out.fail("numerator fails to peel: " + f.to_text());
                break;
            }
            const Poly comp_num = df - nf;
            if (!peel_roots(comp_num)) {
                out.fail("numerator of 1-f fails to peel: " + f.to_text());
                break;
            }
            auto c = f.complement();
            if (!c || !keys.count(c->canonical_key())) {
                out.fail("complement missing for " + f.to_text());
                break;
            }
            auto [ng, dg] = c->as_fraction();
            if (!(dg == df) || !(nf + ng == df)) {
                out.fail("identity num_f + num_(1-f) = den fails for " + f.to_text());
                break;
            }
            if (nf.degree() > n || df.degree() > n) {
                out.fail("degree bound exceeded by " + f.to_text());
                break;
            }
            auto six = f.sextet();
            if (!six) {
                out.fail("sextet undefined for " + f.to_text());
                break;
            }
            std::set<std::string> six_keys;
            for (const auto& g : *six) six_keys.insert(g.canonical_key());
            if (six_keys.size() != 6) {
                out.fail("|sextet| != 6 for " + f.to_text());
                break;
            }
            bool closed = true;
            for (const auto& g : *six) closed = closed && keys.count(g.canonical_key());
            for (int r = 1; r < n; ++r) closed = closed && keys.count(f.scaled(r).canonical_key());
            for (int k = 2; k < n; ++k)
                if (std::gcd(k, n) == 1) closed = closed && keys.count(f.galois_image(k).canonical_key());
            if (!closed) {
                out.fail("symmetry closure fails for " + f.to_text());
                break;
            }
            ++checked;
        }
        if (checked != fns.size()) return out;
    }
    // embeddings: U_1 into every computed order, U_2 into U_4
    for (int n = 2; n <= 4; ++n) {
        std::set<std::string> keys;
        for (const auto& f : cached_un(n)) keys.insert(f.canonical_key());
        for (const auto& f : cached_un(1))
            if (!keys.count(f.embedded(n).canonical_key())) out.fail("embed(U_1) not inside U_" + std::to_string(n));
    }
    {
        std::set<std::string> keys4;
        for (const auto& f : cached_un(4)) keys4.insert(f.canonical_key());
        for (const auto& f : cached_un(2))
            if (!keys4.count(f.embedded(4).canonical_key())) out.fail("embed(U_2) not inside U_4");
    }
    if (out.pass) out.note("oracle, closure, degrees, sextets and embeddings hold for all 378 members");
    return out;
}

// ---- criterion 6: arithmetic kernel ----
Outcome criterion_kernel() {
    Outcome out;
    std::mt19937_64 rng(0x5eed2026);
    auto random_rat = [&rng]() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 9);
        return make_rat(num(rng), den(rng));
    };
    auto random_cyc = [&](int n) {
        std::vector<Rat> coeffs(static_cast<size_t>(euler_phi(n)));
        for (auto& c : coeffs) c = random_rat();
        return CycNum::from_coeffs(n, std::move(coeffs));
    };
    for (int n = 1; n <= 6 && out.pass; ++n) {
        const CycNum one = CycNum::one(n);
        std::vector<long> units;
        for (long k = 1; k <= n; ++k)
            if (std::gcd(k, static_cast<long>(n)) == 1) units.push_back(k);
        for (int trial = 0; trial < 1000 && out.pass; ++trial) {
            const CycNum a = random_cyc(n), b = random_cyc(n), c = random_cyc(n);
            if (!((a + b) * c == a * c + b * c)) out.fail("distributivity");
            if (!((a * b) * c == a * (b * c))) out.fail("associativity");
            if (!a.is_zero() && !(a * a.inverse() == one)) out.fail("inverse");
            const long k = units[static_cast<size_t>(trial) % units.size()];
            if (!((a + b).galois(k) == a.galois(k) + b.galois(k))) out.fail("galois additivity");
            if (!((a * b).galois(k) == a.galois(k) * b.galois(k))) out.fail("galois multiplicativity");
            if (!((a * b).norm() == a.norm() * b.norm())) out.fail("norm multiplicativity");
            if (!a.is_zero() && !b.is_zero()) {
                const auto va = a.ord(2), vb = b.ord(2), vab = (a * b).ord(2);
                if (!(vab == valuation_of(va.value + vb.value))) out.fail("ord additivity");
            }
        }
    }
    const CycNum i4 = CycNum::root_of_unity(4, 1);
    if (!((CycNum::one(4) + i4).ord(2) == valuation_of(make_rat(1, 2)))) out.fail("ord_2(1+i) != 1/2");
    if (out.pass) out.note("1000 randomized cases per order 1..6; ord_2(1+i) = 1/2");
    return out;
}

// ---- criterion 7: byte-identical CLI output across runs and job counts ----
std::string run_capture(const std::string& command) {
    std::string data;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return data;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) data.append(buf, got);
    pclose(pipe);
    return data;
}

Outcome criterion_determinism(const std::string& cli) {
    Outcome out;
    if (cli.empty()) {
        out.fail("path to the CLI binary not supplied");
        return out;
    }
    const std::string base = cli + " enumerate --n 4 --format json";
    const std::string a = run_capture(base + " --jobs 1");
    const std::string b = run_capture(base + " --jobs 1");
    const std::string c = run_capture(base + " --jobs 4");
    const std::string d = run_capture(base + " --jobs 3");
    if (a.empty()) out.fail("no output captured from the CLI");
    if (a != b) out.fail("two identical runs differ");
    if (a != c || a != d) out.fail("output depends on --jobs");
    size_t lines = 0;
    for (char ch : a) lines += ch == '\n';
    if (lines != 252) out.fail("expected 252 output lines, got " + std::to_string(lines));
    if (out.pass) out.note("252 JSON lines, byte-identical across runs and --jobs 1/3/4");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    const std::string cli = argc > 2 ? argv[2] : "";

    struct Entry {
        const char* id;
        const char* label;
        Outcome (*run)();
    };

    int failures = 0;
    auto report = [&failures](const std::string& id, const Outcome& out) {
        std::printf("criterion %s: %s%s%s\n", id.c_str(), out.pass ? "PASS" : "FAIL",
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    };

    const std::vector<Entry> entries{
        {"1", "counts", criterion_counts},
        {"2", "value sets", criterion_value_sets},
        {"3", "orbit decomposition", criterion_orbits},
        {"3b", "family structure", criterion_families},
        {"4", "conjecture reports", criterion_conjecture},
        {"5", "definitional oracle", criterion_oracle},
        {"6", "arithmetic kernel", criterion_kernel},
    };

    bool matched = false;
    for (const auto& entry : entries) {
        if (which == "all" || which == entry.id) {
            matched = true;
            report(entry.id, entry.run());
        }
    }
    if (which == "all" || which == "7") {
        matched = true;
        report("7", criterion_determinism(cli));
    }
    if (!matched) {
        std::fprintf(stderr, "usage: %s <1|2|3|3b|4|5|6|7|all> [cli-path]\n", argv[0]);
        return 2;
    }
    return failures;
}
