#pragma once

// Value sets C^N = {U(0) : U in U_N} and the conjectured closed form
// {0,1,inf} joined with sextet orbits of roots of unity.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "unital/enumerate.hpp"
#include "unital/unital_fn.hpp"

namespace unital {

namespace detail {

inline std::vector<P1Value> dedup_sorted(std::vector<P1Value> vals) {
    std::map<std::string, P1Value> by_key;
    for (auto& v : vals) by_key.emplace(v.key(), v);
    std::vector<P1Value> out;
    out.reserve(by_key.size());
    for (auto& [k, v] : by_key) out.push_back(v);
    return out;
}

}  // namespace detail

inline std::vector<P1Value> value_set(const std::vector<UnitalFn>& fns) {
    std::vector<P1Value> vals;
    vals.reserve(fns.size());
    for (const auto& f : fns) vals.push_back(f.value_at_zero());
    return detail::dedup_sorted(std::move(vals));
}

inline std::vector<P1Value> value_set(int n, int jobs = 1) { return value_set(enumerate_unital(n, jobs)); }

// The six maps z, 1-z, 1/z, (z-1)/z, z/(z-1), 1/(1-z) on P^1, deduplicated;
// the orbit of a constant can degenerate to 1, 2 or 3 elements.
inline std::vector<P1Value> value_orbit(const P1Value& c) {
    const int n = c.order();
    const auto one = CycNum::one(n);

    const auto inv = [&](const P1Value& v) {
        if (v.infinite) return P1Value::finite(CycNum::zero(n));
        if (v.value.is_zero()) return P1Value::infinity(n);
        return P1Value::finite(v.value.inverse());
    };
    const auto one_minus = [&](const P1Value& v) {
        if (v.infinite) return v;
        return P1Value::finite(one - v.value);
    };

    std::vector<P1Value> images;
    images.push_back(c);
    images.push_back(one_minus(c));             // 1-z
    images.push_back(inv(c));                   // 1/z
    images.push_back(one_minus(inv(c)));        // (z-1)/z
    images.push_back(inv(one_minus(inv(c))));   // z/(z-1)
    images.push_back(inv(one_minus(c)));        // 1/(1-z)
    return detail::dedup_sorted(std::move(images));
}

// The conjectured C^N: {0,1,inf} plus the value orbits of zeta_N^j for
// j = 1..N/2 (even N), or of +-zeta_N^j for j = 1..(N-1)/2 (odd N; empty
// union when N = 1).
inline std::vector<P1Value> conjectured_value_set(int n) {
    std::vector<P1Value> vals;
    vals.push_back(P1Value::finite(CycNum::zero(n)));
    vals.push_back(P1Value::finite(CycNum::one(n)));
    vals.push_back(P1Value::infinity(n));
    const auto add_orbit = [&](const CycNum& c) {
        for (auto& v : value_orbit(P1Value::finite(c))) vals.push_back(v);
    };
    if (n % 2 == 0) {
        for (int j = 1; j <= n / 2; ++j) add_orbit(CycNum::root_of_unity(n, j));
    } else {
        for (int j = 1; j <= (n - 1) / 2; ++j) {
            add_orbit(CycNum::root_of_unity(n, j));
            add_orbit(-CycNum::root_of_unity(n, j));
        }
    }
    return detail::dedup_sorted(std::move(vals));
}

struct ConjectureReport {
    int order = 1;
    std::vector<P1Value> computed;
    std::vector<P1Value> conjectured;
    bool match = false;
    size_t cardinality = 0;
    size_t bound = 0;  // 3N for even N, 6N-3 for odd N
    bool bound_holds = false;
    std::string note;
};

// Compares the computed value set with the conjectured one.  A mismatch is a
// report outcome, never an error: the comparison does not assert the
// conjecture.
inline ConjectureReport conjecture_report(int n, int jobs = 1) {
    ConjectureReport rep;
    rep.order = n;
    rep.computed = value_set(n, jobs);
    rep.conjectured = conjectured_value_set(n);
    rep.cardinality = rep.computed.size();
    rep.bound = n % 2 == 0 ? static_cast<size_t>(3 * n) : static_cast<size_t>(6 * n - 3);
    rep.bound_holds = rep.cardinality <= rep.bound;
    auto keys = [](const std::vector<P1Value>& vs) {
        std::vector<std::string> ks;
        ks.reserve(vs.size());
        for (const auto& v : vs) ks.push_back(v.key());
        return ks;
    };
    rep.match = keys(rep.computed) == keys(rep.conjectured);
    if (n == 1) rep.note = "N=1 reading: the odd-N union is empty, leaving {0,1,inf}";
    return rep;
}

}  // namespace unital
