#pragma once

// Exhaustive enumeration of U_N, the N-unital functions: non-constant f with
// all zeros and poles of f and 1-f inside Gamma_N^0.  Every such f arises,
// after clearing denominators in f + (1-f) = 1, from an exact identity
//
//     P - C*Q = D*R
//
// with P, Q, R monic products of linear factors over pairwise disjoint
// subsets L, K, J of Gamma_N^0 (P the shared poles, R the zeros of f, Q the
// zeros of 1-f) and C, D nonzero constants.  Degrees are bounded by N on each
// side (Mason-Stothers over the N+2 places Gamma_N^0 u {inf}), so the search
// space is finite: every assignment of sites to {J, K, L, unused} and every
// exponent vector with per-part degree sum <= N.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "unital/poly.hpp"
#include "unital/unital_fn.hpp"

namespace unital {

// Max numerator/denominator degree of any N-unital function; attained by x^N.
inline int degree_bound(int n) { return n; }

// A choice (J, K, L) of disjoint root subsets with positive exponents.
struct PartitionTriple {
    int order = 1;
    RootSpec j, k, l;
};

// The unique nonzero pair (C, D) with P - C*Q = D*R as polynomials, if any.
// Two independent coefficient rows pin the pair; every other row is verified
// exactly, division-free.  Proportional Q, R (both monic with disjoint
// supports, hence Q = R = 1) leave a one-parameter family of constants and
// are rejected: they could only produce constant f.
inline std::optional<std::pair<CycNum, CycNum>> solve_cd(const Poly& p, const Poly& q, const Poly& r) {
    const int n = p.order();
    const int rows = std::max({p.degree(), q.degree(), r.degree()}) + 1;
    const CycNum zero = CycNum::zero(n);
    const auto at = [&zero](const Poly& f, int t) -> const CycNum& {
        return t <= f.degree() ? f.coeffs()[static_cast<size_t>(t)] : zero;
    };

    int pivot = -1;
    for (int t = 0; t < rows; ++t) {
        if (!at(q, t).is_zero()) {
            pivot = t;
            break;
        }
    }
    if (pivot < 0) return std::nullopt;  // q = 0 cannot happen for monic inputs

    const CycNum& qi = at(q, pivot);
    const CycNum& pi = at(p, pivot);
    const CycNum& ri = at(r, pivot);

    // Eliminate C: for every row t, (P_t*Q_i - P_i*Q_t) = D * (R_t*Q_i - R_i*Q_t).
    // Keep D = d_num / det and C = c_num / (Q_i * det) as exact quotients.
    CycNum det = zero, d_num = zero;
    bool have_d = false;
    for (int t = 0; t < rows && !have_d; ++t) {
        if (t == pivot) continue;
        CycNum coeff = at(r, t) * qi - ri * at(q, t);
        if (coeff.is_zero()) continue;
        d_num = at(p, t) * qi - pi * at(q, t);
        det = std::move(coeff);
        have_d = true;
    }
    if (!have_d || d_num.is_zero()) return std::nullopt;

    const CycNum c_num = pi * det - d_num * ri;
    if (c_num.is_zero()) return std::nullopt;

    // Row check, cleared of denominators: P_t*Q_i*det = c_num*Q_t + d_num*Q_i*R_t.
    // Checked from the top degree down; near-miss candidates tend to die in
    // the leading rows.
    const CycNum k1 = qi * det;
    const CycNum k2 = d_num * qi;
    for (int t = rows - 1; t >= 0; --t) {
        if (at(p, t) * k1 != c_num * at(q, t) + k2 * at(r, t)) return std::nullopt;
    }
    const CycNum det_inv = det.inverse();
    return std::make_pair(c_num * det_inv * qi.inverse(), d_num * det_inv);
}

namespace detail {

// All exponent vectors of length k with entries >= 1 and sum <= budget.
inline void for_each_composition(int k, int budget, std::vector<int>& scratch,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    if (k == 0) {
        fn(scratch);
        return;
    }
    int used = 0;
    for (int v : scratch) used += v;
    for (int e = 1; used + e + (k - 1) <= budget; ++e) {
        scratch.push_back(e);
        for_each_composition(k - 1, budget, scratch, fn);
        scratch.pop_back();
    }
}

inline long composition_count(int k, int budget) {
    if (k == 0) return 1;
    long total = 0;
    std::vector<int> scratch;
    for_each_composition(k, budget, scratch, [&](const std::vector<int>&) { ++total; });
    return total;
}

// One admissible exponent assignment for a fixed site subset.
struct PartOption {
    int poly = 0;    // index into SearchSpace::polys
    int degsum = 0;  // total degree of that product
};

// Precomputed monic products for every site subset and exponent vector with
// sum <= N, indexed by subset bitmask (bit 0 = origin, bit 1+r = root r).
struct SearchSpace {
    int order;
    std::vector<Site> sites;
    std::vector<Poly> polys;
    std::vector<std::map<Site, int>> specs;        // exponent map per poly index
    std::vector<std::vector<PartOption>> options;  // per subset mask

    explicit SearchSpace(int n) : order(n) {
        sites.push_back(Site::origin());
        for (int r = 0; r < n; ++r) sites.push_back(Site::root(r));
        const size_t nmasks = size_t(1) << sites.size();
        options.resize(nmasks);
        const int bound = degree_bound(n);
        for (size_t mask = 0; mask < nmasks; ++mask) {
            std::vector<Site> chosen;
            for (size_t s = 0; s < sites.size(); ++s)
                if (mask & (size_t(1) << s)) chosen.push_back(sites[s]);
            std::vector<int> scratch;
            for_each_composition(static_cast<int>(chosen.size()), bound, scratch,
                                 [&](const std::vector<int>& exps) {
                                     std::map<Site, int> spec;
                                     int sum = 0;
                                     for (size_t i = 0; i < chosen.size(); ++i) {
                                         spec[chosen[i]] = exps[i];
                                         sum += exps[i];
                                     }
                                     polys.push_back(from_factored(RootSpec{order, spec}));
                                     specs.push_back(std::move(spec));
                                     options[mask].push_back(
                                         PartOption{static_cast<int>(polys.size()) - 1, sum});
                                 });
        }
    }
};

// Visits every admissible triple (J, K, L) of disjoint site subsets whose J
// mask is j_begin, j_begin + j_step, ...; the stride spreads the heavy
// high-popcount masks evenly across workers.
template <typename Visit>
void scan_triples(const SearchSpace& space, size_t j_begin, size_t j_step, Visit&& visit) {
    const size_t nmasks = space.options.size();
    const size_t full = nmasks - 1;
    for (size_t mj = j_begin; mj < nmasks; mj += j_step) {
        const size_t rest1 = full & ~mj;
        // iterate mk over all submasks of rest1, including 0
        size_t mk = rest1;
        for (;;) {
            const size_t rest2 = rest1 & ~mk;
            size_t ml = rest2;
            for (;;) {
                const bool f_nonconst = (mj | ml) != 0;
                const bool g_nonconst = (mk | ml) != 0;
                if (f_nonconst && g_nonconst) {
                    for (const auto& oj : space.options[mj])
                        for (const auto& ok : space.options[mk])
                            for (const auto& ol : space.options[ml]) {
                                // The top coefficient row forces the maximal
                                // degree to appear at least twice (else C = 0,
                                // D = 0, or 1 = 0 at the leading row).
                                const int top = std::max({oj.degsum, ok.degsum, ol.degsum});
                                const int hits =
                                    (oj.degsum == top) + (ok.degsum == top) + (ol.degsum == top);
                                if (hits >= 2) visit(oj, ok, ol);
                            }
                }
                if (ml == 0) break;
                ml = (ml - 1) & rest2;
            }
            if (mk == 0) break;
            mk = (mk - 1) & rest1;
        }
    }
}

}  // namespace detail

// Visits every admissible (J, K, L) in partition-triple form: pairwise
// disjoint supports, positive exponents, per-part degree sums <= N, J u L and
// K u L nonempty.  Same generator as the enumeration scan; mainly for tests
// and inspection -- the enumeration itself works on the indexed form.
template <typename Visit>
void for_each_partition_triple(int n, Visit&& visit) {
    const detail::SearchSpace space(n);
    detail::scan_triples(space, 0, 1,
                         [&](const detail::PartOption& oj, const detail::PartOption& ok,
                             const detail::PartOption& ol) {
                             PartitionTriple triple;
                             triple.order = n;
                             triple.j = RootSpec{n, space.specs[static_cast<size_t>(oj.poly)]};
                             triple.k = RootSpec{n, space.specs[static_cast<size_t>(ok.poly)]};
                             triple.l = RootSpec{n, space.specs[static_cast<size_t>(ol.poly)]};
                             visit(triple);
                         });
}

// Number of candidate triples examined for order n (cost estimate for the CLI).
inline long long candidate_triple_count(int n) {
    const int bound = degree_bound(n);
    std::vector<long> per_size(static_cast<size_t>(n + 2));
    for (int k = 0; k <= n + 1; ++k) per_size[static_cast<size_t>(k)] = detail::composition_count(k, bound);
    const size_t nsites = static_cast<size_t>(n + 1);
    std::uint64_t total_masks = 1;
    for (size_t i = 0; i < nsites; ++i) total_masks *= 4;
    long long total = 0;
    for (std::uint64_t mask = 0; mask < total_masks; ++mask) {
        std::uint64_t m = mask;
        int cj = 0, ck = 0, cl = 0;
        for (size_t s = 0; s < nsites; ++s, m /= 4) {
            switch (m % 4) {
                case 1: ++cj; break;
                case 2: ++ck; break;
                case 3: ++cl; break;
                default: break;
            }
        }
        if ((cj == 0 && cl == 0) || (ck == 0 && cl == 0)) continue;
        total += static_cast<long long>(per_size[static_cast<size_t>(cj)]) * per_size[static_cast<size_t>(ck)] *
                 per_size[static_cast<size_t>(cl)];
    }
    return total;
}

// The complete set U_N, sorted by canonical key.  Workers split the J-mask
// range; the merge sorts and deduplicates, so the output is bit-identical for
// every job count.
inline std::vector<UnitalFn> enumerate_unital(int n, int jobs = 1) {
    if (n < 1) throw std::invalid_argument("enumerate_unital: order must be >= 1");
    const detail::SearchSpace space(n);

    auto run_strided = [&space, n](size_t begin, size_t step, std::vector<UnitalFn>& out) {
        detail::scan_triples(space, begin, step,
                             [&](const detail::PartOption& oj, const detail::PartOption& ok,
                                 const detail::PartOption& ol) {
                                 auto cd = solve_cd(space.polys[static_cast<size_t>(ol.poly)],
                                                    space.polys[static_cast<size_t>(ok.poly)],
                                                    space.polys[static_cast<size_t>(oj.poly)]);
                                 if (!cd) return;
                                 const auto& [c, d] = *cd;
                                 std::map<Site, int> fe = space.specs[static_cast<size_t>(oj.poly)];
                                 for (const auto& [s, e] : space.specs[static_cast<size_t>(ol.poly)])
                                     fe[s] = -e;
                                 out.emplace_back(n, d, std::move(fe));  // f = D*R/P
                                 std::map<Site, int> ge = space.specs[static_cast<size_t>(ok.poly)];
                                 for (const auto& [s, e] : space.specs[static_cast<size_t>(ol.poly)])
                                     ge[s] = -e;
                                 out.emplace_back(n, c, std::move(ge));  // g = 1 - f = C*Q/P
                             });
    };

    std::vector<UnitalFn> found;
    if (jobs <= 1) {
        run_strided(0, 1, found);
    } else {
        const size_t workers = static_cast<size_t>(jobs);
        std::vector<std::vector<UnitalFn>> buckets(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (size_t w = 0; w < workers; ++w)
            threads.emplace_back([&run_strided, &buckets, w, workers] { run_strided(w, workers, buckets[w]); });
        for (auto& t : threads) t.join();
        for (auto& b : buckets)
            for (auto& f : b) found.push_back(std::move(f));
    }

    std::vector<std::pair<std::string, size_t>> keyed;
    keyed.reserve(found.size());
    for (size_t i = 0; i < found.size(); ++i) keyed.emplace_back(found[i].canonical_key(), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<UnitalFn> out;
    out.reserve(keyed.size());
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
        out.push_back(found[keyed[i].second]);
    }
    return out;
}

}  // namespace unital
