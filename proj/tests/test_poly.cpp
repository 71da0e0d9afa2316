#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "unital/poly.hpp"

using namespace unital;

namespace {

Poly monomials(int n, std::vector<long> ints) {
    std::vector<CycNum> coeffs;
    coeffs.reserve(ints.size());
    for (long v : ints) coeffs.push_back(CycNum::from_rat(n, Rat(v)));
    return Poly::from_coeffs(n, std::move(coeffs));
}

RootSpec random_spec(int n, int max_total, std::mt19937_64& rng) {
    RootSpec spec{n, {}};
    std::vector<Site> sites{Site::origin()};
    for (int r = 0; r < n; ++r) sites.push_back(Site::root(r));
    std::shuffle(sites.begin(), sites.end(), rng);
    int budget = max_total;
    std::uniform_int_distribution<int> coin(0, 1);
    for (const auto& s : sites) {
        if (budget <= 0 || coin(rng) == 0) continue;
        std::uniform_int_distribution<int> exp(1, std::min(budget, 3));
        const int e = exp(rng);
        spec.exps[s] = e;
        budget -= e;
    }
    return spec;
}

}  // namespace

TEST_CASE("polynomial ring operations") {
    const int n = 2;
    const Poly xm1 = monomials(n, {-1, 1});
    const Poly xp1 = monomials(n, {1, 1});
    CHECK(xm1 * xp1 == monomials(n, {-1, 0, 1}));
    CHECK(xm1 + xp1 == monomials(n, {0, 2}));
    CHECK((xm1 - xm1).is_zero());
    CHECK((xm1 - xm1).degree() == -1);

    const Poly phi3 = monomials(3, {1, 1, 1});
    CHECK(phi3.evaluate(CycNum::root_of_unity(3, 1)).is_zero());

    const CycNum i = CycNum::root_of_unity(4, 1);
    const Poly xmi = Poly::linear_root(4, i);
    const Poly xpi = Poly::linear_root(4, -i);
    CHECK(xmi * xpi == Poly::from_coeffs(4, {CycNum::one(4), CycNum::zero(4), CycNum::one(4)}));

    CHECK_THROWS_AS(monomials(2, {1}) + monomials(3, {1}), OrderMismatch);
}

TEST_CASE("from_factored builds monic products") {
    RootSpec uu{3, {{Site::root(1), 1}, {Site::root(2), 1}}};
    CHECK(from_factored(uu) == monomials(3, {1, 1, 1}));  // (x-u)(x-ubar)

    RootSpec sq{1, {{Site::root(0), 2}}};
    CHECK(from_factored(sq) == monomials(1, {1, -2, 1}));

    RootSpec oi{4, {{Site::origin(), 1}, {Site::root(1), 1}}};  // x(x-i) = x^2 - i x
    CHECK(from_factored(oi) ==
          Poly::from_coeffs(4, {CycNum::zero(4), -CycNum::root_of_unity(4, 1), CycNum::one(4)}));

    CHECK(from_factored(RootSpec{5, {}}) == Poly::one(5));
}

TEST_CASE("peel_roots inverts from_factored") {
    auto peeled = peel_roots(monomials(3, {1, 1, 1}));
    REQUIRE(peeled.has_value());
    CHECK(peeled->constant == CycNum::one(3));
    CHECK(peeled->spec == RootSpec{3, {{Site::root(1), 1}, {Site::root(2), 1}}});

    auto sq = peel_roots(monomials(1, {1, -2, 1}));
    REQUIRE(sq.has_value());
    CHECK(sq->spec == RootSpec{1, {{Site::root(0), 2}}});

    // x^2 + x - 1 has golden-ratio roots, never in Gamma_N^0.
    for (int n = 1; n <= 6; ++n) CHECK_FALSE(peel_roots(monomials(n, {-1, 1, 1})).has_value());

    CHECK_THROWS_AS(peel_roots(Poly::zero(3)), ZeroPolynomial);
}

TEST_CASE("peel_roots round-trip on random factored polynomials") {
    std::mt19937_64 rng(5150);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            const RootSpec spec = random_spec(n, 3 * n, rng);
            const Poly p = from_factored(spec);
            CHECK(p.degree() == spec.total_degree());
            const auto peeled = peel_roots(p);
            REQUIRE(peeled.has_value());
            CHECK(peeled->spec == spec);
            CHECK(peeled->constant == CycNum::one(n));
            // evaluation vanishes exactly at the chosen sites
            for (int r = 0; r < n; ++r) {
                const bool is_root = spec.exps.count(Site::root(r)) > 0;
                CHECK(p.evaluate(CycNum::root_of_unity(n, r)).is_zero() == is_root);
            }
            CHECK(p.evaluate(CycNum::zero(n)).is_zero() == (spec.exps.count(Site::origin()) > 0));
        }
    }
}

TEST_CASE("from_factored over disjoint specs multiplies") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4;
        RootSpec a = random_spec(n, 4, rng);
        RootSpec b = random_spec(n, 4, rng);
        for (const auto& [site, e] : a.exps) b.exps.erase(site);
        RootSpec merged{n, a.exps};
        for (const auto& [site, e] : b.exps) merged.exps[site] = e;
        CHECK(from_factored(merged) == from_factored(a) * from_factored(b));
    }
}
