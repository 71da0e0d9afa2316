#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>

#include "unital/enumerate.hpp"
#include "unital/orbits.hpp"

using namespace unital;

namespace {

// Independent closure oracle: union-find over the same generator images.
std::vector<size_t> union_find_sizes(const std::vector<UnitalFn>& fns) {
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < fns.size(); ++i) index.emplace(fns[i].canonical_key(), i);
    std::vector<size_t> parent(fns.size());
    std::iota(parent.begin(), parent.end(), size_t{0});
    std::function<size_t(size_t)> find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };
    for (size_t i = 0; i < fns.size(); ++i) {
        const UnitalFn& f = fns[i];
        const int n = f.order();
        auto six = f.sextet();
        REQUIRE(six.has_value());
        for (const auto& g : *six) unite(i, index.at(g.canonical_key()));
        for (int r = 1; r < n; ++r) unite(i, index.at(f.scaled(r).canonical_key()));
        for (int k = 2; k < n; ++k)
            if (std::gcd(k, n) == 1) unite(i, index.at(f.galois_image(k).canonical_key()));
    }
    std::map<size_t, size_t> counts;
    for (size_t i = 0; i < fns.size(); ++i) ++counts[find(i)];
    std::vector<size_t> sizes;
    for (const auto& [root, c] : counts) sizes.push_back(c);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<size_t> sorted_sizes(const std::vector<OrbitReport>& orbits) {
    auto sizes = orbit_sizes(orbits);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("U_1 is a single orbit of six") {
    const auto orbits = orbit_decompose(enumerate_unital(1));
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].size == 6);
    CHECK(orbits[0].members.size() == 6);
    CHECK(orbits[0].generator.canonical_key() == orbits[0].members.front());
}

TEST_CASE("U_2 orbit structure under sextet, scaling and Galois") {
    // <x> u <-x> fuse through x -> -x; the sextets of (1+x)/2, 2x/(1+x) and
    // (1+x)^2/4x are each already closed under the substitution, so they stay
    // separate 6-orbits.  (Fusing the first two would need x -> 1/x, which is
    // not one of the group's generators.)
    const auto u2 = enumerate_unital(2);
    const auto orbits = orbit_decompose(u2);
    CHECK(sorted_sizes(orbits) == std::vector<size_t>{6, 6, 6, 6, 12});
    CHECK(union_find_sizes(u2) == std::vector<size_t>{6, 6, 6, 6, 12});
}

TEST_CASE("U_3 orbit structure") {
    const auto u3 = enumerate_unital(3);
    const auto orbits = orbit_decompose(u3);
    CHECK(sorted_sizes(orbits) == std::vector<size_t>{6, 6, 18, 18, 18, 18});
    CHECK(union_find_sizes(u3) == sorted_sizes(orbits));
    // sizes divide the generated group order 6 * N * phi(N) = 36
    for (const auto& o : orbits) CHECK(36 % o.size == 0);
}

TEST_CASE("U_4 orbit structure") {
    // 17 orbits.  The classical eight-family split of U_4 groups several of
    // these together, but the families are not orbits of this group: each
    // generator fixes 0 and infinity, so how many of them appear among the
    // zeros and poles of {f, 1-f} is an orbit invariant, and it already
    // separates e.g. x, i(x+1)/(x-1) and (x+1)/(x+i) inside the first family.
    const auto u4 = enumerate_unital(4);
    const auto orbits = orbit_decompose(u4);
    const std::vector<size_t> expect{6, 6, 6, 6, 12, 12, 12, 12, 12, 12, 12, 24, 24, 24, 24, 24, 24};
    CHECK(sorted_sizes(orbits) == expect);
    CHECK(union_find_sizes(u4) == expect);
    size_t total = 0;
    for (const auto& o : orbits) total += o.size;
    CHECK(total == 252);
    // sizes divide the generated group order 6 * N * phi(N) = 48
    for (const auto& o : orbits) CHECK(48 % o.size == 0);
}

TEST_CASE("orbit reports are deterministic") {
    const auto a = orbit_decompose(enumerate_unital(2));
    const auto b = orbit_decompose(enumerate_unital(2, 3));
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].generator.canonical_key() == b[i].generator.canonical_key());
        CHECK(a[i].members == b[i].members);
    }
    // generators are key-minimal and orbits sorted by generator key
    for (size_t i = 1; i < a.size(); ++i)
        CHECK(a[i - 1].generator.canonical_key() < a[i].generator.canonical_key());
}

TEST_CASE("orbit_decompose rejects non-closed input") {
    auto u2 = enumerate_unital(2);
    u2.pop_back();
    CHECK_THROWS_AS(orbit_decompose(u2), NotClosed);
}
