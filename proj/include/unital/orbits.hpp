#pragma once

// Orbit decomposition of a symmetry-closed set of N-unital functions under the
// group generated by the sextet maps, the substitutions x -> zeta^r x, and the
// Galois twists zeta -> zeta^k.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "unital/errors.hpp"
#include "unital/unital_fn.hpp"

namespace unital {

struct OrbitReport {
    UnitalFn generator;               // key-minimal member
    size_t size = 0;
    std::vector<std::string> members;  // sorted canonical keys
};

// Breadth-first closure from each unvisited key, in ascending key order, so
// the result is deterministic.  Throws NotClosed if a symmetry image of a
// member falls outside the input set (a broken enumeration).
inline std::vector<OrbitReport> orbit_decompose(const std::vector<UnitalFn>& fns) {
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < fns.size(); ++i) index.emplace(fns[i].canonical_key(), i);

    const auto find_or_throw = [&](const UnitalFn& g) {
        auto it = index.find(g.canonical_key());
        if (it == index.end())
            throw NotClosed("orbit_decompose: symmetry image outside the input set: " + g.to_text());
        return it->second;
    };

    std::vector<bool> visited(fns.size(), false);
    std::vector<OrbitReport> orbits;
    for (const auto& [key, start] : index) {  // ascending key order
        if (visited[start]) continue;
        std::vector<std::string> members;
        std::deque<size_t> queue{start};
        visited[start] = true;
        while (!queue.empty()) {
            const size_t cur = queue.front();
            queue.pop_front();
            members.push_back(fns[cur].canonical_key());
            const UnitalFn& f = fns[cur];
            std::vector<UnitalFn> images;
            auto six = f.sextet();
            if (!six) throw NotClosed("orbit_decompose: member is not N-unital: " + f.to_text());
            for (auto& g : *six) images.push_back(std::move(g));
            const int n = f.order();
            for (int r = 1; r < n; ++r) images.push_back(f.scaled(r));
            for (int k = 2; k < n; ++k)
                if (std::gcd(k, n) == 1) images.push_back(f.galois_image(k));
            for (const auto& g : images) {
                const size_t gi = find_or_throw(g);
                if (!visited[gi]) {
                    visited[gi] = true;
                    queue.push_back(gi);
                }
            }
        }
        std::sort(members.begin(), members.end());
        orbits.push_back(OrbitReport{fns[index.at(members.front())], members.size(), std::move(members)});
    }
    return orbits;
}

inline std::vector<size_t> orbit_sizes(const std::vector<OrbitReport>& orbits) {
    std::vector<size_t> sizes;
    sizes.reserve(orbits.size());
    for (const auto& o : orbits) sizes.push_back(o.size);
    return sizes;
}

}  // namespace unital
