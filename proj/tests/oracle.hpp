#pragma once

// Test-only oracles, independent of the library's search code paths.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "edfk/graph.hpp"
#include "edfk/minor.hpp"

namespace edfk::oracle {

// Decides minor containment by enumerating every assignment of host vertices
// to pattern vertices (or none) and checking the model conditions directly.
inline bool assignment_valid(const graph& pattern, const graph& host,
                             const std::vector<int>& assign, minor_flavor flavor) {
    int p = pattern.n();
    std::vector<std::vector<int>> branch(static_cast<size_t>(p));
    for (int h = 0; h < host.n(); ++h)
        if (assign[static_cast<size_t>(h)] > 0)
            branch[static_cast<size_t>(assign[static_cast<size_t>(h)] - 1)].push_back(h);
    for (int v = 0; v < p; ++v) {
        const auto& b = branch[static_cast<size_t>(v)];
        if (b.empty()) return false;
        // connectivity by union-find over host edges inside b
        std::vector<int> parent(b.size());
        for (size_t i = 0; i < b.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            return x;
        };
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                if (host.has_edge(b[i], b[j])) parent[static_cast<size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
        int root = find(0);
        for (size_t i = 1; i < b.size(); ++i)
            if (find(static_cast<int>(i)) != root) return false;
        if (flavor_uses_labels(flavor)) {
            for (const auto& atom : pattern.labels_of(v)) {
                uint32_t mask = host.atom_mask(atom);
                bool covered = false;
                for (int u : b)
                    if (mask && (host.lab[static_cast<size_t>(u)] & mask)) covered = true;
                if (!covered) return false;
            }
        }
        if (flavor_uses_boundary(flavor)) {
            std::set<int> idx;
            for (int u : b)
                if (host.bidx[static_cast<size_t>(u)] > 0) idx.insert(host.bidx[static_cast<size_t>(u)]);
            int d = pattern.bidx[static_cast<size_t>(v)];
            if (d > 0 && idx != std::set<int>{d}) return false;
            if (d == 0 && !idx.empty()) return false;
        }
    }
    for (auto [u, v] : pattern.edges) {
        bool realized = false;
        for (int a : branch[static_cast<size_t>(u)])
            for (int b2 : branch[static_cast<size_t>(v)])
                if (host.has_edge(a, b2)) realized = true;
        if (!realized) return false;
    }
    return true;
}

inline bool is_minor_by_enumeration(const graph& pattern, const graph& host, minor_flavor flavor) {
    int p = pattern.n(), n = host.n();
    if (p == 0) return true;
    if (p > n) return false;
    std::vector<int> assign(static_cast<size_t>(n), 0);  // 0 = unused, else pattern vertex + 1
    while (true) {
        if (assignment_valid(pattern, host, assign, flavor)) return true;
        int pos = 0;
        while (pos < n) {
            if (++assign[static_cast<size_t>(pos)] <= p) break;
            assign[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) return false;
    }
}

// Brute-force isomorphism over all vertex permutations (small graphs only).
inline bool isomorphic_by_permutation(const graph& g1, const graph& g2) {
    if (g1.n() != g2.n() || g1.m() != g2.m()) return false;
    int n = g1.n();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int w = perm[static_cast<size_t>(v)];
            if (g1.bidx[static_cast<size_t>(v)] != g2.bidx[static_cast<size_t>(w)]) ok = false;
            if (ok && g1.labels_of(v) != g2.labels_of(w)) ok = false;
        }
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g1.has_edge(u, v) != g2.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace edfk::oracle
