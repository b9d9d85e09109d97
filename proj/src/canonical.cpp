#include "edfk/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>

namespace edfk {

namespace {

// Stable colors from iterated refinement of (bidx, labels, degree).
std::vector<int> refine_colors(const graph& g) {
    int n = g.n();
    std::vector<int> rank(static_cast<size_t>(n), 0);
    {
        std::vector<std::tuple<int, uint32_t, size_t>> init(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            init[static_cast<size_t>(v)] = {g.bidx[static_cast<size_t>(v)], g.lab[static_cast<size_t>(v)],
                                            g.adj[static_cast<size_t>(v)].size()};
        auto sorted = init;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            rank[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), init[static_cast<size_t>(v)]) - sorted.begin());
    }
    int classes = 0;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> neigh;
            for (int u : g.adj[static_cast<size_t>(v)]) neigh.push_back(rank[static_cast<size_t>(u)]);
            std::sort(neigh.begin(), neigh.end());
            sig[static_cast<size_t>(v)] = {std::move(neigh), rank[static_cast<size_t>(v)]};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<size_t>(v)]) - sorted.begin());
        bool stable = static_cast<int>(sorted.size()) == classes;
        classes = static_cast<int>(sorted.size());
        rank = std::move(next);
        if (stable) break;
    }
    return rank;
}

using column_t = std::vector<uint32_t>;

struct search_state {
    const graph* g;
    std::vector<int> color;
    std::vector<column_t> best;
    std::vector<int> best_order;
    bool have_best = false;
    long nodes = 0, budget = 4'000'000;

    column_t column(int v, const std::vector<int>& placed) const {
        column_t col;
        col.push_back(static_cast<uint32_t>(color[static_cast<size_t>(v)]));
        col.push_back(static_cast<uint32_t>(g->bidx[static_cast<size_t>(v)]));
        col.push_back(g->lab[static_cast<size_t>(v)]);
        size_t words = placed.size() / 32 + 1;
        size_t base = col.size();
        col.resize(base + words, 0);
        for (size_t i = 0; i < placed.size(); ++i)
            if (g->has_edge(v, placed[i])) col[base + i / 32] |= (1u << (i % 32));
        return col;
    }

    // already_smaller: the current column stream is lexicographically below
    // the best one on some earlier position.
    void rec(std::vector<int>& placed, std::vector<column_t>& cols, std::vector<char>& used,
             bool already_smaller) {
        if (++nodes > budget) throw resource_limit_error("canonical_key search budget exceeded");
        int n = g->n();
        int pos = static_cast<int>(placed.size());
        if (pos == n) {
            if (!have_best || cols < best) {
                best = cols;
                best_order = placed;
                have_best = true;
            }
            return;
        }
        column_t min_col;
        std::vector<int> cand;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            auto col = column(v, placed);
            if (cand.empty() || col < min_col) {
                min_col = std::move(col);
                cand = {v};
            } else if (col == min_col) {
                cand.push_back(v);
            }
        }
        bool smaller = already_smaller;
        if (have_best && !smaller) {
            if (min_col > best[static_cast<size_t>(pos)]) return;  // this branch cannot win
            if (min_col < best[static_cast<size_t>(pos)]) smaller = true;
        }
        // tied candidates that are twins lead to identical completions
        std::vector<int> expand;
        for (int v : cand) {
            bool twin = false;
            for (int u : expand) {
                bool same = true;
                for (int w = 0; w < n && same; ++w) {
                    if (w == u || w == v) continue;
                    if (g->has_edge(v, w) != g->has_edge(u, w)) same = false;
                }
                if (same) {
                    twin = true;
                    break;
                }
            }
            if (!twin) expand.push_back(v);
        }
        for (int v : expand) {
            used[static_cast<size_t>(v)] = 1;
            placed.push_back(v);
            cols.push_back(min_col);
            rec(placed, cols, used, smaller);
            cols.pop_back();
            placed.pop_back();
            used[static_cast<size_t>(v)] = 0;
        }
    }
};

std::pair<std::string, std::vector<int>> canonicalize(const graph& g, int max_vertices) {
    if (g.n() > max_vertices)
        throw resource_limit_error("canonical_key: graph has " + std::to_string(g.n()) +
                                   " vertices, ceiling is " + std::to_string(max_vertices));
    search_state st;
    st.g = &g;
    st.color = refine_colors(g);

    std::vector<int> placed;
    std::vector<column_t> cols;
    std::vector<char> used(static_cast<size_t>(g.n()), 0);
    if (g.n() > 0) st.rec(placed, cols, used, false);

    uint32_t used_atoms = 0;
    for (uint32_t m : g.lab) used_atoms |= m;
    std::vector<std::string> present;
    for (size_t i = 0; i < g.atoms.size(); ++i)
        if (used_atoms & (1u << i)) present.push_back(g.atoms[i]);
    auto remap = [&](uint32_t m) {
        uint32_t out = 0;
        for (size_t i = 0; i < present.size(); ++i)
            if (m & g.atom_mask(present[i])) out |= (1u << i);
        return out;
    };

    std::string key = "n" + std::to_string(g.n()) + ";";
    for (const auto& a : present) key += a + ",";
    key += ";";
    for (const auto& col : st.best) {
        key += std::to_string(col[1]) + ":" + std::to_string(remap(col[2])) + ":";
        for (size_t i = 3; i < col.size(); ++i) key += std::to_string(col[i]) + ".";
        key += "|";
    }
    return {key, st.best_order};
}

}  // namespace

std::string canonical_key(const graph& g, int max_vertices) {
    return canonicalize(g, max_vertices).first;
}

std::vector<int> canonical_order(const graph& g, int max_vertices) {
    return canonicalize(g, max_vertices).second;
}

bool are_isomorphic(const graph& g1, const graph& g2) {
    if (g1.n() != g2.n() || g1.m() != g2.m()) return false;
    return canonical_key(g1) == canonical_key(g2);
}

}  // namespace edfk
