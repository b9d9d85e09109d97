#include "edfk/graph_algo.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace edfk {

std::vector<std::vector<int>> connected_components(const graph& g) {
    int n = g.n();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : g.adj[static_cast<size_t>(v)]) {
                if (comp[static_cast<size_t>(u)] < 0) {
                    comp[static_cast<size_t>(u)] = comp[static_cast<size_t>(s)];
                    stack.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> reachable_from(const graph& g, int v) {
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    std::vector<int> stack{v}, out;
    seen[static_cast<size_t>(v)] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (int u : g.adj[static_cast<size_t>(x)])
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                stack.push_back(u);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Hopcroft-Tarjan lowpoint block decomposition.
struct block_finder {
    const graph* g;
    std::vector<int> num, low;
    int counter = 0;
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<int>> blocks;
    std::vector<char> is_cut;

    explicit block_finder(const graph& gr)
        : g(&gr),
          num(static_cast<size_t>(gr.n()), -1),
          low(static_cast<size_t>(gr.n()), 0),
          is_cut(static_cast<size_t>(gr.n()), 0) {}

    // pop edges up to and including the tree edge (parent, child)
    void emit_block(int parent, int child) {
        std::set<int> verts;
        while (!estack.empty()) {
            auto [a, b] = estack.back();
            estack.pop_back();
            verts.insert(a);
            verts.insert(b);
            if (a == parent && b == child) break;
        }
        blocks.emplace_back(verts.begin(), verts.end());
    }

    void dfs(int v, int parent) {
        num[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
        int children = 0;
        for (int u : g->adj[static_cast<size_t>(v)]) {
            if (num[static_cast<size_t>(u)] < 0) {
                ++children;
                estack.emplace_back(v, u);
                dfs(u, v);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(u)]);
                if (low[static_cast<size_t>(u)] >= num[static_cast<size_t>(v)]) {
                    if (parent >= 0 || children > 1) is_cut[static_cast<size_t>(v)] = 1;
                    emit_block(v, u);
                }
            } else if (u != parent && num[static_cast<size_t>(u)] < num[static_cast<size_t>(v)]) {
                estack.emplace_back(v, u);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], num[static_cast<size_t>(u)]);
            }
        }
    }

    void run() {
        for (int v = 0; v < g->n(); ++v) {
            if (num[static_cast<size_t>(v)] >= 0) continue;
            dfs(v, -1);
            if (g->adj[static_cast<size_t>(v)].empty()) blocks.push_back({v});
        }
    }
};

}  // namespace

std::vector<std::vector<int>> biconnected_components(const graph& g) {
    block_finder bf(g);
    bf.run();
    std::sort(bf.blocks.begin(), bf.blocks.end());
    return bf.blocks;
}

std::vector<int> cut_vertices(const graph& g) {
    block_finder bf(g);
    bf.run();
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (bf.is_cut[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

bool is_biconnected(const graph& g) {
    if (g.n() < 3) return false;
    if (!is_connected(g)) return false;
    return cut_vertices(g).empty();
}

}  // namespace edfk
