#include "edfk/graph.hpp"

#include <algorithm>

namespace edfk {

int graph::index_of(const std::string& id) const {
    for (int i = 0; i < n(); ++i)
        if (ids[static_cast<size_t>(i)] == id) return i;
    return -1;
}

int graph::vertex_with_bidx(int index) const {
    for (int i = 0; i < n(); ++i)
        if (bidx[static_cast<size_t>(i)] == index) return i;
    return -1;
}

bool graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> graph::boundary_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (bidx[static_cast<size_t>(i)] > 0) out.push_back(i);
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return bidx[static_cast<size_t>(a)] < bidx[static_cast<size_t>(b)]; });
    return out;
}

std::set<std::string> graph::labels_of(int v) const {
    std::set<std::string> out;
    uint32_t m = lab[static_cast<size_t>(v)];
    for (size_t i = 0; i < atoms.size(); ++i)
        if (m & (1u << i)) out.insert(atoms[i]);
    return out;
}

uint32_t graph::atom_mask(const std::string& atom) const {
    for (size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == atom) return 1u << i;
    return 0;
}

std::vector<int> graph::vertices_by_id() const {
    std::vector<int> order(static_cast<size_t>(n()));
    for (int i = 0; i < n(); ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ids[static_cast<size_t>(a)] < ids[static_cast<size_t>(b)]; });
    return order;
}

void graph::check_invariants() const {
    if (t < 0) throw argument_error("boundary capacity must be nonnegative");
    for (size_t i = 1; i < atoms.size(); ++i)
        if (atoms[i - 1] >= atoms[i]) throw argument_error("label universe not sorted/unique");
    std::set<std::string> seen_ids;
    for (const auto& id : ids)
        if (!seen_ids.insert(id).second) throw argument_error("duplicate vertex id: " + id);
    if (atoms.size() > 31) throw resource_limit_error("label universe too large");
    uint32_t universe = atoms.empty() ? 0 : ((1u << atoms.size()) - 1);
    for (uint32_t m : lab)
        if (m & ~universe) throw argument_error("labelset outside universe");
    std::set<int> seen_idx;
    for (int b : bidx) {
        if (b == 0) continue;
        if (b < 1 || b > t) throw argument_error("boundary index out of range");
        if (!seen_idx.insert(b).second) throw argument_error("boundary index not injective");
    }
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v >= n() || u >= v) throw argument_error("bad edge");
        if (i > 0 && edges[i - 1] == edges[i]) throw argument_error("parallel edge");
    }
}

static void finalize(graph& g) {
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.adj.assign(static_cast<size_t>(g.n()), {});
    for (auto [u, v] : g.edges) {
        g.adj[static_cast<size_t>(u)].push_back(v);
        g.adj[static_cast<size_t>(v)].push_back(u);
    }
    g.check_invariants();
}

graph_builder::graph_builder(int t, std::vector<std::string> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    g.t = t;
    g.atoms = std::move(atoms);
}

int graph_builder::add_vertex(const std::string& id, const std::set<std::string>& labels,
                              int boundary_index) {
    uint32_t mask = 0;
    for (const auto& l : labels) {
        uint32_t m = g.atom_mask(l);
        if (!m) throw argument_error("label not in universe: " + l);
        mask |= m;
    }
    g.ids.push_back(id);
    g.lab.push_back(mask);
    g.bidx.push_back(boundary_index);
    return g.n() - 1;
}

void graph_builder::add_edge(const std::string& a, const std::string& b) {
    int u = g.index_of(a), v = g.index_of(b);
    if (u < 0 || v < 0) throw argument_error("edge references unknown vertex");
    add_edge(u, v);
}

void graph_builder::add_edge(int u, int v) {
    if (u == v) throw argument_error("loop edge");
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
}

graph graph_builder::build() {
    finalize(g);
    return g;
}

graph make_plain(int n, const std::vector<std::pair<int, int>>& edges) {
    graph_builder b(0, {});
    for (int i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

graph induced(const graph& g, const std::vector<int>& keep) {
    std::vector<int> remap(static_cast<size_t>(g.n()), -1);
    graph out;
    out.t = g.t;
    out.atoms = g.atoms;
    std::vector<int> sorted_keep = keep;
    std::sort(sorted_keep.begin(), sorted_keep.end());
    sorted_keep.erase(std::unique(sorted_keep.begin(), sorted_keep.end()), sorted_keep.end());
    for (int v : sorted_keep) {
        if (v < 0 || v >= g.n()) throw argument_error("induced: vertex out of range");
        remap[static_cast<size_t>(v)] = out.n();
        out.ids.push_back(g.ids[static_cast<size_t>(v)]);
        out.lab.push_back(g.lab[static_cast<size_t>(v)]);
        out.bidx.push_back(g.bidx[static_cast<size_t>(v)]);
    }
    for (auto [u, v] : g.edges) {
        int a = remap[static_cast<size_t>(u)], b = remap[static_cast<size_t>(v)];
        if (a >= 0 && b >= 0) out.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    finalize(out);
    return out;
}

graph remove_vertices(const graph& g, const std::vector<int>& drop) {
    std::vector<char> gone(static_cast<size_t>(g.n()), 0);
    for (int v : drop) {
        if (v < 0 || v >= g.n()) throw argument_error("remove: vertex out of range");
        gone[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!gone[static_cast<size_t>(v)]) keep.push_back(v);
    return induced(g, keep);
}

graph remove_vertices_by_id(const graph& g, const std::set<std::string>& drop) {
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!drop.count(g.ids[static_cast<size_t>(v)])) keep.push_back(v);
    return induced(g, keep);
}

graph strip_decorations(const graph& g) {
    graph out = g;
    out.t = 0;
    out.atoms.clear();
    out.lab.assign(static_cast<size_t>(g.n()), 0);
    out.bidx.assign(static_cast<size_t>(g.n()), 0);
    finalize(out);
    return out;
}

graph forget(const graph& g, int k) {
    if (k < 0) throw argument_error("forget: negative boundary capacity");
    graph out = g;
    out.t = k;
    for (auto& b : out.bidx)
        if (b > k) b = 0;
    finalize(out);
    return out;
}

glue_result glue(const graph& g1, const graph& g2) {
    if (g1.t != g2.t) throw structural_mismatch("glue: different boundary capacity");
    if (g1.atoms != g2.atoms) throw structural_mismatch("glue: different label universe");
    glue_result res;
    graph& out = res.g;
    out.t = g1.t;
    out.atoms = g1.atoms;

    std::vector<int> map1(static_cast<size_t>(g1.n()), -1), map2(static_cast<size_t>(g2.n()), -1);
    // joined boundary vertices first, in index order
    for (int idx = 1; idx <= g1.t; ++idx) {
        int u = g1.vertex_with_bidx(idx), v = g2.vertex_with_bidx(idx);
        if (u < 0 && v < 0) continue;
        int w = out.n();
        out.ids.push_back("j" + std::to_string(idx));
        uint32_t mask = 0;
        if (u >= 0) { mask |= g1.lab[static_cast<size_t>(u)]; map1[static_cast<size_t>(u)] = w; }
        if (v >= 0) { mask |= g2.lab[static_cast<size_t>(v)]; map2[static_cast<size_t>(v)] = w; }
        out.lab.push_back(mask);
        out.bidx.push_back(idx);
    }
    for (int u = 0; u < g1.n(); ++u) {
        if (map1[static_cast<size_t>(u)] >= 0) continue;
        map1[static_cast<size_t>(u)] = out.n();
        out.ids.push_back("l." + g1.ids[static_cast<size_t>(u)]);
        out.lab.push_back(g1.lab[static_cast<size_t>(u)]);
        out.bidx.push_back(0);
    }
    for (int v = 0; v < g2.n(); ++v) {
        if (map2[static_cast<size_t>(v)] >= 0) continue;
        map2[static_cast<size_t>(v)] = out.n();
        out.ids.push_back("r." + g2.ids[static_cast<size_t>(v)]);
        out.lab.push_back(g2.lab[static_cast<size_t>(v)]);
        out.bidx.push_back(0);
    }
    for (auto [u, v] : g1.edges) {
        int a = map1[static_cast<size_t>(u)], b = map1[static_cast<size_t>(v)];
        out.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (auto [u, v] : g2.edges) {
        int a = map2[static_cast<size_t>(u)], b = map2[static_cast<size_t>(v)];
        out.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    finalize(out);
    for (int u = 0; u < g1.n(); ++u)
        res.from_left[g1.ids[static_cast<size_t>(u)]] = out.ids[static_cast<size_t>(map1[static_cast<size_t>(u)])];
    for (int v = 0; v < g2.n(); ++v)
        res.from_right[g2.ids[static_cast<size_t>(v)]] = out.ids[static_cast<size_t>(map2[static_cast<size_t>(v)])];
    return res;
}

graph glue_graph(const graph& g1, const graph& g2) { return glue(g1, g2).g; }

graph restrict_labels(const graph& g, const std::set<std::string>& keep_atoms) {
    graph out;
    out.t = g.t;
    for (const auto& a : g.atoms)
        if (keep_atoms.count(a)) out.atoms.push_back(a);
    out.ids = g.ids;
    out.bidx = g.bidx;
    out.edges = g.edges;
    out.lab.reserve(g.lab.size());
    for (int v = 0; v < g.n(); ++v) {
        uint32_t mask = 0;
        for (size_t i = 0; i < out.atoms.size(); ++i)
            if (g.lab[static_cast<size_t>(v)] & g.atom_mask(out.atoms[i])) mask |= (1u << i);
        out.lab.push_back(mask);
    }
    finalize(out);
    return out;
}

graph with_boundary(const graph& g, int t, const std::map<std::string, int>& assignment) {
    graph out = g;
    out.t = t;
    out.bidx.assign(static_cast<size_t>(g.n()), 0);
    for (const auto& [id, idx] : assignment) {
        int v = g.index_of(id);
        if (v < 0) throw argument_error("with_boundary: unknown vertex " + id);
        out.bidx[static_cast<size_t>(v)] = idx;
    }
    finalize(out);
    return out;
}

}  // namespace edfk
