#include "edfk/folio.hpp"

#include <algorithm>
#include <functional>

#include "edfk/canonical.hpp"
#include "edfk/graph_algo.hpp"

namespace edfk {

bool graph_set::insert(const graph& g) {
    std::string key = canonical_key(g);
    if (members.count(key)) return false;
    members.emplace(std::move(key), g);
    return true;
}

std::vector<graph> graph_set::list() const {
    std::vector<graph> out;
    out.reserve(members.size());
    for (const auto& [k, g] : members) out.push_back(g);
    return out;
}

std::set<std::string> graph_set::keys() const {
    std::set<std::string> out;
    for (const auto& [k, g] : members) out.insert(k);
    return out;
}

std::vector<graph> pcs(const graph& g) {
    std::vector<graph> pieces;
    auto bverts = g.boundary_vertices();
    std::set<int> bset(bverts.begin(), bverts.end());

    for (int v : bverts) {
        graph_builder b(g.t, g.atoms);
        b.add_vertex("p", {}, g.bidx[static_cast<size_t>(v)]);
        pieces.push_back(b.build());
    }
    for (int v : bverts) {
        for (const auto& atom : g.labels_of(v)) {
            graph_builder b(g.t, g.atoms);
            b.add_vertex("p", {atom}, g.bidx[static_cast<size_t>(v)]);
            pieces.push_back(b.build());
        }
    }
    for (auto [u, v] : g.edges) {
        if (bset.count(u) && bset.count(v)) {
            graph_builder b(g.t, g.atoms);
            b.add_vertex("x", {}, g.bidx[static_cast<size_t>(u)]);
            b.add_vertex("y", {}, g.bidx[static_cast<size_t>(v)]);
            b.add_edge(0, 1);
            pieces.push_back(b.build());
        }
    }
    std::vector<int> interior;
    for (int v = 0; v < g.n(); ++v)
        if (!bset.count(v)) interior.push_back(v);
    graph gi = induced(g, interior);
    std::vector<int> back(interior.begin(), interior.end());  // gi index -> g index
    for (const auto& comp : connected_components(gi)) {
        std::set<int> cverts;
        for (int lv : comp) cverts.insert(back[static_cast<size_t>(lv)]);
        std::set<int> attached;
        for (int v : cverts)
            for (int u : g.adj[static_cast<size_t>(v)])
                if (bset.count(u)) attached.insert(u);
        graph_builder b(g.t, g.atoms);
        std::map<int, int> local;
        for (int v : cverts)
            local[v] = b.add_vertex(g.ids[static_cast<size_t>(v)], g.labels_of(v), 0);
        for (int u : attached)
            local[u] = b.add_vertex(g.ids[static_cast<size_t>(u)], {}, g.bidx[static_cast<size_t>(u)]);
        for (auto [u, v] : g.edges) {
            if (!local.count(u) || !local.count(v)) continue;
            if (attached.count(u) && attached.count(v)) continue;  // no boundary-boundary edges
            b.add_edge(local[u], local[v]);
        }
        pieces.push_back(b.build());
    }
    return pieces;
}

graph_set mpcs(const graph& g) {
    auto pieces = pcs(g);
    if (pieces.size() > 20)
        throw resource_limit_error("mpcs: " + std::to_string(pieces.size()) + " pieces");
    graph_set out;
    for (uint32_t mask = 1; mask < (1u << pieces.size()); ++mask) {
        graph acc;
        bool first = true;
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (!(mask & (1u << i))) continue;
            acc = first ? pieces[i] : glue_graph(acc, pieces[i]);
            first = false;
        }
        out.insert(acc);
    }
    return out;
}

graph_set mpcs(const std::vector<graph>& set_of_graphs) {
    graph_set out;
    for (const auto& g : set_of_graphs)
        for (const auto& m : mpcs(g).list()) out.insert(m);
    return out;
}

graph_set ext1(const graph& g) {
    graph_set out;
    int t1 = g.t + 1;

    {  // do nothing
        graph h = g;
        h.t = t1;
        out.insert(h);
    }
    for (int v = 0; v < g.n(); ++v) {  // promote a non-boundary vertex
        if (g.bidx[static_cast<size_t>(v)] > 0) continue;
        graph h = g;
        h.t = t1;
        h.bidx[static_cast<size_t>(v)] = t1;
        out.insert(h);
    }
    for (int u = 0; u < g.n(); ++u) {  // split a boundary vertex
        if (g.bidx[static_cast<size_t>(u)] == 0) continue;
        std::vector<int> inc;
        for (int w : g.adj[static_cast<size_t>(u)]) inc.push_back(w);
        auto labels = g.labels_of(u);
        std::vector<std::string> labv(labels.begin(), labels.end());
        if (inc.size() + labv.size() > 20)
            throw resource_limit_error("ext1: split fan-out too large");
        for (uint32_t em = 0; em < (1u << inc.size()); ++em) {
            for (uint32_t lm = 0; lm < (1u << labv.size()); ++lm) {
                graph_builder b(t1, g.atoms);
                std::set<std::string> keep_lab, move_lab;
                for (size_t i = 0; i < labv.size(); ++i)
                    ((lm >> i) & 1 ? move_lab : keep_lab).insert(labv[i]);
                for (int v = 0; v < g.n(); ++v)
                    b.add_vertex(g.ids[static_cast<size_t>(v)],
                                 v == u ? keep_lab : g.labels_of(v), g.bidx[static_cast<size_t>(v)]);
                int nv = b.add_vertex("split", move_lab, t1);
                for (auto [a, c] : g.edges) {
                    if (a != u && c != u) {
                        b.add_edge(a, c);
                        continue;
                    }
                    int other = (a == u) ? c : a;
                    size_t pos = static_cast<size_t>(std::find(inc.begin(), inc.end(), other) - inc.begin());
                    if ((em >> pos) & 1)
                        b.add_edge(other, nv);  // moved to the new vertex
                    else
                        b.add_edge(a, c);
                }
                b.add_edge(u, nv);
                out.insert(b.build());
            }
        }
    }
    return out;
}

graph_set ext(const graph& g, int steps) {
    if (steps < 0) throw argument_error("ext: negative step count");
    graph_set cur;
    cur.insert(g);
    for (int i = 0; i < steps; ++i) {
        graph_set next;
        for (const auto& h : cur.list())
            for (const auto& e : ext1(h).list()) next.insert(e);
        cur = std::move(next);
    }
    return cur;
}

graph_set ext(const std::vector<graph>& q, int steps) {
    graph_set out;
    for (const auto& g : q)
        for (const auto& e : ext(g, steps).list()) out.insert(e);
    return out;
}

graph_set mpcs_plus(const std::vector<graph>& q, int t) {
    return mpcs(ext(q, t).list());
}

namespace {

graph normalize_for_flavor(const graph& g, minor_flavor flavor) {
    graph h = g;
    if (!flavor_uses_boundary(flavor)) h = forget(h, 0);
    if (!flavor_uses_labels(flavor)) {
        for (auto& m : h.lab) m = 0;
    }
    return h;
}

graph contract_edge(const graph& g, int u, int v) {
    // v is merged into u
    graph_builder b(g.t, g.atoms);
    std::map<int, int> local;
    for (int w = 0; w < g.n(); ++w) {
        if (w == v) continue;
        auto labels = g.labels_of(w);
        int bx = g.bidx[static_cast<size_t>(w)];
        if (w == u) {
            for (const auto& a : g.labels_of(v)) labels.insert(a);
            if (bx == 0) bx = g.bidx[static_cast<size_t>(v)];
        }
        local[w] = b.add_vertex(g.ids[static_cast<size_t>(w)], labels, bx);
    }
    std::set<std::pair<int, int>> es;
    for (auto [a, c] : g.edges) {
        int x = (a == v) ? u : a, y = (c == v) ? u : c;
        if (x == y) continue;
        es.insert(std::minmax(x, y));
    }
    for (auto [x, y] : es) b.add_edge(local[x], local[y]);
    return b.build();
}

}  // namespace

graph_set folio(const graph& g, int detail, minor_flavor flavor, const search_limits& limits) {
    (void)limits;
    graph start = normalize_for_flavor(g, flavor);
    graph_set out;
    std::set<std::string> visited;
    std::vector<graph> queue{start};
    visited.insert(canonical_key(start));
    size_t guard = 500000;
    while (!queue.empty()) {
        graph h = std::move(queue.back());
        queue.pop_back();
        if (h.n() >= 1 && h.n() <= detail) out.insert(h);
        if (visited.size() > guard) throw resource_limit_error("folio: closure too large");

        auto push = [&](const graph& nx) {
            std::string key = canonical_key(nx);
            if (visited.insert(key).second) queue.push_back(nx);
        };
        for (int v = 0; v < h.n(); ++v) push(remove_vertices(h, {v}));
        for (size_t i = 0; i < h.edges.size(); ++i) {
            graph nx = h;
            nx.edges.erase(nx.edges.begin() + static_cast<long>(i));
            graph_builder b(nx.t, nx.atoms);
            for (int v = 0; v < nx.n(); ++v)
                b.add_vertex(nx.ids[static_cast<size_t>(v)], nx.labels_of(v), nx.bidx[static_cast<size_t>(v)]);
            for (auto [x, y] : nx.edges) b.add_edge(x, y);
            push(b.build());
        }
        if (flavor_uses_labels(flavor)) {
            for (int v = 0; v < h.n(); ++v) {
                for (const auto& atom : h.labels_of(v)) {
                    graph nx = h;
                    nx.lab[static_cast<size_t>(v)] &= ~h.atom_mask(atom);
                    push(nx);
                }
            }
        }
        for (auto [u, v] : h.edges) {
            if (flavor_uses_boundary(flavor) && h.bidx[static_cast<size_t>(u)] > 0 &&
                h.bidx[static_cast<size_t>(v)] > 0)
                continue;  // contracting two boundary vertices is not a minor step
            push(contract_edge(h, u, v));
            if (!flavor_uses_boundary(flavor)) continue;
            if (h.bidx[static_cast<size_t>(u)] == 0 && h.bidx[static_cast<size_t>(v)] == 0)
                continue;  // symmetric merge, one direction is enough
            push(contract_edge(h, v, u));
        }
    }
    return out;
}

namespace {
std::map<std::string, graph_set>& mpcs_plus_cache() {
    static std::map<std::string, graph_set> cache;
    return cache;
}
}  // namespace

graph_set folio_qt(const graph& g, const std::vector<graph>& q, int t, const search_limits& limits) {
    std::string cache_key = "t" + std::to_string(t) + "#";
    for (const auto& m : q) cache_key += canonical_key(m) + "#";
    auto it = mpcs_plus_cache().find(cache_key);
    if (it == mpcs_plus_cache().end())
        it = mpcs_plus_cache().emplace(cache_key, mpcs_plus(q, t)).first;

    graph_set out;
    for (const auto& [key, m] : it->second.members)
        if (is_minor_cached(m, g, minor_flavor::boundaried_labeled, limits)) out.insert(m);
    return out;
}

bool is_saturated(const fragment_set& q, int s, const std::vector<std::string>& universe) {
    if (s < 1) throw argument_error("is_saturated: s must be positive");
    // (b) any member placing >= s labels on a vertex must be a single vertex
    for (const auto& m : q.members) {
        for (int v = 0; v < m.n(); ++v)
            if (static_cast<int>(m.labels_of(v).size()) >= s && m.n() > 1) return false;
    }
    // (a) every s-subset is carried by some single-vertex member
    std::vector<int> idx(static_cast<size_t>(s), 0);
    int u = static_cast<int>(universe.size());
    if (u < s) return true;  // no s-subsets to cover
    std::function<bool(int, int, std::set<std::string>&)> rec = [&](int start, int left,
                                                                    std::set<std::string>& chosen) {
        if (left == 0) {
            for (const auto& m : q.members) {
                if (m.n() != 1) continue;
                auto labels = m.labels_of(0);
                bool covers = true;
                for (const auto& a : chosen)
                    if (!labels.count(a)) covers = false;
                if (covers) return true;
            }
            return false;
        }
        for (int i = start; i <= u - left; ++i) {
            chosen.insert(universe[static_cast<size_t>(i)]);
            bool ok = rec(i + 1, left - 1, chosen);
            chosen.erase(universe[static_cast<size_t>(i)]);
            if (!ok) return false;
        }
        return true;
    };
    std::set<std::string> chosen;
    return rec(0, s, chosen);
}

fragment_set saturate(const std::vector<std::string>& universe, int s) {
    if (s < 1) throw argument_error("saturate: s must be positive");
    fragment_set out;
    out.size_cap = 1;
    out.saturation = s;
    int u = static_cast<int>(universe.size());
    std::function<void(int, std::set<std::string>&)> rec = [&](int start, std::set<std::string>& chosen) {
        if (static_cast<int>(chosen.size()) == s) {
            graph_builder b(0, universe);
            b.add_vertex("q", chosen);
            out.members.push_back(b.build());
            return;
        }
        for (int i = start; i < u; ++i) {
            chosen.insert(universe[static_cast<size_t>(i)]);
            rec(i + 1, chosen);
            chosen.erase(universe[static_cast<size_t>(i)]);
        }
    };
    std::set<std::string> chosen;
    rec(0, chosen);
    return out;
}

}  // namespace edfk
