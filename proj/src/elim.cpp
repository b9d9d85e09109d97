#include "edfk/elim.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "edfk/canonical.hpp"
#include "edfk/graph_algo.hpp"
#include "edfk/structured_minor.hpp"

namespace edfk {

std::vector<int> elimination_forest::children_of(int i) const {
    std::vector<int> out;
    for (size_t j = 0; j < nodes.size(); ++j)
        if (nodes[j].parent == i) out.push_back(static_cast<int>(j));
    return out;
}

int elimination_forest::node_depth(int i) const {
    int d = 0;
    while (nodes[static_cast<size_t>(i)].parent >= 0) {
        i = nodes[static_cast<size_t>(i)].parent;
        ++d;
    }
    return d;
}

std::vector<int> tree_h_decomposition::children_of(int i) const {
    std::vector<int> out;
    for (size_t j = 0; j < nodes.size(); ++j)
        if (nodes[j].parent == i) out.push_back(static_cast<int>(j));
    return out;
}

namespace {

bool f_minor_free(const graph& g, const std::vector<graph>& family, const search_limits& limits) {
    for (const auto& f : family)
        if (is_minor_cached(strip_decorations(f), g, minor_flavor::plain, limits)) return false;
    return true;
}

// Reusable minor models for refutation loops on large graphs. A stored
// vertex set is the union of a valid model; it certifies an F-minor in any
// induced subgraph containing all of it.
struct model_pool {
    const graph* g;
    const std::vector<graph>* family;
    search_limits limits;
    std::vector<std::vector<int>> unions;  // sorted global vertex sets

    bool covered_by(const std::vector<int>& verts_sorted) const {
        for (const auto& u : unions)
            if (std::includes(verts_sorted.begin(), verts_sorted.end(), u.begin(), u.end()))
                return true;
        return false;
    }

    // true iff g[verts] has an F-minor; found models are pooled
    bool has_f_minor(const std::vector<int>& verts_sorted) {
        if (covered_by(verts_sorted)) return true;
        graph sub = induced(*g, verts_sorted);
        for (const auto& f : *family) {
            graph fp = strip_decorations(f);
            std::optional<minor_model> m;
            if (sub.n() <= limits.max_host_vertices && sub.n() <= 64)
                m = find_minor_model(fp, sub, minor_flavor::plain, limits);
            else
                m = structured_is_minor(fp, sub, limits);
            if (!m) continue;
            minor_model mm = minimize_model(*m, fp, sub, minor_flavor::plain);
            std::vector<int> u;
            for (int lv : mm.branch_union()) u.push_back(verts_sorted[static_cast<size_t>(lv)]);
            std::sort(u.begin(), u.end());
            unions.push_back(std::move(u));
            return true;
        }
        return false;
    }
};

struct ed_solver {
    const graph* g;  // decorations stripped
    std::vector<graph> family;
    elim_limits limits;
    std::map<std::string, int> memo;

    int ed_of(const std::vector<int>& verts) {
        graph sub = induced(*g, verts);
        int best = 0;
        for (const auto& comp : connected_components(sub)) {
            std::vector<int> global;
            for (int lv : comp) global.push_back(verts[static_cast<size_t>(lv)]);
            best = std::max(best, ed_component(global));
        }
        return best;
    }

    int ed_component(const std::vector<int>& verts) {
        graph sub = induced(*g, verts);
        std::string key = canonical_key(sub);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int res;
        if (f_minor_free(sub, family, limits.minor)) {
            res = 0;
        } else {
            res = limits.max_depth + 1;
            for (int v : sub.vertices_by_id()) {
                std::vector<int> rest;
                for (size_t i = 0; i < verts.size(); ++i)
                    if (static_cast<int>(i) != v) rest.push_back(verts[i]);
                res = std::min(res, 1 + ed_of(rest));
            }
        }
        memo[key] = res;
        return res;
    }

    // assemble a witness forest once depths are memoized
    void build(const std::vector<int>& verts, int parent, elimination_forest& out) {
        graph sub = induced(*g, verts);
        for (const auto& comp : connected_components(sub)) {
            std::vector<int> global;
            for (int lv : comp) global.push_back(verts[static_cast<size_t>(lv)]);
            build_component(global, parent, out);
        }
    }

    void build_component(const std::vector<int>& verts, int parent, elimination_forest& out) {
        graph sub = induced(*g, verts);
        if (f_minor_free(sub, family, limits.minor)) {
            elimination_forest::node leaf;
            leaf.parent = parent;
            for (int v : verts) leaf.bag.push_back(g->ids[static_cast<size_t>(v)]);
            std::sort(leaf.bag.begin(), leaf.bag.end());
            out.nodes.push_back(std::move(leaf));
            return;
        }
        int d = ed_component(verts);
        for (int lv : sub.vertices_by_id()) {
            int v = verts[static_cast<size_t>(lv)];
            std::vector<int> rest;
            for (int w : verts)
                if (w != v) rest.push_back(w);
            graph rsub = induced(*g, rest);
            int sub_d = 0;
            for (const auto& comp : connected_components(rsub)) {
                std::vector<int> global;
                for (int lc : comp) global.push_back(rest[static_cast<size_t>(lc)]);
                sub_d = std::max(sub_d, ed_component(global));
            }
            if (1 + sub_d == d) {
                elimination_forest::node root;
                root.parent = parent;
                root.bag = {g->ids[static_cast<size_t>(v)]};
                out.nodes.push_back(std::move(root));
                int self = static_cast<int>(out.nodes.size()) - 1;
                build(rest, self, out);
                return;
            }
        }
        throw contract_error("ed witness assembly failed");
    }
};

// iterative variant for graphs beyond the exact branching ceiling
struct ed_large {
    const graph* g;
    std::vector<graph> family;
    elim_limits limits;
    model_pool pool;

    bool at_most(const std::vector<int>& verts, int d, int parent, elimination_forest* out) {
        graph sub = induced(*g, verts);
        for (const auto& comp : connected_components(sub)) {
            std::vector<int> global;
            for (int lv : comp) global.push_back(verts[static_cast<size_t>(lv)]);
            if (!component_at_most(global, d, parent, out)) return false;
        }
        return true;
    }

    bool component_at_most(std::vector<int> verts, int d, int parent, elimination_forest* out) {
        std::sort(verts.begin(), verts.end());
        if (!pool.has_f_minor(verts)) {
            if (out) {
                elimination_forest::node leaf;
                leaf.parent = parent;
                for (int v : verts) leaf.bag.push_back(g->ids[static_cast<size_t>(v)]);
                std::sort(leaf.bag.begin(), leaf.bag.end());
                out->nodes.push_back(std::move(leaf));
            }
            return true;
        }
        if (d == 0) return false;
        // high-degree vertices first: in glued graphs these are the core
        std::vector<int> cand = verts;
        graph sub = induced(*g, verts);
        std::map<int, int> deg;
        for (size_t i = 0; i < verts.size(); ++i)
            deg[verts[i]] = static_cast<int>(sub.adj[i].size());
        std::sort(cand.begin(), cand.end(), [&](int a, int b) {
            if (deg[a] != deg[b]) return deg[a] > deg[b];
            return a < b;
        });
        for (int v : cand) {
            if (d == 1) {
                // every pooled model avoiding v dooms this choice
                bool doomed = false;
                for (const auto& u : pool.unions) {
                    if (!std::includes(verts.begin(), verts.end(), u.begin(), u.end())) continue;
                    if (!std::binary_search(u.begin(), u.end(), v)) {
                        doomed = true;
                        break;
                    }
                }
                if (doomed) continue;
            }
            std::vector<int> rest;
            for (int w : verts)
                if (w != v) rest.push_back(w);
            size_t mark = out ? out->nodes.size() : 0;
            int self = -1;
            if (out) {
                elimination_forest::node root;
                root.parent = parent;
                root.bag = {g->ids[static_cast<size_t>(v)]};
                out->nodes.push_back(std::move(root));
                self = static_cast<int>(out->nodes.size()) - 1;
            }
            if (at_most(rest, d - 1, self, out)) return true;
            if (out) out->nodes.resize(mark);
        }
        return false;
    }
};

int forest_depth(const elimination_forest& f) {
    int d = 0;
    for (size_t i = 0; i < f.nodes.size(); ++i)
        d = std::max(d, f.node_depth(static_cast<int>(i)));
    return d;
}

}  // namespace

bool ed_at_most(const graph& g, const std::vector<graph>& family_f, int d,
                elimination_forest* witness, const elim_limits& limits) {
    graph plain = strip_decorations(g);
    ed_large solver;
    solver.g = &plain;
    solver.family = family_f;
    solver.limits = limits;
    solver.pool = model_pool{&plain, &solver.family, limits.minor, {}};
    std::vector<int> all(static_cast<size_t>(plain.n()));
    for (int i = 0; i < plain.n(); ++i) all[static_cast<size_t>(i)] = i;
    elimination_forest scratch;
    bool ok = solver.at_most(all, d, -1, witness ? witness : &scratch);
    if (ok && witness) witness->depth = forest_depth(*witness);
    return ok;
}

std::pair<int, elimination_forest> compute_ed(const graph& g, const std::vector<graph>& family_f,
                                              const elim_limits& limits) {
    graph plain = strip_decorations(g);
    std::vector<int> all(static_cast<size_t>(plain.n()));
    for (int i = 0; i < plain.n(); ++i) all[static_cast<size_t>(i)] = i;

    if (plain.n() <= limits.exact_ceiling) {
        ed_solver solver;
        solver.g = &plain;
        solver.family = family_f;
        solver.limits = limits;
        int d = solver.ed_of(all);
        if (d > limits.max_depth)
            throw resource_limit_error("compute_ed: depth exceeds cap");
        elimination_forest forest;
        solver.build(all, -1, forest);
        forest.depth = forest_depth(forest);
        return {d, forest};
    }
    for (int d = 0; d <= limits.max_depth; ++d) {
        elimination_forest forest;
        if (ed_at_most(plain, family_f, d, &forest, limits)) return {d, forest};
    }
    throw resource_limit_error("compute_ed: exceeded iterative deepening cap");
}

bool validate_elimination_forest(const graph& g, const std::vector<graph>& family_f,
                                 const elimination_forest& forest, const search_limits& limits) {
    // bags partition V(G)
    std::map<std::string, int> owner;  // id -> node
    for (size_t i = 0; i < forest.nodes.size(); ++i) {
        for (const auto& id : forest.nodes[i].bag) {
            if (owner.count(id)) return false;
            if (g.index_of(id) < 0) return false;
            owner[id] = static_cast<int>(i);
        }
    }
    if (static_cast<int>(owner.size()) != g.n()) return false;
    // parents well formed, internal bags singleton
    for (size_t i = 0; i < forest.nodes.size(); ++i) {
        int p = forest.nodes[i].parent;
        if (p >= static_cast<int>(forest.nodes.size()) || p == static_cast<int>(i)) return false;
        bool internal = !forest.children_of(static_cast<int>(i)).empty();
        if (internal && forest.nodes[i].bag.size() != 1) return false;
    }
    // every edge within a leaf bag or between ancestor-descendant nodes
    auto is_ancestor = [&](int a, int b) {  // a ancestor of b (or equal)
        while (b >= 0) {
            if (a == b) return true;
            b = forest.nodes[static_cast<size_t>(b)].parent;
        }
        return false;
    };
    for (auto [u, v] : g.edges) {
        int nu = owner[g.ids[static_cast<size_t>(u)]], nv = owner[g.ids[static_cast<size_t>(v)]];
        if (nu == nv) continue;
        if (!is_ancestor(nu, nv) && !is_ancestor(nv, nu)) return false;
    }
    // leaf bags induce connected F-minor-free graphs
    for (size_t i = 0; i < forest.nodes.size(); ++i) {
        if (!forest.children_of(static_cast<int>(i)).empty()) continue;
        std::vector<int> verts;
        for (const auto& id : forest.nodes[i].bag) verts.push_back(g.index_of(id));
        if (verts.empty()) continue;
        graph sub = strip_decorations(induced(g, verts));
        if (!is_connected(sub)) return false;
        if (!f_minor_free(sub, family_f, limits)) return false;
    }
    // stated depth matches
    int d = 0;
    for (size_t i = 0; i < forest.nodes.size(); ++i)
        d = std::max(d, forest.node_depth(static_cast<int>(i)));
    return d == forest.depth;
}

int treedepth(const graph& g, const elim_limits& limits) {
    graph plain = strip_decorations(g);
    if (plain.n() > limits.exact_ceiling + 4)
        throw resource_limit_error("treedepth: graph above exact ceiling");
    std::map<std::string, int> memo;
    std::function<int(const std::vector<int>&)> td_of;
    std::function<int(const std::vector<int>&)> td_comp = [&](const std::vector<int>& verts) {
        if (verts.empty()) return 0;
        graph sub = induced(plain, verts);
        std::string key = canonical_key(sub);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int best = static_cast<int>(verts.size());
        if (verts.size() > 1) {
            for (size_t i = 0; i < verts.size(); ++i) {
                std::vector<int> rest;
                for (size_t j = 0; j < verts.size(); ++j)
                    if (j != i) rest.push_back(verts[j]);
                best = std::min(best, 1 + td_of(rest));
            }
        } else {
            best = 1;
        }
        memo[key] = best;
        return best;
    };
    td_of = [&](const std::vector<int>& verts) {
        graph sub = induced(plain, verts);
        int best = 0;
        for (const auto& comp : connected_components(sub)) {
            std::vector<int> global;
            for (int lv : comp) global.push_back(verts[static_cast<size_t>(lv)]);
            best = std::max(best, td_comp(global));
        }
        return best;
    };
    std::vector<int> all(static_cast<size_t>(plain.n()));
    for (int i = 0; i < plain.n(); ++i) all[static_cast<size_t>(i)] = i;
    return td_of(all);
}

tree_h_decomposition forest_to_tree_decomposition(const elimination_forest& forest, const graph& g) {
    tree_h_decomposition dec;
    dec.nodes.resize(forest.nodes.size());
    for (size_t i = 0; i < forest.nodes.size(); ++i) {
        dec.nodes[i].parent = forest.nodes[i].parent;
        std::set<std::string> bag(forest.nodes[i].bag.begin(), forest.nodes[i].bag.end());
        int a = forest.nodes[i].parent;
        while (a >= 0) {
            for (const auto& id : forest.nodes[static_cast<size_t>(a)].bag) bag.insert(id);
            a = forest.nodes[static_cast<size_t>(a)].parent;
        }
        dec.nodes[i].bag.assign(bag.begin(), bag.end());
        if (forest.children_of(static_cast<int>(i)).empty())
            for (const auto& id : forest.nodes[i].bag) dec.base.insert(id);
    }
    int w = 0;
    for (const auto& nd : dec.nodes) {
        int nonbase = 0;
        for (const auto& id : nd.bag)
            if (!dec.base.count(id)) ++nonbase;
        w = std::max(w, nonbase - 1);
    }
    dec.width = std::max(0, w);
    if (!validate_tree_h_decomposition(g, {}, dec))
        throw contract_error("forest_to_tree_decomposition: invalid input forest");
    return dec;
}

bool validate_tree_h_decomposition(const graph& g, const std::vector<graph>& family_f,
                                   const tree_h_decomposition& dec, const search_limits& limits) {
    size_t nn = dec.nodes.size();
    for (size_t i = 0; i < nn; ++i) {
        int p = dec.nodes[i].parent;
        if (p >= static_cast<int>(nn) || p == static_cast<int>(i)) return false;
    }
    // occurrence subtrees nonempty and connected
    for (int v = 0; v < g.n(); ++v) {
        const std::string& id = g.ids[static_cast<size_t>(v)];
        std::vector<int> occ;
        for (size_t i = 0; i < nn; ++i)
            if (std::find(dec.nodes[i].bag.begin(), dec.nodes[i].bag.end(), id) != dec.nodes[i].bag.end())
                occ.push_back(static_cast<int>(i));
        if (occ.empty()) return false;
        // connected: every occurrence other than the highest must have its
        // parent also in the occurrence set
        std::set<int> occ_set(occ.begin(), occ.end());
        int roots = 0;
        for (int i : occ) {
            int p = dec.nodes[static_cast<size_t>(i)].parent;
            if (p < 0 || !occ_set.count(p)) ++roots;
        }
        if (roots != 1) return false;
    }
    for (auto [u, v] : g.edges) {
        const std::string &iu = g.ids[static_cast<size_t>(u)], &iv = g.ids[static_cast<size_t>(v)];
        bool covered = false;
        for (size_t i = 0; i < nn && !covered; ++i) {
            const auto& bag = dec.nodes[i].bag;
            if (std::find(bag.begin(), bag.end(), iu) != bag.end() &&
                std::find(bag.begin(), bag.end(), iv) != bag.end())
                covered = true;
        }
        if (!covered) return false;
    }
    // base vertices occur in exactly one bag, which is a leaf
    for (const auto& id : dec.base) {
        int count = 0, where = -1;
        for (size_t i = 0; i < nn; ++i)
            if (std::find(dec.nodes[i].bag.begin(), dec.nodes[i].bag.end(), id) != dec.nodes[i].bag.end()) {
                ++count;
                where = static_cast<int>(i);
            }
        if (count != 1) return false;
        if (!dec.children_of(where).empty()) return false;
    }
    // bags restricted to base vertices induce F-minor-free graphs
    for (size_t i = 0; i < nn; ++i) {
        std::vector<int> verts;
        for (const auto& id : dec.nodes[i].bag)
            if (dec.base.count(id)) {
                int v = g.index_of(id);
                if (v < 0) return false;
                verts.push_back(v);
            }
        if (verts.empty()) continue;
        if (!f_minor_free(strip_decorations(induced(g, verts)), family_f, limits)) return false;
    }
    int w = 0;
    for (const auto& nd : dec.nodes) {
        int nonbase = 0;
        for (const auto& id : nd.bag)
            if (!dec.base.count(id)) ++nonbase;
        w = std::max(w, nonbase - 1);
    }
    return std::max(0, w) == dec.width;
}

tri_separation tri_separation_at(const tree_h_decomposition& dec, int node, const graph& g) {
    if (node < 0 || node >= static_cast<int>(dec.nodes.size()))
        throw argument_error("tri_separation_at: node out of range");
    // subtree membership
    std::vector<char> in_subtree(dec.nodes.size(), 0);
    std::function<void(int)> mark = [&](int i) {
        in_subtree[static_cast<size_t>(i)] = 1;
        for (int c : dec.children_of(i)) mark(c);
    };
    mark(node);
    std::set<std::string> inside_only, outside;
    for (int v = 0; v < g.n(); ++v) {
        const std::string& id = g.ids[static_cast<size_t>(v)];
        bool in = false, out = false;
        for (size_t i = 0; i < dec.nodes.size(); ++i) {
            const auto& bag = dec.nodes[i].bag;
            if (std::find(bag.begin(), bag.end(), id) == bag.end()) continue;
            (in_subtree[i] ? in : out) = true;
        }
        if (in && !out) inside_only.insert(id);
        if (out) outside.insert(id);
    }
    tri_separation sep;
    const auto& bag = dec.nodes[static_cast<size_t>(node)].bag;
    for (const auto& id : bag)
        if (outside.count(id)) sep.x.insert(id);
    for (const auto& id : inside_only) sep.a.insert(id);
    for (int v = 0; v < g.n(); ++v) {
        const std::string& id = g.ids[static_cast<size_t>(v)];
        if (!sep.a.count(id) && !sep.x.count(id)) sep.b.insert(id);
    }
    return sep;
}

bool validate_tri_separation(const graph& g, const tri_separation& sep) {
    for (int v = 0; v < g.n(); ++v) {
        const std::string& id = g.ids[static_cast<size_t>(v)];
        int cnt = (sep.a.count(id) ? 1 : 0) + (sep.x.count(id) ? 1 : 0) + (sep.b.count(id) ? 1 : 0);
        if (cnt != 1) return false;
    }
    for (auto [u, v] : g.edges) {
        const std::string &iu = g.ids[static_cast<size_t>(u)], &iv = g.ids[static_cast<size_t>(v)];
        if ((sep.a.count(iu) && sep.b.count(iv)) || (sep.a.count(iv) && sep.b.count(iu))) return false;
    }
    return true;
}

}  // namespace edfk
