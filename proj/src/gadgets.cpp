#include "edfk/gadgets.hpp"

#include <algorithm>

#include "edfk/elim.hpp"
#include "edfk/graph_algo.hpp"

namespace edfk {

const std::string gadgets_function::star = "*";

namespace {

// Theta graph: hubs h0, h1 joined by three internally disjoint paths of the
// given edge lengths (each >= 2). h0 carries boundary index 1.
graph theta_gadget(const std::vector<int>& lengths, int clique_order) {
    graph_builder b(1, {});
    int h0 = b.add_vertex("h0", {}, 1);
    int h1 = b.add_vertex("h1");
    for (size_t p = 0; p < lengths.size(); ++p) {
        int prev = h0;
        for (int i = 1; i < lengths[p]; ++i) {
            int v = b.add_vertex("p" + std::to_string(p) + "." + std::to_string(i));
            b.add_edge(prev, v);
            prev = v;
        }
        b.add_edge(prev, h1);
    }
    std::vector<int> clique;
    for (int i = 0; i < clique_order; ++i)
        clique.push_back(b.add_vertex("k" + std::to_string(i)));
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j) b.add_edge(clique[i], clique[j]);
    b.add_edge(h0, clique[0]);
    b.add_edge(h1, clique[1]);
    return b.build();
}

}  // namespace

gadgets_function build_nice_gadgets(const std::vector<std::string>& universe,
                                    const std::vector<graph>& family_f, int eta) {
    if (eta < 0) throw argument_error("build_nice_gadgets: eta must be nonnegative");
    gadgets_function gf;
    gf.atoms = universe;
    std::sort(gf.atoms.begin(), gf.atoms.end());
    gf.atoms.erase(std::unique(gf.atoms.begin(), gf.atoms.end()), gf.atoms.end());

    int norm_f = 0;
    for (const auto& f : family_f) norm_f = std::max(norm_f, f.n());
    gf.clique_order = std::max(7, norm_f + eta);

    int x = static_cast<int>(gf.atoms.size());
    auto rank_lengths = [&](int f) {
        return std::vector<int>{2 + f, 2 + f, 2 * x + 2 - 2 * f};
    };
    for (int i = 0; i < x; ++i)
        gf.gadgets.emplace(gf.atoms[static_cast<size_t>(i)],
                           theta_gadget(rank_lengths(i), gf.clique_order));
    gf.gadgets.emplace(gadgets_function::star, theta_gadget(rank_lengths(x), gf.clique_order));
    return gf;
}

bool verify_nice(const gadgets_function& gf, const graph& host, const search_limits& limits) {
    std::vector<graph> all;
    for (const auto& [l, g] : gf.gadgets) all.push_back(strip_decorations(g));
    for (const auto& g : all)
        if (!is_biconnected(g)) return false;
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
            if (i == j) continue;
            if (is_minor(all[i], all[j], minor_flavor::plain, limits)) return false;
        }
    graph h = strip_decorations(host);
    for (const auto& g : all)
        if (g.n() <= h.n() && is_minor(g, h, minor_flavor::plain, limits)) return false;
    return true;
}

extension_result extend_graph(const graph& g, const gadgets_function& gf) {
    for (int v = 0; v < g.n(); ++v)
        for (const auto& atom : g.labels_of(v))
            if (!gf.gadgets.count(atom))
                throw argument_error("extend_graph: no gadget for label " + atom);

    extension_result res;
    graph_builder b(0, {});
    for (int v = 0; v < g.n(); ++v) {
        const std::string& id = g.ids[static_cast<size_t>(v)];
        b.add_vertex(id);
        res.origin[id] = {id, "", -1};
        res.original_ids.push_back(id);
    }
    for (auto [u, v] : g.edges) b.add_edge(u, v);

    for (int v = 0; v < g.n(); ++v) {
        const std::string& anchor = g.ids[static_cast<size_t>(v)];
        std::vector<std::string> glued{gadgets_function::star};
        for (const auto& atom : g.labels_of(v)) glued.push_back(atom);
        for (const auto& label : glued) {
            const graph& gd = gf.gadgets.at(label);
            int bv = gd.vertex_with_bidx(1);
            std::map<int, int> local;
            local[bv] = v;
            for (int w = 0; w < gd.n(); ++w) {
                if (w == bv) continue;
                std::string id = anchor + "+" + label + "#" + std::to_string(w);
                local[w] = b.add_vertex(id);
                res.origin[id] = {anchor, label, w};
            }
            for (auto [a, c] : gd.edges) b.add_edge(local[a], local[c]);
        }
    }
    res.g = b.build();
    return res;
}

unlabel_result unlabel_instance(const graph& g, const std::vector<graph>& family_f,
                                const fragment_set& q, int eta, const search_limits& limits) {
    {
        elim_limits el;
        el.minor = limits;
        if (!ed_at_most(g, family_f, eta, nullptr, el))
            throw contract_error("unlabel_instance: ed_F of the input exceeds eta");
    }
    std::set<std::string> q_labels;
    for (const auto& m : q.members)
        for (int v = 0; v < m.n(); ++v)
            for (const auto& atom : m.labels_of(v)) q_labels.insert(atom);

    unlabel_result res;
    res.g_restricted = restrict_labels(g, q_labels);
    res.gf = build_nice_gadgets({q_labels.begin(), q_labels.end()}, family_f, eta);
    res.provenance = extend_graph(res.g_restricted, res.gf);
    res.g_plus = res.provenance.g;
    for (const auto& f : family_f)
        res.f_plus.push_back(extend_graph(strip_decorations(f), res.gf).g);
    for (const auto& m : q.members)
        res.q_plus.push_back(extend_graph(restrict_labels(m, q_labels), res.gf).g);
    return res;
}

}  // namespace edfk
