#include "edfk/structured_minor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "edfk/graph_algo.hpp"

namespace edfk {

namespace {

// A piece is a connected vertex subset of the pattern (its graph is the
// induced subgraph) plus pin requirements: pattern vertex -> host vertices
// that its branch set must contain.
struct spiece {
    std::vector<int> verts;                   // sorted original pattern vertices
    std::map<int, std::set<int>> pins;        // pattern vertex -> global host vertices

    std::string encode() const {
        std::string s = "[";
        for (int v : verts) s += std::to_string(v) + ",";
        s += "|";
        for (const auto& [v, hs] : pins) {
            s += std::to_string(v) + ":";
            for (int h : hs) s += std::to_string(h) + ".";
            s += ";";
        }
        s += "]";
        return s;
    }
};

using model_map = std::map<int, std::set<int>>;  // pattern vertex -> host vertices

void merge_models(model_map& into, const model_map& from) {
    for (const auto& [v, hs] : from) into[v].insert(hs.begin(), hs.end());
}

struct ssolver {
    const graph* pat;
    const graph* host;
    search_limits limits;
    int term;
    long calls = 0;
    std::set<std::string> failed;

    explicit ssolver(const graph& p, const graph& h, const search_limits& lim)
        : pat(&p), host(&h), limits(lim) {
        term = std::min(limits.max_host_vertices, 22);
    }

    std::string state_key(const std::vector<spiece>& pieces, const std::vector<char>& active) const {
        std::string key;
        key.reserve(static_cast<size_t>(host->n()) / 8 + 16 * pieces.size());
        char cur = 0;
        for (int v = 0; v < host->n(); ++v) {
            cur = static_cast<char>((cur << 1) | active[static_cast<size_t>(v)]);
            if (v % 8 == 7) {
                key += cur;
                cur = 0;
            }
        }
        key += cur;
        std::vector<std::string> encs;
        for (const auto& p : pieces) encs.push_back(p.encode());
        std::sort(encs.begin(), encs.end());
        for (const auto& e : encs) key += e;
        return key;
    }

    // exhaustive multi-piece search on a small host region
    std::optional<model_map> terminal(const std::vector<spiece>& W, const std::vector<int>& region) {
        std::vector<int> upverts;
        for (const auto& p : W) upverts.insert(upverts.end(), p.verts.begin(), p.verts.end());
        std::sort(upverts.begin(), upverts.end());
        if (static_cast<int>(upverts.size()) > static_cast<int>(region.size())) return std::nullopt;
        if (upverts.empty()) return model_map{};

        graph up = induced(*pat, upverts);          // local index i -> upverts[i]
        graph hc = induced(*host, region);          // local index j -> region[j]
        std::map<int, int> hlocal;
        for (size_t j = 0; j < region.size(); ++j) hlocal[region[j]] = static_cast<int>(j);
        std::vector<uint64_t> pinmask(upverts.size(), 0);
        for (const auto& p : W) {
            for (const auto& [v, hs] : p.pins) {
                size_t li = static_cast<size_t>(
                    std::lower_bound(upverts.begin(), upverts.end(), v) - upverts.begin());
                for (int h : hs) {
                    auto it = hlocal.find(h);
                    if (it == hlocal.end()) return std::nullopt;
                    pinmask[li] |= 1ULL << it->second;
                }
            }
        }
        search_limits lim = limits;
        lim.max_host_vertices = std::max(term, limits.max_host_vertices);
        auto res = find_minor_model_pinned(up, hc, pinmask, lim);
        if (!res) return std::nullopt;
        model_map out;
        for (size_t i = 0; i < upverts.size(); ++i)
            for (int j : res->branch[i]) out[upverts[i]].insert(region[static_cast<size_t>(j)]);
        return out;
    }

    static bool piece_has_pin_outside(const spiece& p, const std::set<int>& inside) {
        for (const auto& [v, hs] : p.pins)
            for (int h : hs)
                if (!inside.count(h)) return true;
        return false;
    }

    static bool piece_has_pin_in(const spiece& p, const std::set<int>& area) {
        for (const auto& [v, hs] : p.pins)
            for (int h : hs)
                if (area.count(h)) return true;
        return false;
    }

    std::optional<model_map> solve(std::vector<spiece> pieces, std::vector<char> active) {
        if (++calls > limits.node_budget / 1000 + 100000)
            throw resource_limit_error("structured minor search budget exceeded");
        if (pieces.empty()) return model_map{};

        int active_count = 0;
        for (char a : active) active_count += a;
        long total_verts = 0;
        for (const auto& p : pieces) total_verts += static_cast<long>(p.verts.size());
        if (total_verts > active_count) return std::nullopt;
        long active_edges = 0;
        for (auto [u, v] : host->edges)
            if (active[static_cast<size_t>(u)] && active[static_cast<size_t>(v)]) ++active_edges;
        long total_edges = 0;
        for (const auto& p : pieces) {
            for (auto [u, v] : pat->edges) {
                bool iu = std::binary_search(p.verts.begin(), p.verts.end(), u);
                bool iv = std::binary_search(p.verts.begin(), p.verts.end(), v);
                if (iu && iv) ++total_edges;
            }
        }
        if (total_edges > active_edges) return std::nullopt;

        // pins must target active vertices, one owner per host vertex
        std::set<int> pin_targets;
        for (const auto& p : pieces)
            for (const auto& [v, hs] : p.pins)
                for (int h : hs) {
                    if (!active[static_cast<size_t>(h)]) return std::nullopt;
                    if (!pin_targets.insert(h).second) return std::nullopt;
                }

        std::string key = state_key(pieces, active);
        if (failed.count(key)) return std::nullopt;

        auto result = solve_inner(pieces, active);
        if (!result) failed.insert(key);
        return result;
    }

    std::optional<model_map> solve_inner(const std::vector<spiece>& pieces,
                                         const std::vector<char>& active) {
        // first active host component
        std::vector<int> comp;
        {
            int start = -1;
            for (int v = 0; v < host->n() && start < 0; ++v)
                if (active[static_cast<size_t>(v)]) start = v;
            if (start < 0) return std::nullopt;  // pieces remain but no host left
            std::vector<char> seen(static_cast<size_t>(host->n()), 0);
            std::vector<int> stack{start};
            seen[static_cast<size_t>(start)] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int u : host->adj[static_cast<size_t>(v)])
                    if (active[static_cast<size_t>(u)] && !seen[static_cast<size_t>(u)]) {
                        seen[static_cast<size_t>(u)] = 1;
                        stack.push_back(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
        }
        std::set<int> comp_set(comp.begin(), comp.end());

        // pieces pinned inside this component must embed here; pieces pinned
        // both here and elsewhere are unsatisfiable
        std::vector<int> must_here, free_pieces, pinned_elsewhere;
        for (size_t i = 0; i < pieces.size(); ++i) {
            bool in = piece_has_pin_in(pieces[i], comp_set);
            bool out = piece_has_pin_outside(pieces[i], comp_set);
            if (in && out) return std::nullopt;
            if (in)
                must_here.push_back(static_cast<int>(i));
            else if (pieces[i].pins.empty())
                free_pieces.push_back(static_cast<int>(i));
            else
                pinned_elsewhere.push_back(static_cast<int>(i));
        }

        if (static_cast<int>(comp.size()) <= term)
            return solve_small_component(pieces, active, comp, must_here, free_pieces);
        return solve_peel(pieces, active, comp, comp_set);
    }

    std::vector<char> deactivate(const std::vector<char>& active, const std::vector<int>& verts) const {
        std::vector<char> out = active;
        for (int v : verts) out[static_cast<size_t>(v)] = 0;
        return out;
    }

    std::vector<spiece> without(const std::vector<spiece>& pieces, const std::vector<int>& idxs) const {
        std::set<int> drop(idxs.begin(), idxs.end());
        std::vector<spiece> out;
        for (size_t i = 0; i < pieces.size(); ++i)
            if (!drop.count(static_cast<int>(i))) out.push_back(pieces[i]);
        return out;
    }

    std::optional<model_map> solve_small_component(const std::vector<spiece>& pieces,
                                                   const std::vector<char>& active,
                                                   const std::vector<int>& comp,
                                                   const std::vector<int>& must_here,
                                                   const std::vector<int>& free_pieces) {
        // subsets of free pieces to place here, smallest first
        size_t nf = free_pieces.size();
        std::vector<uint32_t> subsets;
        for (uint32_t m = 0; m < (1u << nf); ++m) subsets.push_back(m);
        std::sort(subsets.begin(), subsets.end(),
                  [](uint32_t a, uint32_t b) { return std::popcount(a) != std::popcount(b)
                                                          ? std::popcount(a) < std::popcount(b)
                                                          : a < b; });
        for (uint32_t m : subsets) {
            std::vector<int> widx = must_here;
            for (size_t j = 0; j < nf; ++j)
                if (m & (1u << j)) widx.push_back(free_pieces[j]);
            std::vector<spiece> W;
            long sz = 0;
            for (int i : widx) {
                W.push_back(pieces[static_cast<size_t>(i)]);
                sz += static_cast<long>(pieces[static_cast<size_t>(i)].verts.size());
            }
            if (sz > static_cast<long>(comp.size())) continue;
            auto m1 = terminal(W, comp);
            if (!m1) continue;
            auto rest = without(pieces, widx);
            auto m2 = solve(rest, deactivate(active, comp));
            if (m2) {
                merge_models(*m1, *m2);
                return m1;
            }
        }
        return std::nullopt;
    }

    std::optional<model_map> solve_peel(const std::vector<spiece>& pieces,
                                        const std::vector<char>& active, const std::vector<int>& comp,
                                        const std::set<int>& comp_set) {
        graph cg = induced(*host, comp);  // local j -> comp[j]
        auto blocks = biconnected_components(cg);
        if (blocks.size() <= 1)
            throw resource_limit_error("structured minor search: biconnected host component of size " +
                                       std::to_string(comp.size()));
        auto cuts = cut_vertices(cg);
        std::set<int> cut_set(cuts.begin(), cuts.end());

        // leaf block: exactly one cut vertex
        std::vector<int> leaf_local;
        int c_local = -1;
        for (const auto& b : blocks) {
            std::vector<int> bc;
            for (int v : b)
                if (cut_set.count(v)) bc.push_back(v);
            if (bc.size() == 1) {
                if (leaf_local.empty() || b < leaf_local) {
                    leaf_local = b;
                    c_local = bc[0];
                }
            }
        }
        if (leaf_local.empty())
            throw resource_limit_error("structured minor search: no leaf block found");
        if (static_cast<int>(leaf_local.size()) > term)
            throw resource_limit_error("structured minor search: host block of size " +
                                       std::to_string(leaf_local.size()));

        int c = comp[static_cast<size_t>(c_local)];
        std::vector<int> B;  // global, includes c
        for (int v : leaf_local) B.push_back(comp[static_cast<size_t>(v)]);
        std::sort(B.begin(), B.end());
        std::set<int> B_set(B.begin(), B.end());
        std::vector<int> B_minus_c;
        std::set<int> B_minus_c_set;
        for (int v : B)
            if (v != c) {
                B_minus_c.push_back(v);
                B_minus_c_set.insert(v);
            }
        (void)comp_set;

        // classify pieces wrt the block
        int c_piece = -1, c_vertex = -1;
        std::vector<int> must_B;  // pieces with a pin in B \ {c}
        std::vector<int> free_pieces;
        for (size_t i = 0; i < pieces.size(); ++i) {
            for (const auto& [v, hs] : pieces[i].pins)
                if (hs.count(c)) {
                    c_piece = static_cast<int>(i);
                    c_vertex = v;
                }
            if (piece_has_pin_in(pieces[i], B_minus_c_set)) must_B.push_back(static_cast<int>(i));
            if (pieces[i].pins.empty()) free_pieces.push_back(static_cast<int>(i));
        }

        // at most one piece may cross the cut vertex; two pieces that each
        // need vertices on both sides are unsatisfiable
        {
            int spanning = 0;
            for (int i : must_B)
                if (piece_has_pin_outside(pieces[static_cast<size_t>(i)], B_minus_c_set)) ++spanning;
            if (spanning > 1) return std::nullopt;
        }

        size_t nf = free_pieces.size();
        std::vector<uint32_t> subsets;
        for (uint32_t m = 0; m < (1u << nf); ++m) subsets.push_back(m);
        std::sort(subsets.begin(), subsets.end(),
                  [](uint32_t a, uint32_t b) { return std::popcount(a) != std::popcount(b)
                                                          ? std::popcount(a) < std::popcount(b)
                                                          : a < b; });

        auto free_subset = [&](uint32_t m) {
            std::vector<int> out;
            for (size_t j = 0; j < nf; ++j)
                if (m & (1u << j)) out.push_back(free_pieces[j]);
            return out;
        };

        // --- case: nothing crosses, c stays with the rest ---
        {
            bool feasible = c_piece < 0 || !piece_has_pin_in(pieces[static_cast<size_t>(c_piece)], B_minus_c_set);
            for (int i : must_B)
                if (piece_has_pin_outside(pieces[static_cast<size_t>(i)], B_minus_c_set)) feasible = false;
            if (feasible) {
                for (uint32_t m : subsets) {
                    std::vector<int> widx = must_B;
                    for (int i : free_subset(m)) widx.push_back(i);
                    std::vector<spiece> W;
                    long sz = 0;
                    for (int i : widx) {
                        W.push_back(pieces[static_cast<size_t>(i)]);
                        sz += static_cast<long>(pieces[static_cast<size_t>(i)].verts.size());
                    }
                    if (sz > static_cast<long>(B_minus_c.size())) continue;
                    auto m1 = terminal(W, B_minus_c);
                    if (!m1) continue;
                    auto m2 = solve(without(pieces, widx), deactivate(active, B_minus_c));
                    if (m2) {
                        merge_models(*m1, *m2);
                        return m1;
                    }
                }
            }
        }

        // --- case: nothing crosses, c is used inside the block ---
        {
            bool feasible = true;
            std::vector<int> base = must_B;
            if (c_piece >= 0) {
                if (piece_has_pin_outside(pieces[static_cast<size_t>(c_piece)], B_set)) feasible = false;
                if (std::find(base.begin(), base.end(), c_piece) == base.end()) base.push_back(c_piece);
            }
            for (int i : must_B)
                if (piece_has_pin_outside(pieces[static_cast<size_t>(i)], B_set)) feasible = false;
            if (feasible) {
                for (uint32_t m : subsets) {
                    std::vector<int> widx = base;
                    for (int i : free_subset(m)) widx.push_back(i);
                    if (widx.empty()) continue;  // covered by the previous case
                    std::vector<spiece> W;
                    long sz = 0;
                    for (int i : widx) {
                        W.push_back(pieces[static_cast<size_t>(i)]);
                        sz += static_cast<long>(pieces[static_cast<size_t>(i)].verts.size());
                    }
                    if (sz > static_cast<long>(B.size())) continue;
                    auto m1 = terminal(W, B);
                    if (!m1) continue;
                    auto m2 = solve(without(pieces, widx), deactivate(active, B));
                    if (m2) {
                        merge_models(*m1, *m2);
                        return m1;
                    }
                }
            }
        }

        // --- case: one piece crosses at c ---
        std::vector<std::pair<int, int>> cross_candidates;  // (piece, vertex)
        if (c_piece >= 0) {
            cross_candidates.emplace_back(c_piece, c_vertex);
        } else {
            for (size_t i = 0; i < pieces.size(); ++i)
                for (int x : pieces[static_cast<size_t>(i)].verts) cross_candidates.emplace_back(static_cast<int>(i), x);
        }
        for (auto [pj, x] : cross_candidates) {
            const spiece& Pj = pieces[static_cast<size_t>(pj)];
            // other pieces pinned into B\c must embed fully inside the block
            bool feasible = true;
            std::vector<int> wbase;
            for (int i : must_B) {
                if (i == pj) continue;
                if (piece_has_pin_outside(pieces[static_cast<size_t>(i)], B_minus_c_set)) feasible = false;
                wbase.push_back(i);
            }
            if (!feasible) continue;

            // split Pj at x
            std::vector<int> rest_verts;
            for (int v : Pj.verts)
                if (v != x) rest_verts.push_back(v);
            graph pr = induced(*pat, rest_verts);  // local k -> rest_verts[k]
            auto kcomps = connected_components(pr);
            int nk = static_cast<int>(kcomps.size());
            std::vector<int> side(static_cast<size_t>(nk), -1);  // 0 = B side, 1 = rest, -1 = free
            bool dead = false;
            for (int k = 0; k < nk && !dead; ++k) {
                bool pin_b = false, pin_r = false;
                for (int lv : kcomps[static_cast<size_t>(k)]) {
                    int v = rest_verts[static_cast<size_t>(lv)];
                    auto it = Pj.pins.find(v);
                    if (it == Pj.pins.end()) continue;
                    for (int h : it->second) {
                        if (h == c) dead = true;  // only x may cover c
                        else if (B_minus_c_set.count(h)) pin_b = true;
                        else pin_r = true;
                    }
                }
                if (pin_b && pin_r) dead = true;
                else if (pin_b) side[static_cast<size_t>(k)] = 0;
                else if (pin_r) side[static_cast<size_t>(k)] = 1;
            }
            if (dead) continue;
            std::set<int> x_pins_b, x_pins_r;
            {
                auto it = Pj.pins.find(x);
                if (it != Pj.pins.end())
                    for (int h : it->second) {
                        if (h == c) continue;
                        if (B_minus_c_set.count(h)) x_pins_b.insert(h);
                        else x_pins_r.insert(h);
                    }
            }
            std::vector<int> free_k;
            for (int k = 0; k < nk; ++k)
                if (side[static_cast<size_t>(k)] < 0) free_k.push_back(k);
            if (free_k.size() > 20) throw resource_limit_error("structured minor search: split fan-out");

            for (uint32_t km = 0; km < (1u << free_k.size()); ++km) {
                std::vector<int> bverts{x}, rverts{x};
                for (int k = 0; k < nk; ++k) {
                    bool to_b = side[static_cast<size_t>(k)] == 0;
                    if (side[static_cast<size_t>(k)] < 0) {
                        size_t pos = static_cast<size_t>(
                            std::find(free_k.begin(), free_k.end(), k) - free_k.begin());
                        to_b = (km >> pos) & 1;
                    }
                    for (int lv : kcomps[static_cast<size_t>(k)])
                        (to_b ? bverts : rverts).push_back(rest_verts[static_cast<size_t>(lv)]);
                }
                // the block side must carry real content beyond the shared vertex
                if (bverts.size() == 1 && x_pins_b.empty()) continue;
                if (static_cast<long>(bverts.size()) > static_cast<long>(B.size())) continue;
                std::sort(bverts.begin(), bverts.end());
                std::sort(rverts.begin(), rverts.end());

                spiece pb, prr;
                pb.verts = bverts;
                prr.verts = rverts;
                for (const auto& [v, hs] : Pj.pins) {
                    if (v == x) continue;
                    if (std::binary_search(bverts.begin(), bverts.end(), v)) pb.pins[v] = hs;
                    else prr.pins[v] = hs;
                }
                pb.pins[x] = x_pins_b;
                pb.pins[x].insert(c);
                prr.pins[x] = x_pins_r;
                prr.pins[x].insert(c);

                for (uint32_t m : subsets) {
                    std::vector<int> widx = wbase;
                    bool skip = false;
                    for (int i : free_subset(m)) {
                        if (i == pj) { skip = true; break; }
                        widx.push_back(i);
                    }
                    if (skip) continue;
                    std::vector<spiece> W;
                    long sz = static_cast<long>(pb.verts.size());
                    for (int i : widx) {
                        W.push_back(pieces[static_cast<size_t>(i)]);
                        sz += static_cast<long>(pieces[static_cast<size_t>(i)].verts.size());
                    }
                    if (sz > static_cast<long>(B.size())) continue;
                    W.push_back(pb);
                    auto m1 = terminal(W, B);
                    if (!m1) continue;
                    std::vector<int> drop = widx;
                    drop.push_back(pj);
                    auto rest = without(pieces, drop);
                    rest.push_back(prr);
                    auto m2 = solve(rest, deactivate(active, B_minus_c));
                    if (m2) {
                        merge_models(*m1, *m2);
                        return m1;
                    }
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<minor_model> structured_is_minor(const graph& pattern, const graph& host,
                                               const search_limits& limits) {
    if (pattern.n() > host.n() || pattern.m() > host.m()) return std::nullopt;
    if (host.n() <= limits.max_host_vertices && host.n() <= 64)
        return find_minor_model(pattern, host, minor_flavor::plain, limits);
    if (pattern.n() == 0) return minor_model{};

    ssolver solver(host.n() ? pattern : pattern, host, limits);
    std::vector<spiece> pieces;
    for (const auto& comp : connected_components(pattern)) {
        spiece p;
        p.verts = comp;
        pieces.push_back(std::move(p));
    }
    std::vector<char> active(static_cast<size_t>(host.n()), 1);
    auto res = solver.solve(pieces, active);
    if (!res) return std::nullopt;

    minor_model m;
    m.branch.resize(static_cast<size_t>(pattern.n()));
    for (const auto& [v, hs] : *res)
        m.branch[static_cast<size_t>(v)] = std::vector<int>(hs.begin(), hs.end());
    if (!validate_model(pattern, host, m, minor_flavor::plain))
        throw contract_error("structured minor search produced an invalid model");
    return m;
}

}  // namespace edfk
