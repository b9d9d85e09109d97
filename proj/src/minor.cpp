#include "edfk/minor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "edfk/canonical.hpp"
#include "edfk/graph_algo.hpp"
#include "edfk/structured_minor.hpp"

namespace edfk {

std::vector<int> minor_model::branch_union() const {
    std::vector<int> out;
    for (const auto& b : branch) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct small_search {
    const graph *P, *H;
    minor_flavor flavor;
    int p = 0, n = 0;
    uint64_t all = 0;
    std::vector<uint64_t> hadj;
    std::vector<uint32_t> hlab;
    std::vector<uint32_t> preq;          // per pattern vertex, required host label mask
    std::vector<int> pin;                // per pattern vertex, pinned host vertex or -1
    std::vector<uint64_t> pinmask;       // per pattern vertex, required host vertices
    uint64_t all_pins = 0;
    uint64_t host_boundary = 0;
    std::vector<int> order;
    std::vector<std::vector<int>> earlier;  // per order position, earlier pattern neighbors
    std::vector<int> twin_prev;             // per order position, previous twin position or -1
    std::vector<uint64_t> future_pins;      // per order position, pinned host vertices still needed
    std::vector<uint64_t> phi;
    uint64_t used = 0;
    long nodes = 0, budget = 0;
    bool found = false;

    bool labels_ok() {
        // every pattern atom demand must be satisfiable by distinct host vertices
        for (size_t a = 0; a < H->atoms.size(); ++a) {
            uint32_t bit = 1u << a;
            int need = 0, have = 0;
            for (int v = 0; v < p; ++v)
                if (preq[static_cast<size_t>(v)] & bit) ++need;
            for (int v = 0; v < n; ++v)
                if (hlab[static_cast<size_t>(v)] & bit) ++have;
            if (need > have) return false;
        }
        return true;
    }

    bool prepare() {
        p = P->n();
        n = H->n();
        if (p > n || P->m() > H->m()) return false;
        all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
        hadj.assign(static_cast<size_t>(n), 0);
        for (auto [u, v] : H->edges) {
            hadj[static_cast<size_t>(u)] |= 1ULL << v;
            hadj[static_cast<size_t>(v)] |= 1ULL << u;
        }
        hlab.assign(static_cast<size_t>(n), 0);
        if (flavor_uses_labels(flavor))
            for (int v = 0; v < n; ++v) hlab[static_cast<size_t>(v)] = H->lab[static_cast<size_t>(v)];
        preq.assign(static_cast<size_t>(p), 0);
        if (flavor_uses_labels(flavor)) {
            for (int v = 0; v < p; ++v) {
                for (const auto& atom : P->labels_of(v)) {
                    uint32_t m = H->atom_mask(atom);
                    if (!m) return false;  // atom absent from host universe
                    preq[static_cast<size_t>(v)] |= m;
                }
            }
            if (!labels_ok()) return false;
        }
        pin.assign(static_cast<size_t>(p), -1);
        if (flavor_uses_boundary(flavor)) {
            for (int v = 0; v < n; ++v)
                if (H->bidx[static_cast<size_t>(v)] > 0) host_boundary |= 1ULL << v;
            for (int v = 0; v < p; ++v) {
                int d = P->bidx[static_cast<size_t>(v)];
                if (d == 0) continue;
                int b = H->vertex_with_bidx(d);
                if (b < 0) return false;
                pin[static_cast<size_t>(v)] = b;
            }
        }
        if (pinmask.empty()) pinmask.assign(static_cast<size_t>(p), 0);
        for (int v = 0; v < p; ++v) all_pins |= pinmask[static_cast<size_t>(v)];
        build_order();
        return true;
    }

    void build_order() {
        std::vector<char> seen(static_cast<size_t>(p), 0);
        auto score = [&](int v, int visited_neighbors) {
            int pinned = (pin[static_cast<size_t>(v)] >= 0 || pinmask[static_cast<size_t>(v)]) ? 1 : 0;
            return std::tuple(pinned, visited_neighbors, std::popcount(preq[static_cast<size_t>(v)]),
                              static_cast<int>(P->adj[static_cast<size_t>(v)].size()), -v);
        };
        auto comps = connected_components(*P);
        std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
            auto key = [&](const std::vector<int>& c) {
                int bd = 0;
                for (int v : c)
                    if (pin[static_cast<size_t>(v)] >= 0) ++bd;
                return std::tuple(bd, c.size());
            };
            return key(a) > key(b);
        });
        order.clear();
        for (const auto& comp : comps) {
            std::vector<int> frontier = comp;
            for (size_t step = 0; step < comp.size(); ++step) {
                int best = -1;
                std::tuple<int, int, int, int, int> best_score{};
                for (int v : comp) {
                    if (seen[static_cast<size_t>(v)]) continue;
                    int vis = 0;
                    for (int u : P->adj[static_cast<size_t>(v)])
                        if (seen[static_cast<size_t>(u)]) ++vis;
                    if (step > 0 && vis == 0) continue;  // keep prefix connected
                    auto s = score(v, vis);
                    if (best < 0 || s > best_score) {
                        best = v;
                        best_score = s;
                    }
                }
                seen[static_cast<size_t>(best)] = 1;
                order.push_back(best);
            }
        }
        earlier.assign(static_cast<size_t>(p), {});
        std::vector<int> pos(static_cast<size_t>(p), 0);
        for (int i = 0; i < p; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
        for (int i = 0; i < p; ++i) {
            int v = order[static_cast<size_t>(i)];
            for (int u : P->adj[static_cast<size_t>(v)])
                if (pos[static_cast<size_t>(u)] < i) earlier[static_cast<size_t>(i)].push_back(u);
        }
        twin_prev.assign(static_cast<size_t>(p), -1);
        for (int i = 0; i < p; ++i) {
            int v = order[static_cast<size_t>(i)];
            for (int j = i - 1; j >= 0; --j) {
                int u = order[static_cast<size_t>(j)];
                if (P->lab[static_cast<size_t>(u)] != P->lab[static_cast<size_t>(v)]) continue;
                if (P->bidx[static_cast<size_t>(u)] != P->bidx[static_cast<size_t>(v)]) continue;
                if (pinmask[static_cast<size_t>(u)] || pinmask[static_cast<size_t>(v)]) continue;
                bool same = true;
                for (int w = 0; w < p && same; ++w) {
                    if (w == u || w == v) continue;
                    if (P->has_edge(u, w) != P->has_edge(v, w)) same = false;
                }
                if (same) {
                    twin_prev[static_cast<size_t>(i)] = j;
                    break;
                }
            }
        }
        future_pins.assign(static_cast<size_t>(p) + 1, 0);
        for (int i = p - 1; i >= 0; --i) {
            future_pins[static_cast<size_t>(i)] = future_pins[static_cast<size_t>(i) + 1];
            int ov = order[static_cast<size_t>(i)];
            if (pin[static_cast<size_t>(ov)] >= 0)
                future_pins[static_cast<size_t>(i)] |= 1ULL << pin[static_cast<size_t>(ov)];
            future_pins[static_cast<size_t>(i)] |= pinmask[static_cast<size_t>(ov)];
        }
    }

    uint64_t adj_of_set(uint64_t s) const {
        uint64_t out = 0;
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            out |= hadj[static_cast<size_t>(v)];
        }
        return out;
    }

    bool constraints_ok(int posi, uint64_t s, uint32_t slab, uint64_t sadj) const {
        int v = order[static_cast<size_t>(posi)];
        if ((preq[static_cast<size_t>(v)] & ~slab) != 0) return false;
        if ((pinmask[static_cast<size_t>(v)] & ~s) != 0) return false;
        for (int e : earlier[static_cast<size_t>(posi)])
            if (!(sadj & phi[static_cast<size_t>(e)])) return false;
        return true;
    }

    bool place(int posi, uint64_t s) {
        phi[static_cast<size_t>(order[static_cast<size_t>(posi)])] = s;
        used |= s;
        bool ok = extend(posi + 1);
        used &= ~s;
        return ok;
    }

    // enumerate connected candidate sets for order position posi
    bool grow(int posi, uint64_t s, uint64_t banned, uint32_t slab, uint64_t sadj, uint64_t allowed,
              int cap) {
        if (++nodes > budget) throw resource_limit_error("minor search budget exceeded");
        if (constraints_ok(posi, s, slab, sadj)) {
            if (place(posi, s)) return true;
        }
        if (std::popcount(s) >= cap) return false;
        uint64_t ext = sadj & allowed & ~s & ~banned;
        while (ext) {
            int u = std::countr_zero(ext);
            ext &= ext - 1;
            uint64_t ub = 1ULL << u;
            // ban smaller extension candidates for uniqueness
            uint64_t newban = banned | (sadj & allowed & ~s & ((ub - 1)));
            if (grow(posi, s | ub, newban, slab | hlab[static_cast<size_t>(u)],
                     sadj | hadj[static_cast<size_t>(u)], allowed, cap))
                return true;
        }
        return false;
    }

    bool extend(int posi) {
        if (posi == p) {
            found = true;
            return true;
        }
        int v = order[static_cast<size_t>(posi)];
        uint64_t avail = all & ~used;
        // pinned host vertices of later pattern vertices are off limits
        uint64_t reserved = future_pins[static_cast<size_t>(posi) + 1];
        uint64_t allowed = avail & ~reserved;
        allowed &= ~(all_pins & ~pinmask[static_cast<size_t>(v)]);
        if ((pinmask[static_cast<size_t>(v)] & ~avail) != 0) return false;
        if (flavor_uses_boundary(flavor)) {
            allowed &= ~host_boundary;
            if (pin[static_cast<size_t>(v)] >= 0) {
                uint64_t pb = 1ULL << pin[static_cast<size_t>(v)];
                if (!(avail & pb)) return false;
                allowed |= pb;
            }
        }
        if (twin_prev[static_cast<size_t>(posi)] >= 0) {
            uint64_t prev = phi[static_cast<size_t>(order[static_cast<size_t>(twin_prev[static_cast<size_t>(posi)])])];
            int mn = std::countr_zero(prev);
            allowed &= ~((1ULL << mn) | ((1ULL << mn) - 1));
        }
        int cap = std::popcount(avail) - (p - posi - 1);
        if (cap <= 0) return false;

        if (pin[static_cast<size_t>(v)] >= 0) {
            int b = pin[static_cast<size_t>(v)];
            if (!(allowed & (1ULL << b))) return false;
            return grow(posi, 1ULL << b, 0, hlab[static_cast<size_t>(b)], hadj[static_cast<size_t>(b)],
                        allowed, cap);
        }
        if (pinmask[static_cast<size_t>(v)]) {
            int b = std::countr_zero(pinmask[static_cast<size_t>(v)]);
            if (!(allowed & (1ULL << b))) return false;
            return grow(posi, 1ULL << b, 0, hlab[static_cast<size_t>(b)], hadj[static_cast<size_t>(b)],
                        allowed, cap);
        }
        if (!earlier[static_cast<size_t>(posi)].empty()) {
            uint64_t seeds = adj_of_set(phi[static_cast<size_t>(earlier[static_cast<size_t>(posi)][0])]) & allowed;
            uint64_t done = 0;
            while (seeds) {
                int sv = std::countr_zero(seeds);
                seeds &= seeds - 1;
                if (grow(posi, 1ULL << sv, done, hlab[static_cast<size_t>(sv)],
                         hadj[static_cast<size_t>(sv)], allowed, cap))
                    return true;
                done |= 1ULL << sv;
            }
            return false;
        }
        uint64_t seeds = allowed;
        uint64_t done = 0;
        while (seeds) {
            int sv = std::countr_zero(seeds);
            seeds &= seeds - 1;
            if (grow(posi, 1ULL << sv, done, hlab[static_cast<size_t>(sv)], hadj[static_cast<size_t>(sv)],
                     allowed, cap))
                return true;
            done |= 1ULL << sv;
        }
        return false;
    }
};

}  // namespace

namespace {

std::optional<minor_model> run_small_search(const graph& pattern, const graph& host,
                                            minor_flavor flavor,
                                            const std::vector<uint64_t>& pin_masks,
                                            const search_limits& limits) {
    if (host.n() > limits.max_host_vertices || host.n() > 64)
        throw resource_limit_error("find_minor_model: host has " + std::to_string(host.n()) +
                                   " vertices, ceiling is " +
                                   std::to_string(std::min(limits.max_host_vertices, 64)));
    if (pattern.n() == 0) return minor_model{};

    small_search s;
    s.P = &pattern;
    s.H = &host;
    s.flavor = flavor;
    s.budget = limits.node_budget;
    s.pinmask = pin_masks;
    if (!s.prepare()) return std::nullopt;
    s.phi.assign(static_cast<size_t>(pattern.n()), 0);
    if (!s.extend(0)) return std::nullopt;

    minor_model m;
    m.branch.resize(static_cast<size_t>(pattern.n()));
    for (int v = 0; v < pattern.n(); ++v) {
        uint64_t b = s.phi[static_cast<size_t>(v)];
        while (b) {
            int u = std::countr_zero(b);
            b &= b - 1;
            m.branch[static_cast<size_t>(v)].push_back(u);
        }
    }
    return m;
}

}  // namespace

std::optional<minor_model> find_minor_model(const graph& pattern, const graph& host,
                                            minor_flavor flavor, const search_limits& limits) {
    return run_small_search(pattern, host, flavor, {}, limits);
}

std::optional<minor_model> find_minor_model_pinned(const graph& pattern, const graph& host,
                                                   const std::vector<uint64_t>& pin_masks,
                                                   const search_limits& limits) {
    return run_small_search(pattern, host, minor_flavor::plain, pin_masks, limits);
}

bool is_minor(const graph& pattern, const graph& host, minor_flavor flavor,
              const search_limits& limits) {
    if (host.n() > limits.max_host_vertices && flavor == minor_flavor::plain)
        return structured_is_minor(pattern, host, limits).has_value() ? true : false;
    return find_minor_model(pattern, host, flavor, limits).has_value();
}

bool validate_model(const graph& pattern, const graph& host, const minor_model& m,
                    minor_flavor flavor) {
    if (static_cast<int>(m.branch.size()) != pattern.n()) return false;
    std::vector<char> taken(static_cast<size_t>(host.n()), 0);
    for (int v = 0; v < pattern.n(); ++v) {
        const auto& b = m.branch[static_cast<size_t>(v)];
        if (b.empty()) return false;
        for (int u : b) {
            if (u < 0 || u >= host.n()) return false;
            if (taken[static_cast<size_t>(u)]) return false;
            taken[static_cast<size_t>(u)] = 1;
        }
        graph sub = induced(host, b);
        if (!is_connected(sub)) return false;
        if (flavor_uses_labels(flavor)) {
            uint32_t have = 0;
            for (int u : b) have |= host.lab[static_cast<size_t>(u)];
            for (const auto& atom : pattern.labels_of(v)) {
                uint32_t mask = host.atom_mask(atom);
                if (!mask || !(have & mask)) return false;
            }
        }
        if (flavor_uses_boundary(flavor)) {
            std::set<int> idx;
            for (int u : b)
                if (host.bidx[static_cast<size_t>(u)] > 0) idx.insert(host.bidx[static_cast<size_t>(u)]);
            int d = pattern.bidx[static_cast<size_t>(v)];
            if (d > 0) {
                if (idx != std::set<int>{d}) return false;
            } else if (!idx.empty()) {
                return false;
            }
        }
    }
    for (auto [u, v] : pattern.edges) {
        bool realized = false;
        for (int a : m.branch[static_cast<size_t>(u)]) {
            for (int b : m.branch[static_cast<size_t>(v)])
                if (host.has_edge(a, b)) {
                    realized = true;
                    break;
                }
            if (realized) break;
        }
        if (!realized) return false;
    }
    return true;
}

minor_model minimize_model(const minor_model& m, const graph& pattern, const graph& host,
                           minor_flavor flavor) {
    if (!validate_model(pattern, host, m, flavor))
        throw contract_error("minimize_model: input model is not valid");
    minor_model cur = m;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t v = 0; v < cur.branch.size() && !changed; ++v) {
            for (size_t i = 0; i < cur.branch[v].size(); ++i) {
                minor_model trial = cur;
                trial.branch[v].erase(trial.branch[v].begin() + static_cast<long>(i));
                if (!trial.branch[v].empty() && validate_model(pattern, host, trial, flavor)) {
                    cur = trial;
                    changed = true;
                    break;
                }
            }
        }
    }
    return cur;
}

bool family_minor_free(const std::vector<graph>& family, const graph& host, minor_flavor flavor,
                       const search_limits& limits) {
    for (const auto& f : family)
        if (is_minor(f, host, flavor, limits)) return false;
    return true;
}

namespace {
std::map<std::tuple<std::string, std::string, int>, bool>& minor_cache() {
    static std::map<std::tuple<std::string, std::string, int>, bool> cache;
    return cache;
}
}  // namespace

void clear_minor_cache() { minor_cache().clear(); }

bool is_minor_cached(const graph& pattern, const graph& host, minor_flavor flavor,
                     const search_limits& limits) {
    if (pattern.n() > 14 || host.n() > 14) return is_minor(pattern, host, flavor, limits);
    auto key = std::make_tuple(canonical_key(pattern), canonical_key(host), static_cast<int>(flavor));
    auto it = minor_cache().find(key);
    if (it != minor_cache().end()) return it->second;
    bool res = is_minor(pattern, host, flavor, limits);
    minor_cache()[key] = res;
    return res;
}

}  // namespace edfk
