#include "edfk/solvers.hpp"

#include <algorithm>
#include <functional>

#include "edfk/canonical.hpp"
#include "edfk/graph_algo.hpp"
#include "edfk/structured_minor.hpp"

namespace edfk {

namespace {

bool plain_family_free(const graph& host, const std::vector<graph>& family,
                       const search_limits& limits) {
    graph h = strip_decorations(host);
    for (const auto& f : family)
        if (is_minor_cached(strip_decorations(f), h, minor_flavor::plain, limits)) return false;
    return true;
}

// visit k-subsets of 0..n-1 in lexicographic order until the callback accepts
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    if (k > n) return false;
    while (true) {
        if (f(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

std::set<std::string> ids_of(const graph& g, const std::vector<int>& order,
                             const std::vector<int>& picks) {
    std::set<std::string> out;
    for (int i : picks) out.insert(g.ids[static_cast<size_t>(order[static_cast<size_t>(i)])]);
    return out;
}

}  // namespace

std::pair<int, solution> opt_deletion(const graph& g, const std::vector<graph>& family_f,
                                      const solver_limits& limits) {
    if (g.n() > limits.enumeration_ceiling)
        throw resource_limit_error("opt_deletion: graph above enumeration ceiling");
    auto order = g.vertices_by_id();
    for (int k = 0; k <= g.n(); ++k) {
        solution found;
        bool ok = for_each_combination(g.n(), k, [&](const std::vector<int>& picks) {
            auto ids = ids_of(g, order, picks);
            if (plain_family_free(remove_vertices_by_id(g, ids), family_f, limits.minor)) {
                found.vertices = ids;
                return true;
            }
            return false;
        });
        if (ok) return {k, found};
    }
    throw contract_error("opt_deletion: unreachable");
}

std::vector<solution> enumerate_optimal(const graph& g, const std::vector<graph>& family_f,
                                        const solver_limits& limits) {
    int opt = opt_deletion(g, family_f, limits).first;
    std::vector<solution> out;
    auto order = g.vertices_by_id();
    for_each_combination(g.n(), opt, [&](const std::vector<int>& picks) {
        auto ids = ids_of(g, order, picks);
        if (plain_family_free(remove_vertices_by_id(g, ids), family_f, limits.minor))
            out.push_back(solution{ids, false});
        return false;
    });
    return out;
}

std::optional<solution> disjoint_deletion(const graph& g, const std::vector<graph>& family_f,
                                          const std::set<std::string>& undeletable, int s,
                                          const solver_limits& limits) {
    if (g.n() > limits.enumeration_ceiling)
        throw resource_limit_error("disjoint_deletion: graph above enumeration ceiling");
    std::vector<int> allowed;
    for (int v : g.vertices_by_id())
        if (!undeletable.count(g.ids[static_cast<size_t>(v)])) allowed.push_back(v);
    int na = static_cast<int>(allowed.size());
    for (int k = 0; k <= std::min(s, na); ++k) {
        solution found;
        bool ok = for_each_combination(na, k, [&](const std::vector<int>& picks) {
            std::set<std::string> ids;
            for (int i : picks) ids.insert(g.ids[static_cast<size_t>(allowed[static_cast<size_t>(i)])]);
            if (plain_family_free(remove_vertices_by_id(g, ids), family_f, limits.minor)) {
                found.vertices = ids;
                return true;
            }
            return false;
        });
        if (ok) return found;
    }
    return std::nullopt;
}

std::optional<solution> hitting_q_labeled(const graph& c, const std::vector<graph>& family_f,
                                          const fragment_set& q, const solver_limits& limits) {
    for (const auto& m : q.members)
        if (!is_connected(m)) throw argument_error("hitting_q_labeled: fragments must be connected");
    for (const auto& y : enumerate_optimal(c, family_f, limits)) {
        graph rest = remove_vertices_by_id(c, y.vertices);
        bool clean = true;
        for (const auto& m : q.members)
            if (is_minor_cached(m, rest, minor_flavor::labeled, limits.minor)) {
                clean = false;
                break;
            }
        if (clean) return solution{y.vertices, true};
    }
    return std::nullopt;
}

std::optional<solution> hitting_q_unlabeled(const graph& g, const std::vector<graph>& family_f,
                                            const std::vector<graph>& q,
                                            const solver_limits& limits) {
    for (const auto& y : enumerate_optimal(g, family_f, limits)) {
        graph rest = remove_vertices_by_id(g, y.vertices);
        bool clean = true;
        for (const auto& m : q)
            if (is_minor_cached(strip_decorations(m), strip_decorations(rest), minor_flavor::plain,
                                limits.minor)) {
                clean = false;
                break;
            }
        if (clean) return solution{y.vertices, true};
    }
    return std::nullopt;
}

std::vector<int> min_hitting_set(const std::vector<std::vector<int>>& constraints) {
    for (const auto& c : constraints)
        if (c.empty()) throw argument_error("min_hitting_set: empty constraint");
    std::vector<int> best;
    bool have_best = false;
    {  // greedy upper bound
        std::vector<int> greedy;
        std::vector<char> hit(constraints.size(), 0);
        while (true) {
            std::map<int, int> count;
            bool open = false;
            for (size_t i = 0; i < constraints.size(); ++i) {
                if (hit[i]) continue;
                open = true;
                for (int v : constraints[i]) ++count[v];
            }
            if (!open) break;
            int bestv = -1, bestc = -1;
            for (auto [v, c] : count)
                if (c > bestc) {
                    bestc = c;
                    bestv = v;
                }
            greedy.push_back(bestv);
            for (size_t i = 0; i < constraints.size(); ++i)
                if (!hit[i] &&
                    std::find(constraints[i].begin(), constraints[i].end(), bestv) != constraints[i].end())
                    hit[i] = 1;
        }
        best = greedy;
        have_best = true;
    }
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
        if (have_best && cur.size() >= best.size()) return;
        // smallest uncovered constraint
        const std::vector<int>* pick = nullptr;
        for (const auto& c : constraints) {
            bool covered = false;
            for (int v : c)
                if (std::find(cur.begin(), cur.end(), v) != cur.end()) covered = true;
            if (!covered && (!pick || c.size() < pick->size())) pick = &c;
        }
        if (!pick) {
            best = cur;
            have_best = true;
            return;
        }
        for (int v : *pick) {
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
    std::sort(best.begin(), best.end());
    return best;
}

std::pair<int, std::set<std::string>> opt_implicit(const graph& g,
                                                   const std::vector<graph>& patterns,
                                                   const search_limits& limits) {
    graph h = strip_decorations(g);
    std::vector<graph> pats;
    for (const auto& p : patterns) pats.push_back(strip_decorations(p));

    std::vector<std::vector<int>> constraints;  // vertex indices of h
    int rounds = 0;
    while (true) {
        if (++rounds > 10000) throw resource_limit_error("opt_implicit: did not converge");
        std::vector<int> hs = constraints.empty() ? std::vector<int>{} : min_hitting_set(constraints);
        std::set<int> hs_set(hs.begin(), hs.end());
        std::vector<int> keep;
        for (int v = 0; v < h.n(); ++v)
            if (!hs_set.count(v)) keep.push_back(v);
        graph rest = induced(h, keep);

        std::optional<minor_model> model;
        const graph* found_pattern = nullptr;
        for (const auto& p : pats) {
            if (rest.n() <= limits.max_host_vertices && rest.n() <= 64)
                model = find_minor_model(p, rest, minor_flavor::plain, limits);
            else
                model = structured_is_minor(p, rest, limits);
            if (model) {
                found_pattern = &p;
                break;
            }
        }
        if (!model) {
            std::set<std::string> ids;
            for (int v : hs) ids.insert(h.ids[static_cast<size_t>(v)]);
            return {static_cast<int>(hs.size()), ids};
        }
        minor_model mm = minimize_model(*model, *found_pattern, rest, minor_flavor::plain);
        std::vector<int> constraint;
        for (int lv : mm.branch_union()) constraint.push_back(keep[static_cast<size_t>(lv)]);
        std::sort(constraint.begin(), constraint.end());
        constraints.push_back(std::move(constraint));
    }
}

bool hitting_q_implicit(const graph& g, const std::vector<graph>& family_f,
                        const std::vector<graph>& q, const search_limits& limits) {
    int opt_f = opt_implicit(g, family_f, limits).first;
    std::vector<graph> both = family_f;
    both.insert(both.end(), q.begin(), q.end());
    int opt_fq = opt_implicit(g, both, limits).first;
    return opt_f == opt_fq;
}

optsolst_result optsolst_simple(const graph& g_a, const graph& g_b, const graph& g_c,
                                const std::set<std::string>& r_b_keys,
                                const std::vector<graph>& family_f, const fragment_set& q, int t,
                                const solver_limits& limits) {
    glue_result ab = glue(g_a, g_b);
    glue_result abc = glue(ab.g, g_c);
    const graph& big = abc.g;

    std::set<std::string> boundary_ids;
    for (int v : big.boundary_vertices()) boundary_ids.insert(big.ids[static_cast<size_t>(v)]);

    // map glued ids back to g_b ids
    std::map<std::string, std::string> to_b;
    for (const auto& [old_b, mid] : ab.from_right) {
        auto it = abc.from_left.find(mid);
        if (it != abc.from_left.end()) to_b[it->second] = old_b;
    }

    optsolst_result res;
    res.glued = big;
    for (const auto& y : enumerate_optimal(big, family_f, limits)) {
        bool avoids = true;
        for (const auto& id : y.vertices)
            if (boundary_ids.count(id)) avoids = false;
        if (!avoids) continue;
        std::set<std::string> y_in_b;
        for (const auto& id : y.vertices) {
            auto it = to_b.find(id);
            if (it != to_b.end()) y_in_b.insert(it->second);
        }
        graph b_rest = remove_vertices_by_id(g_b, y_in_b);
        if (folio_qt(b_rest, q.members, t, limits.minor).keys() == r_b_keys)
            res.solutions.push_back(y.vertices);
    }
    return res;
}

std::vector<remainder_set::remainder> remainder_set::r_q() const {
    std::vector<remainder> out;
    for (const auto& r : all)
        if (r.leaves_q) out.push_back(r);
    return out;
}

std::vector<remainder_set::remainder> remainder_set::r_n() const {
    std::vector<remainder> out;
    for (const auto& r : all)
        if (!r.leaves_q) out.push_back(r);
    return out;
}

remainder_set remainders(const graph& g_ab, const std::vector<std::set<std::string>>& solutions,
                         const fragment_set& q, int t, const solver_limits& limits) {
    struct entry {
        std::set<std::string> keys;
        std::vector<graph> reps;
        std::vector<int> sols;
    };
    std::vector<entry> entries;
    for (size_t i = 0; i < solutions.size(); ++i) {
        graph rest = remove_vertices_by_id(g_ab, solutions[i]);
        graph_set f = folio_qt(rest, q.members, t, limits.minor);
        auto keys = f.keys();
        bool merged = false;
        for (auto& e : entries)
            if (e.keys == keys) {
                e.sols.push_back(static_cast<int>(i));
                merged = true;
                break;
            }
        if (!merged) entries.push_back({keys, f.list(), {static_cast<int>(i)}});
    }
    remainder_set out;
    for (const auto& e : entries) {
        bool minimal = true;
        for (const auto& other : entries) {
            if (&other == &e) continue;
            if (other.keys != e.keys &&
                std::includes(e.keys.begin(), e.keys.end(), other.keys.begin(), other.keys.end()))
                minimal = false;
        }
        if (!minimal) continue;
        remainder_set::remainder r;
        r.folio_keys = e.keys;
        r.reps = e.reps;
        r.solution_indices = e.sols;
        r.leaves_q = false;
        for (const auto& rep : e.reps) {
            graph fr = forget(rep, 0);
            for (const auto& m : q.members)
                if (is_minor_cached(m, fr, minor_flavor::labeled, limits.minor)) r.leaves_q = true;
        }
        out.all.push_back(std::move(r));
    }
    return out;
}

}  // namespace edfk
