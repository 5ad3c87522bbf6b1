#include "rwlab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "rwlab/errors.hpp"
#include "rwlab/util.hpp"

namespace rwlab {

namespace {

using u64 = std::uint64_t;

constexpr u64 kInf = std::numeric_limits<u64>::max();

int ctz(u64 x) { return std::countr_zero(x); }

/// Word-sized view of a graph for the exact solvers (n <= 64).
struct Dense {
    int n = 0;
    u64 all = 0;
    std::vector<u64> adj;    // open neighborhoods
    std::vector<u64> closed; // N[v]
    std::vector<u64> w;
};

Dense densify(const Graph& g, const std::vector<u64>* weights, int cap, const char* what) {
    if (g.n() > cap)
        throw ResourceLimitError(std::string(what) + " solver capped at " + std::to_string(cap) +
                                 " vertices (instance has " + std::to_string(g.n()) +
                                 "); raise the cap to force the run");
    if (g.n() > 64) throw ResourceLimitError(std::string(what) + " solver limited to 64 vertices");
    Dense d;
    d.n = g.n();
    d.all = (d.n == 64) ? ~u64{0} : ((u64{1} << d.n) - 1);
    d.adj.resize(static_cast<std::size_t>(d.n));
    d.closed.resize(static_cast<std::size_t>(d.n));
    d.w.assign(static_cast<std::size_t>(d.n), 1);
    for (int v = 0; v < d.n; ++v) {
        u64 row = 0;
        const BitVec& nbr = g.neighbors(v);
        for (std::size_t u = nbr.find_first(); u != BitVec::npos; u = nbr.find_next(u))
            row |= u64{1} << u;
        d.adj[static_cast<std::size_t>(v)] = row;
        d.closed[static_cast<std::size_t>(v)] = row | (u64{1} << v);
        if (weights) d.w[static_cast<std::size_t>(v)] = (*weights)[static_cast<std::size_t>(v)];
    }
    return d;
}

std::vector<int> mask_to_indices(u64 mask) {
    std::vector<int> out;
    while (mask) {
        int v = ctz(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// maximum-weight independent set

struct MwisSolver {
    const Dense& d;
    u64 best = 0;
    u64 best_set = 0;

    explicit MwisSolver(const Dense& dense) : d(dense) {}

    // One clique can contribute at most its heaviest vertex.
    u64 cover_bound(u64 p) const {
        u64 total = 0;
        u64 rem = p;
        while (rem) {
            int v = ctz(rem);
            u64 heaviest = d.w[static_cast<std::size_t>(v)];
            u64 clique = u64{1} << v;
            u64 cand = rem & d.adj[static_cast<std::size_t>(v)];
            while (cand) {
                int u = ctz(cand);
                clique |= u64{1} << u;
                heaviest = std::max(heaviest, d.w[static_cast<std::size_t>(u)]);
                cand &= d.adj[static_cast<std::size_t>(u)];
            }
            total += heaviest;
            rem &= ~clique;
        }
        return total;
    }

    int pick(u64 p) const {
        int chosen = -1;
        u64 wbest = 0;
        int dbest = -1;
        u64 rem = p;
        while (rem) {
            int v = ctz(rem);
            rem &= rem - 1;
            u64 wv = d.w[static_cast<std::size_t>(v)];
            int dv = std::popcount(d.adj[static_cast<std::size_t>(v)] & p);
            if (chosen < 0 || wv > wbest || (wv == wbest && dv > dbest)) {
                chosen = v;
                wbest = wv;
                dbest = dv;
            }
        }
        return chosen;
    }

    void rec(u64 p, u64 cur, u64 cur_set) {
        if (cur > best) {
            best = cur;
            best_set = cur_set;
        }
        if (!p) return;
        if (cur + cover_bound(p) <= best) return;
        int v = pick(p);
        rec(p & ~d.closed[static_cast<std::size_t>(v)], cur + d.w[static_cast<std::size_t>(v)],
            cur_set | (u64{1} << v));
        rec(p & ~(u64{1} << v), cur, cur_set);
    }
};

// ---------------------------------------------------------------------------
// minimum-weight dominating set

struct MwdsSolver {
    const Dense& d;
    u64 best = kInf;
    u64 best_set = 0;

    explicit MwdsSolver(const Dense& dense) : d(dense) {}

    u64 min_weight_in(u64 mask) const {
        u64 m = kInf;
        while (mask) {
            int v = ctz(mask);
            mask &= mask - 1;
            m = std::min(m, d.w[static_cast<std::size_t>(v)]);
        }
        return m;
    }

    // Undominated vertices with pairwise disjoint closed neighborhoods need
    // pairwise distinct dominators.
    u64 lower_bound(u64 dominated, u64 banned) const {
        u64 lb = 0;
        u64 marked = 0;
        u64 rem = d.all & ~dominated;
        while (rem) {
            int v = ctz(rem);
            rem &= rem - 1;
            u64 cl = d.closed[static_cast<std::size_t>(v)];
            if (cl & marked) continue;
            u64 avail = cl & ~banned;
            if (!avail) return kInf; // v can never be dominated
            lb += min_weight_in(avail);
            marked |= cl;
        }
        return lb;
    }

    int pick_undominated(u64 dominated, u64 banned) const {
        int chosen = -1;
        int fewest = std::numeric_limits<int>::max();
        u64 rem = d.all & ~dominated;
        while (rem) {
            int v = ctz(rem);
            rem &= rem - 1;
            int options = std::popcount(d.closed[static_cast<std::size_t>(v)] & ~banned);
            if (options < fewest) {
                fewest = options;
                chosen = v;
            }
        }
        return chosen;
    }

    void rec(u64 chosen, u64 dominated, u64 banned, u64 cur) {
        if (cur >= best) return;
        if (dominated == d.all) {
            best = cur;
            best_set = chosen;
            return;
        }
        u64 lb = lower_bound(dominated, banned);
        if (lb == kInf || cur + lb >= best) return;
        int u = pick_undominated(dominated, banned);
        u64 cands = d.closed[static_cast<std::size_t>(u)] & ~banned;
        u64 tried = 0;
        while (cands) {
            int v = ctz(cands);
            cands &= cands - 1;
            rec(chosen | (u64{1} << v), dominated | d.closed[static_cast<std::size_t>(v)],
                banned | tried, cur + d.w[static_cast<std::size_t>(v)]);
            tried |= u64{1} << v;
        }
    }

    u64 greedy_start() {
        u64 chosen = 0, dominated = 0, cur = 0;
        while (dominated != d.all) {
            int pick = -1;
            u64 gain_best = 0;
            for (int v = 0; v < d.n; ++v) {
                u64 gain = static_cast<u64>(
                    std::popcount(d.closed[static_cast<std::size_t>(v)] & ~dominated));
                if (gain > gain_best) {
                    gain_best = gain;
                    pick = v;
                }
            }
            chosen |= u64{1} << pick;
            dominated |= d.closed[static_cast<std::size_t>(pick)];
            cur = checked_add(cur, d.w[static_cast<std::size_t>(pick)]);
        }
        best = cur;
        best_set = chosen;
        return cur;
    }
};

// ---------------------------------------------------------------------------
// maximum induced matching

struct MimSolver {
    const Dense& d;
    struct E {
        int u, v;
        u64 kill; // closed[u] | closed[v]
    };
    std::vector<E> edges;
    u64 best = 0;
    std::vector<int> best_edge_ids;
    std::vector<int> cur_edge_ids;

    explicit MimSolver(const Dense& dense) : d(dense) {
        for (int u = 0; u < d.n; ++u) {
            u64 row = d.adj[static_cast<std::size_t>(u)];
            while (row) {
                int v = ctz(row);
                row &= row - 1;
                if (v > u)
                    edges.push_back(
                        {u, v, d.closed[static_cast<std::size_t>(u)] | d.closed[static_cast<std::size_t>(v)]});
            }
        }
        std::stable_sort(edges.begin(), edges.end(), [&](const E& a, const E& b) {
            int da = std::popcount(a.kill);
            int db = std::popcount(b.kill);
            if (da != db) return da < db;
            if (a.u != b.u) return a.u < b.u;
            return a.v < b.v;
        });
    }

    u64 support_of(std::size_t idx, u64 blocked) const {
        u64 support = 0;
        for (std::size_t i = idx; i < edges.size(); ++i) {
            const E& e = edges[i];
            u64 ends = (u64{1} << e.u) | (u64{1} << e.v);
            if (ends & blocked) continue;
            support |= ends;
        }
        return support;
    }

    // Any clique holds at most one matched pair, so a clique cover of the
    // support bounds the matching size. A maximal matching m' bounds it by
    // 2|m'| as well; take the smaller.
    u64 bound(std::size_t idx, u64 blocked) const {
        u64 support = support_of(idx, blocked);
        u64 cliques = 0;
        u64 rem = support;
        while (rem) {
            int v = ctz(rem);
            u64 clique = u64{1} << v;
            u64 cand = rem & d.adj[static_cast<std::size_t>(v)];
            while (cand) {
                int u = ctz(cand);
                clique |= u64{1} << u;
                cand &= d.adj[static_cast<std::size_t>(u)];
            }
            ++cliques;
            rem &= ~clique;
        }
        u64 matched = 0;
        u64 taken = 0;
        for (std::size_t i = idx; i < edges.size(); ++i) {
            const E& e = edges[i];
            u64 ends = (u64{1} << e.u) | (u64{1} << e.v);
            if (ends & (blocked | taken)) continue;
            taken |= ends;
            ++matched;
        }
        return std::min(cliques, 2 * matched);
    }

    void rec(std::size_t idx, u64 blocked, u64 count) {
        if (count > best) {
            best = count;
            best_edge_ids = cur_edge_ids;
        }
        if (idx >= edges.size()) return;
        if (count + bound(idx, blocked) <= best) return;
        for (std::size_t i = idx; i < edges.size(); ++i) {
            const E& e = edges[i];
            u64 ends = (u64{1} << e.u) | (u64{1} << e.v);
            if (ends & blocked) continue;
            cur_edge_ids.push_back(static_cast<int>(i));
            rec(i + 1, blocked | e.kill, count + 1);
            cur_edge_ids.pop_back();
        }
    }
};

// ---------------------------------------------------------------------------
// maximum induced forest / minimum feedback vertex set

struct FvsSolver {
    const Dense& d;
    u64 best = kInf; // number of deleted vertices
    u64 best_deleted = 0;

    explicit FvsSolver(const Dense& dense) : d(dense) {}

    u64 alive_adj(int v, u64 alive) const { return d.adj[static_cast<std::size_t>(v)] & alive; }

    // Remove vertices that lie on no cycle of g[alive].
    u64 strip(u64 alive) const {
        bool changed = true;
        while (changed) {
            changed = false;
            u64 rem = alive;
            while (rem) {
                int v = ctz(rem);
                rem &= rem - 1;
                if (std::popcount(alive_adj(v, alive)) <= 1) {
                    alive &= ~(u64{1} << v);
                    changed = true;
                }
            }
        }
        return alive;
    }

    // Shortest cycle in g[alive] (alive pre-stripped, min degree >= 2).
    std::vector<int> shortest_cycle(u64 alive) const {
        // triangles first
        u64 rem = alive;
        while (rem) {
            int v = ctz(rem);
            rem &= rem - 1;
            u64 nb = alive_adj(v, alive);
            u64 nb2 = nb;
            while (nb2) {
                int u = ctz(nb2);
                nb2 &= nb2 - 1;
                if (u <= v) continue;
                u64 common = nb & alive_adj(u, alive);
                if (common) return {v, u, ctz(common)};
            }
        }
        // BFS girth
        std::vector<int> best_cycle;
        u64 rem2 = alive;
        while (rem2) {
            int start = ctz(rem2);
            rem2 &= rem2 - 1;
            std::vector<int> parent(static_cast<std::size_t>(d.n), -2);
            std::vector<int> depth(static_cast<std::size_t>(d.n), 0);
            std::vector<int> queue{start};
            parent[static_cast<std::size_t>(start)] = -1;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                u64 nb = alive_adj(v, alive);
                while (nb) {
                    int u = ctz(nb);
                    nb &= nb - 1;
                    if (u == parent[static_cast<std::size_t>(v)]) continue;
                    if (parent[static_cast<std::size_t>(u)] != -2) {
                        // cycle via v..root..u; reconstruct both stems
                        std::vector<int> path_v, path_u;
                        for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)])
                            path_v.push_back(x);
                        for (int x = u; x != -1; x = parent[static_cast<std::size_t>(x)])
                            path_u.push_back(x);
                        // drop the shared tail
                        while (path_v.size() > 1 && path_u.size() > 1 &&
                               path_v[path_v.size() - 2] == path_u[path_u.size() - 2]) {
                            path_v.pop_back();
                            path_u.pop_back();
                        }
                        std::vector<int> cycle(path_v.begin(), path_v.end());
                        for (std::size_t i = path_u.size() - 1; i-- > 0;)
                            cycle.push_back(path_u[i]);
                        if (best_cycle.empty() || cycle.size() < best_cycle.size())
                            best_cycle = std::move(cycle);
                        continue;
                    }
                    parent[static_cast<std::size_t>(u)] = v;
                    depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(u);
                }
            }
            if (best_cycle.size() == 3) break;
        }
        return best_cycle;
    }

    // Disjoint cliques: a forest keeps at most 2 vertices of a clique.
    u64 lower_bound(u64 alive) const {
        u64 lb = 0;
        u64 rem = strip(alive);
        while (rem) {
            int v = ctz(rem);
            u64 clique = u64{1} << v;
            int size = 1;
            u64 cand = rem & d.adj[static_cast<std::size_t>(v)];
            while (cand) {
                int u = ctz(cand);
                clique |= u64{1} << u;
                ++size;
                cand &= d.adj[static_cast<std::size_t>(u)];
            }
            if (size >= 3) lb += static_cast<u64>(size - 2);
            rem &= ~clique;
        }
        return lb;
    }

    void rec(u64 alive, u64 kept, u64 deleted_mask, u64 deleted) {
        if (deleted >= best) return;
        u64 core = strip(alive);
        if (!core) {
            best = deleted;
            best_deleted = deleted_mask;
            return;
        }
        if (deleted + std::max<u64>(lower_bound(core), 1) >= best) return;
        std::vector<int> cycle = shortest_cycle(core);
        u64 protect = kept;
        for (int v : cycle) {
            u64 bit = u64{1} << v;
            if (protect & bit) continue;
            rec(alive & ~bit, protect, deleted_mask | bit, deleted + 1);
            protect |= bit;
        }
    }

    void seed_greedy() {
        u64 alive = d.all;
        u64 deleted_mask = 0;
        u64 deleted = 0;
        while (true) {
            u64 core = strip(alive);
            if (!core) break;
            int pick = -1, deg_best = -1;
            u64 rem = core;
            while (rem) {
                int v = ctz(rem);
                rem &= rem - 1;
                int dv = std::popcount(alive_adj(v, core));
                if (dv > deg_best) {
                    deg_best = dv;
                    pick = v;
                }
            }
            alive &= ~(u64{1} << pick);
            deleted_mask |= u64{1} << pick;
            ++deleted;
        }
        best = deleted;
        best_deleted = deleted_mask;
    }
};

} // namespace

// ---------------------------------------------------------------------------

SatResult sat_enumerate(const CnfFormula& f, int max_vars) {
    f.validate();
    int n = f.var_count();
    if (n > max_vars)
        throw ResourceLimitError("SAT oracle capped at " + std::to_string(max_vars) +
                                 " variables (formula has " + std::to_string(n) + ")");
    SatResult result;
    for (u64 counter = 0; counter < (u64{1} << n); ++counter) {
        // counter bit (n-1-c) drives cell c: ascending counter = lexicographic
        // order on (cell 0, cell 1, ...) with false < true
        Assignment f_try;
        f_try.k = f.k;
        for (int c = 0; c < n; ++c)
            if ((counter >> (n - 1 - c)) & 1) f_try.bits |= 1u << c;
        if (f_try.satisfies(f)) {
            ++result.model_count;
            if (!result.satisfiable) {
                result.satisfiable = true;
                result.model = f_try;
            }
        }
    }
    return result;
}

SolveResult max_weight_independent_set(const WeightedGraph& g, int cap) {
    Dense d = densify(g.graph, &g.weights, cap, "independent set");
    g.total_weight(); // overflow check up front
    MwisSolver solver(d);
    solver.rec(d.all, 0, 0);
    SolveResult out;
    out.value = solver.best;
    out.witness = mask_to_indices(solver.best_set);
    if (!is_independent_set(g.graph, out.witness))
        throw InputError("internal: independent-set witness failed verification");
    return out;
}

SolveResult min_weight_dominating_set(const WeightedGraph& g, int cap) {
    Dense d = densify(g.graph, &g.weights, cap, "dominating set");
    SolveResult out;
    if (d.n == 0) return out;
    g.total_weight();
    MwdsSolver solver(d);
    solver.greedy_start();
    solver.rec(0, 0, 0, 0);
    out.value = solver.best;
    out.witness = mask_to_indices(solver.best_set);
    if (!is_dominating_set(g.graph, out.witness))
        throw InputError("internal: dominating-set witness failed verification");
    return out;
}

MatchingResult max_induced_matching(const Graph& g, int cap) {
    Dense d = densify(g, nullptr, cap, "induced matching");
    MimSolver solver(d);
    solver.rec(0, 0, 0);
    MatchingResult out;
    out.size = solver.best;
    for (int id : solver.best_edge_ids) {
        const auto& e = solver.edges[static_cast<std::size_t>(id)];
        out.edges.emplace_back(e.u, e.v);
    }
    std::sort(out.edges.begin(), out.edges.end());
    if (!is_induced_matching(g, out.edges))
        throw InputError("internal: induced-matching witness failed verification");
    return out;
}

SolveResult max_induced_forest(const Graph& g, int cap) {
    Dense d = densify(g, nullptr, cap, "induced forest");
    SolveResult out;
    if (d.n == 0) return out;
    FvsSolver solver(d);
    solver.seed_greedy();
    solver.rec(d.all, 0, 0, 0);
    u64 forest_mask = d.all & ~solver.best_deleted;
    out.value = static_cast<u64>(std::popcount(forest_mask));
    out.witness = mask_to_indices(forest_mask);
    if (!induces_forest(g, out.witness))
        throw InputError("internal: induced-forest witness failed verification");
    return out;
}

bool is_independent_set(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) return false;
    return true;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& vs) {
    BitVec dominated;
    for (int v : vs) {
        dominated.set(static_cast<std::size_t>(v));
        dominated |= g.neighbors(v);
    }
    for (int v = 0; v < g.n(); ++v)
        if (!dominated.test(static_cast<std::size_t>(v))) return false;
    return true;
}

bool is_induced_matching(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> support;
    for (auto [u, v] : edges) {
        if (!g.has_edge(u, v)) return false;
        support.push_back(u);
        support.push_back(v);
    }
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end()) return false;
    // no edge of g may join two support vertices beyond the matching itself
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& [a, b] = edges[i];
            const auto& [c, e] = edges[j];
            if (g.has_edge(a, c) || g.has_edge(a, e) || g.has_edge(b, c) || g.has_edge(b, e))
                return false;
        }
    return true;
}

bool induces_forest(const Graph& g, const std::vector<int>& vs) {
    // union-find over the induced subgraph
    std::vector<int> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.has_edge(vs[i], vs[j])) continue;
            int a = find(static_cast<int>(i));
            int b = find(static_cast<int>(j));
            if (a == b) return false;
            parent[static_cast<std::size_t>(a)] = b;
        }
    return true;
}

} // namespace rwlab
