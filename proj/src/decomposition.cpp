#include "rwlab/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "rwlab/errors.hpp"

namespace rwlab {

LinearOrder LinearOrder::identity(int n) {
    LinearOrder ord;
    ord.perm.resize(static_cast<std::size_t>(n));
    std::iota(ord.perm.begin(), ord.perm.end(), 0);
    return ord;
}

void LinearOrder::validate(int n) const {
    if (static_cast<int>(perm.size()) != n)
        throw InputError("order covers " + std::to_string(perm.size()) + " of " +
                         std::to_string(n) + " vertices");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw InputError("order is not a permutation of the vertex set");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

namespace {

struct MeasureEval {
    std::uint64_t value = 0;
    bool saturated = false;
};

MeasureEval eval_cut(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                     CutMeasure measure, const MeasureOptions& opts) {
    switch (measure) {
        case CutMeasure::CutRank:
            return {static_cast<std::uint64_t>(cut_rank(g, a, b)), false};
        case CutMeasure::NeighborhoodCount: {
            NeighborhoodCountResult r = neighborhood_closure_count(g, a, b, opts.closure_cap);
            return {r.count, r.saturated};
        }
    }
    throw InputError("unknown cut measure");
}

MeasureEval eval_bipartition(const Graph& g, const BitVec& side, CutMeasure measure,
                             const MeasureOptions& opts) {
    std::vector<int> a, b;
    for (int v = 0; v < g.n(); ++v) {
        if (side.test(static_cast<std::size_t>(v)))
            a.push_back(v);
        else
            b.push_back(v);
    }
    return eval_cut(g, a, b, measure, opts);
}

} // namespace

WidthResult linear_width(const Graph& g, const LinearOrder& ord, CutMeasure measure,
                         const MeasureOptions& opts) {
    ord.validate(g.n());
    WidthResult result;
    result.argmax_prefix = 0;
    std::vector<int> prefix, suffix(ord.perm.begin(), ord.perm.end());
    for (std::size_t len = 1; len + 1 <= ord.perm.size(); ++len) {
        prefix.push_back(ord.perm[len - 1]);
        suffix.erase(suffix.begin());
        MeasureEval e = eval_cut(g, prefix, suffix, measure, opts);
        result.saturated = result.saturated || e.saturated;
        if (e.value > result.width) {
            result.width = e.value;
            result.argmax_prefix = len;
        }
    }
    if (result.argmax_prefix == 0 && ord.perm.size() >= 2) result.argmax_prefix = 1;
    return result;
}

int BranchTree::add_node(int leaf_vertex) {
    nodes.push_back(Node{{}, leaf_vertex});
    return node_count() - 1;
}

void BranchTree::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= node_count() || b >= node_count() || a == b)
        throw InputError("bad branch tree edge");
    nodes[static_cast<std::size_t>(a)].adj.push_back(b);
    nodes[static_cast<std::size_t>(b)].adj.push_back(a);
    edges.emplace_back(a, b);
}

void BranchTree::validate(int n_vertices) const {
    if (edge_count() != node_count() - 1) throw InputError("branch tree is not a tree");
    std::vector<bool> seen(static_cast<std::size_t>(n_vertices), false);
    int leaves = 0;
    for (const Node& node : nodes) {
        if (node.leaf_vertex >= 0) {
            if (node.adj.size() > 1) throw InputError("leaf node with degree > 1");
            if (node.leaf_vertex >= n_vertices || seen[static_cast<std::size_t>(node.leaf_vertex)])
                throw InputError("leaf labels are not a bijection");
            seen[static_cast<std::size_t>(node.leaf_vertex)] = true;
            ++leaves;
        } else if (node.adj.size() != 3) {
            throw InputError("internal branch tree node of degree " +
                             std::to_string(node.adj.size()));
        }
    }
    if (leaves != n_vertices) throw InputError("leaf count does not match vertex count");
    // connectivity: walk from node 0
    if (node_count() > 0) {
        std::vector<bool> visited(static_cast<std::size_t>(node_count()), false);
        std::vector<int> stack{0};
        visited[0] = true;
        int reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++reached;
            for (int v : nodes[static_cast<std::size_t>(u)].adj)
                if (!visited[static_cast<std::size_t>(v)]) {
                    visited[static_cast<std::size_t>(v)] = true;
                    stack.push_back(v);
                }
        }
        if (reached != node_count()) throw InputError("branch tree is disconnected");
    }
}

BitVec BranchTree::side_of(int e) const {
    if (e < 0 || e >= edge_count()) throw InputError("branch tree edge out of range");
    auto [root, blocked] = edges[static_cast<std::size_t>(e)];
    BitVec side;
    std::vector<int> stack{root};
    std::vector<bool> visited(static_cast<std::size_t>(node_count()), false);
    visited[static_cast<std::size_t>(root)] = true;
    visited[static_cast<std::size_t>(blocked)] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        int leaf = nodes[static_cast<std::size_t>(u)].leaf_vertex;
        if (leaf >= 0) side.set(static_cast<std::size_t>(leaf));
        for (int v : nodes[static_cast<std::size_t>(u)].adj)
            if (!visited[static_cast<std::size_t>(v)]) {
                visited[static_cast<std::size_t>(v)] = true;
                stack.push_back(v);
            }
    }
    return side;
}

std::vector<std::pair<int, int>> BranchTree::side_counts(const BitVec& x) const {
    int total = static_cast<int>(x.count());
    std::vector<std::pair<int, int>> counts(static_cast<std::size_t>(edge_count()));
    for (int e = 0; e < edge_count(); ++e) {
        BitVec side = side_of(e);
        side &= x;
        int first = static_cast<int>(side.count());
        counts[static_cast<std::size_t>(e)] = {first, total - first};
    }
    return counts;
}

BranchTree caterpillar_from_order(const LinearOrder& ord) {
    BranchTree t;
    int n = static_cast<int>(ord.perm.size());
    if (n == 0) return t;
    if (n == 1) {
        t.add_node(ord.perm[0]);
        return t;
    }
    if (n == 2) {
        int a = t.add_node(ord.perm[0]);
        int b = t.add_node(ord.perm[1]);
        t.add_edge(a, b);
        return t;
    }
    // spine of n-2 internal nodes; leaves 1..n hang off it in order
    std::vector<int> spine;
    for (int i = 0; i < n - 2; ++i) spine.push_back(t.add_node());
    for (int i = 0; i + 1 < n - 2; ++i) t.add_edge(spine[static_cast<std::size_t>(i)],
                                                   spine[static_cast<std::size_t>(i + 1)]);
    int first = t.add_node(ord.perm[0]);
    t.add_edge(first, spine.front());
    for (int i = 1; i <= n - 2; ++i) {
        int leaf = t.add_node(ord.perm[static_cast<std::size_t>(i)]);
        t.add_edge(leaf, spine[static_cast<std::size_t>(i - 1)]);
    }
    int last = t.add_node(ord.perm[static_cast<std::size_t>(n - 1)]);
    t.add_edge(last, spine.back());
    return t;
}

WidthResult branch_width(const Graph& g, const BranchTree& t, CutMeasure measure,
                         const MeasureOptions& opts) {
    t.validate(g.n());
    WidthResult result;
    for (int e = 0; e < t.edge_count(); ++e) {
        MeasureEval ev = eval_bipartition(g, t.side_of(e), measure, opts);
        result.saturated = result.saturated || ev.saturated;
        result.width = std::max(result.width, ev.value);
    }
    return result;
}

int find_balanced_cut_edge(const BranchTree& t, std::span<const int> x) {
    if (x.size() < 2) throw InputError("balanced cut edge needs |x| >= 2");
    BitVec xm = BitVec::from_indices(std::vector<int>(x.begin(), x.end()));
    auto counts = t.side_counts(xm);

    for (int e = 0; e < t.edge_count(); ++e)
        if (counts[static_cast<std::size_t>(e)].first == counts[static_cast<std::size_t>(e)].second)
            return e;

    // Every edge is strictly oriented toward its x-richer side; walk to a sink.
    auto edge_between = [&](int u, int v) {
        for (int e = 0; e < t.edge_count(); ++e) {
            auto [a, b] = t.edges[static_cast<std::size_t>(e)];
            if ((a == u && b == v) || (a == v && b == u)) return e;
        }
        throw InputError("missing tree edge");
    };
    auto points_away = [&](int node, int e) {
        // true when edge e is directed from `node` toward the other endpoint
        auto [a, b] = t.edges[static_cast<std::size_t>(e)];
        auto [cf, cs] = counts[static_cast<std::size_t>(e)];
        int away_count = (a == node) ? cs : cf; // x on the far side
        int near_count = (a == node) ? cf : cs;
        return away_count > near_count;
    };

    int node = 0;
    while (true) {
        int next = -1;
        for (int nb : t.nodes[static_cast<std::size_t>(node)].adj) {
            int e = edge_between(node, nb);
            if (points_away(node, e)) {
                next = nb;
                break;
            }
        }
        if (next < 0) break; // sink
        node = next;
    }

    // Among the sink's incident edges take the far side richest in x.
    int best_edge = -1;
    int best_count = -1;
    for (int nb : t.nodes[static_cast<std::size_t>(node)].adj) {
        int e = edge_between(node, nb);
        auto [a, b] = t.edges[static_cast<std::size_t>(e)];
        auto [cf, cs] = counts[static_cast<std::size_t>(e)];
        int far = (a == node) ? cs : cf;
        if (far > best_count) {
            best_count = far;
            best_edge = e;
        }
    }
    return best_edge;
}

OptimalWidthResult optimal_linear_width(const Graph& g, CutMeasure measure,
                                        std::size_t max_vertices, const MeasureOptions& opts) {
    std::size_t n = static_cast<std::size_t>(g.n());
    if (n > max_vertices)
        throw ResourceLimitError("optimal linear width capped at " + std::to_string(max_vertices) +
                                 " vertices (graph has " + std::to_string(n) + ")");
    OptimalWidthResult result;
    if (n == 0) return result;

    std::size_t states = std::size_t{1} << n;
    constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> best(states, kInf);
    std::vector<int> last(states, -1);
    best[0] = 0;

    auto cut_value = [&](std::uint64_t set) -> std::uint64_t {
        std::vector<int> a, b;
        for (std::size_t v = 0; v < n; ++v)
            ((set >> v) & 1 ? a : b).push_back(static_cast<int>(v));
        return eval_cut(g, a, b, measure, opts).value;
    };

    std::vector<std::uint64_t> cut(states, 0);
    for (std::uint64_t s = 1; s + 1 < states; ++s) cut[s] = cut_value(s);

    for (std::uint64_t s = 1; s < states; ++s) {
        std::uint64_t through = kInf;
        int pick = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (((s >> v) & 1) == 0) continue;
            std::uint64_t prev = best[s & ~(std::uint64_t{1} << v)];
            if (prev < through) {
                through = prev;
                pick = static_cast<int>(v);
            }
        }
        best[s] = std::max(through, cut[s]);
        last[s] = pick;
    }

    result.width = best[states - 1];
    std::uint64_t s = states - 1;
    std::vector<int> rev;
    while (s != 0) {
        int v = last[s];
        rev.push_back(v);
        s &= ~(std::uint64_t{1} << v);
    }
    result.order.perm.assign(rev.rbegin(), rev.rend());
    return result;
}

} // namespace rwlab
