#include "rwlab/sampling.hpp"

#include "rwlab/errors.hpp"

namespace rwlab {

Graph random_graph(int n, int percent, Rng& rng) {
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(VertexLabel::plain(v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng_below(rng, 100) < static_cast<std::uint64_t>(percent)) g.add_edge(u, v);
    return g;
}

WeightedGraph random_weighted_graph(int n, int percent, std::uint64_t max_weight, Rng& rng) {
    WeightedGraph wg;
    wg.graph = random_graph(n, percent, rng);
    for (int v = 0; v < n; ++v) wg.weights.push_back(1 + rng_below(rng, max_weight));
    return wg;
}

BranchTree random_branch_tree(int n, Rng& rng) {
    BranchTree t;
    if (n <= 0) return t;
    if (n == 1) {
        t.add_node(0);
        return t;
    }
    if (n == 2) {
        t.add_node(0);
        t.add_node(1);
        t.add_edge(0, 1);
        return t;
    }
    // grow by splitting a random existing edge with a fresh internal node
    t.add_node(0);
    t.add_node(1);
    t.add_edge(0, 1);
    for (int v = 2; v < n; ++v) {
        int e = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(t.edge_count())));
        auto [a, b] = t.edges[static_cast<std::size_t>(e)];
        int mid = t.add_node();
        int leaf = t.add_node(v);
        // rewire a-b into a-mid-b plus the new leaf
        t.edges[static_cast<std::size_t>(e)] = {a, mid};
        t.edges.emplace_back(mid, b);
        auto& adj_a = t.nodes[static_cast<std::size_t>(a)].adj;
        auto& adj_b = t.nodes[static_cast<std::size_t>(b)].adj;
        for (int& x : adj_a)
            if (x == b) x = mid;
        for (int& x : adj_b)
            if (x == a) x = mid;
        t.nodes[static_cast<std::size_t>(mid)].adj.push_back(a);
        t.nodes[static_cast<std::size_t>(mid)].adj.push_back(b);
        t.add_edge(mid, leaf);
    }
    return t;
}

CnfFormula random_formula(int k, int m, Rng& rng) {
    if (k < 1 || m < 1) throw InputError("random formula needs k >= 1, m >= 1");
    CnfFormula f;
    f.k = k;
    for (int c = 0; c < m; ++c) {
        std::vector<Literal> clause;
        for (int p = 0; p < 3; ++p) {
            Literal lit;
            lit.row = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(k)));
            lit.col = k + 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(k)));
            lit.positive = rng_below(rng, 2) == 0;
            clause.push_back(lit);
        }
        f.clauses.push_back(std::move(clause));
    }
    f.validate();
    return f;
}

std::vector<CnfFormula> all_k1_formulas(int m) {
    // clause type = number of positive literals among the 3 positions (0..3)
    auto clause_of_type = [](int positives) {
        std::vector<Literal> clause;
        for (int p = 0; p < 3; ++p) clause.push_back({1, 2, p < positives});
        return clause;
    };
    std::vector<CnfFormula> out;
    std::vector<int> types;
    auto emit = [&]() {
        CnfFormula f;
        f.k = 1;
        for (int t : types) f.clauses.push_back(clause_of_type(t));
        out.push_back(std::move(f));
    };
    // multisets: nondecreasing type sequences
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(types.size()) == m) {
            emit();
            return;
        }
        for (int t = start; t <= 3; ++t) {
            types.push_back(t);
            self(self, t);
            types.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace rwlab
