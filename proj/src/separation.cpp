#include "rwlab/separation.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <unordered_set>

#include "rwlab/errors.hpp"
#include "rwlab/formula.hpp"

namespace rwlab {

SeparationInstance build_separation_instance(int k, int guard) {
    if (k < 1) throw InputError("separation instance needs k >= 1");
    if (k > guard)
        throw ResourceLimitError("separation instance guarded at k <= " + std::to_string(guard) +
                                 " (|V| = k 2^k + k^2 2^(2k))");

    SeparationInstance inst;
    inst.k = k;
    Graph& g = inst.graph;
    std::uint32_t probe_count = 1u << (2 * k);

    for (int j = 1; j <= k; ++j) {
        auto block = row_block_masks(j, k);
        for (std::uint32_t s : block) inst.center.push_back(g.add_vertex(VertexLabel::a(0, s)));
        for (std::size_t x = 0; x < block.size(); ++x)
            for (std::size_t y = x + 1; y < block.size(); ++y)
                g.add_edge(VertexLabel::a(0, block[x]), VertexLabel::a(0, block[y]));
    }
    for (int copy = 1; copy <= k * k; ++copy) {
        std::vector<int> block;
        for (std::uint32_t t = 0; t < probe_count; ++t)
            block.push_back(g.add_vertex(VertexLabel::b(copy, t)));
        for (std::size_t x = 0; x < block.size(); ++x)
            for (std::size_t y = x + 1; y < block.size(); ++y)
                g.add_edge(block[x], block[y]);
        for (int a : inst.center) {
            std::uint32_t s = g.label(a).mask;
            for (std::uint32_t t = 0; t < probe_count; ++t)
                if (std::popcount(s & t) % 2 == 1) g.add_edge(a, block[t]);
        }
        inst.blocks.push_back(std::move(block));
    }

    inst.order = LinearOrder::identity(g.n());
    inst.width_bound = 2 * k + 1;
    return inst;
}

CutDimensionReport measure_cut_boolean_dimension(const Graph& g, std::span<const int> a,
                                                 std::span<const int> b,
                                                 std::uint64_t closure_cap,
                                                 std::uint64_t enum_cap) {
    CutDimensionReport report;
    report.rank = cut_rank(g, a, b);
    NeighborhoodCountResult full = neighborhood_closure_count(g, a, b, closure_cap);
    report.neighborhood_count = full.count;
    report.neighborhood_saturated = full.saturated;

    // Backtrack over independent subsets of a only: position p may join the
    // current set when none of its earlier neighbors did.
    BitVec b_mask = BitVec::from_indices(std::vector<int>(b.begin(), b.end()));
    std::size_t n = a.size();
    std::vector<BitVec> row(n);
    for (std::size_t p = 0; p < n; ++p) {
        row[p] = g.neighbors(a[p]);
        row[p] &= b_mask;
    }
    std::vector<BitVec> conflicts(n); // positions adjacent to position p
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            if (g.has_edge(a[p], a[q])) {
                conflicts[p].set(q);
                conflicts[q].set(p);
            }

    std::unordered_set<BitVec, BitVecHash> seen;
    std::uint64_t enumerated = 0;
    bool stop = false;

    // (next position, accumulated neighborhood, excluded positions)
    struct Frame {
        std::size_t next;
        BitVec nbhd;
        BitVec excluded;
    };
    std::vector<Frame> stack;
    stack.push_back({0, BitVec{}, BitVec{}});
    while (!stack.empty() && !stop) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (++enumerated > enum_cap) {
            stop = true;
            break;
        }
        seen.insert(f.nbhd);
        for (std::size_t p = f.next; p < n; ++p) {
            if (f.excluded.test(p)) continue;
            BitVec nbhd = f.nbhd;
            nbhd |= row[p];
            BitVec excluded = f.excluded;
            excluded |= conflicts[p];
            stack.push_back({p + 1, std::move(nbhd), std::move(excluded)});
        }
    }
    report.independent_count = seen.size();
    report.independent_saturated = stop;
    report.log2_neighborhoods =
        report.neighborhood_count ? std::log2(static_cast<double>(report.neighborhood_count)) : 0.0;
    report.log2_independent =
        report.independent_count ? std::log2(static_cast<double>(report.independent_count)) : 0.0;
    return report;
}

} // namespace rwlab
