#include "rwlab/gf2.hpp"

#include <string>
#include <unordered_set>

#include "rwlab/errors.hpp"

namespace rwlab {

GF2Matrix GF2Matrix::from_rows(std::vector<BitVec> rows, std::size_t n_cols) {
    for (const BitVec& r : rows) {
        std::size_t hi = r.find_first();
        for (std::size_t b = hi; b != BitVec::npos; b = r.find_next(b))
            if (b >= n_cols) throw InputError("row bit beyond n_cols");
    }
    GF2Matrix m;
    m.n_rows = rows.size();
    m.n_cols = n_cols;
    m.rows = std::move(rows);
    return m;
}

std::size_t gf2_rank(std::vector<BitVec> rows) {
    // (pivot column, reduced row) pairs accumulated so far
    std::vector<std::pair<std::size_t, BitVec>> pivots;
    for (BitVec& row : rows) {
        for (const auto& [col, prow] : pivots)
            if (row.test(col)) row ^= prow;
        std::size_t lead = row.find_first();
        if (lead != BitVec::npos) pivots.emplace_back(lead, std::move(row));
    }
    return pivots.size();
}

std::size_t gf2_rank(const GF2Matrix& m) { return gf2_rank(m.rows); }

namespace {

void check_disjoint(const Graph& g, std::span<const int> a, std::span<const int> b) {
    BitVec am;
    for (int v : a) {
        if (v < 0 || v >= g.n()) throw InputError("cut side vertex out of range");
        am.set(static_cast<std::size_t>(v));
    }
    for (int v : b) {
        if (v < 0 || v >= g.n()) throw InputError("cut side vertex out of range");
        if (am.test(static_cast<std::size_t>(v)))
            throw InputError("cut sides overlap at vertex " + g.label(v).to_string());
    }
}

} // namespace

GF2Matrix cut_matrix(const Graph& g, std::span<const int> a, std::span<const int> b) {
    check_disjoint(g, a, b);
    std::vector<BitVec> rows;
    rows.reserve(a.size());
    for (int u : a) {
        BitVec row;
        const BitVec& nbr = g.neighbors(u);
        for (std::size_t j = 0; j < b.size(); ++j)
            if (nbr.test(static_cast<std::size_t>(b[j]))) row.set(j);
        rows.push_back(std::move(row));
    }
    GF2Matrix m;
    m.n_rows = a.size();
    m.n_cols = b.size();
    m.rows = std::move(rows);
    return m;
}

std::size_t cut_rank(const Graph& g, std::span<const int> a, std::span<const int> b) {
    return gf2_rank(cut_matrix(g, a, b));
}

NeighborhoodCountResult neighborhood_closure_count(const Graph& g, std::span<const int> a,
                                                   std::span<const int> b, std::uint64_t cap) {
    check_disjoint(g, a, b);
    BitVec b_mask = BitVec::from_indices(std::vector<int>(b.begin(), b.end()));

    // Distinct single-vertex neighborhoods restricted to b; their unions
    // form exactly the achievable N(X) ∩ b.
    std::vector<BitVec> rows;
    {
        std::unordered_set<BitVec, BitVecHash> seen;
        for (int v : a) {
            BitVec row = g.neighbors(v);
            row &= b_mask;
            if (seen.insert(row).second) rows.push_back(std::move(row));
        }
    }

    std::unordered_set<BitVec, BitVecHash> closure;
    std::vector<BitVec> frontier;
    closure.insert(BitVec{});
    frontier.push_back(BitVec{});
    while (!frontier.empty()) {
        BitVec cur = std::move(frontier.back());
        frontier.pop_back();
        for (const BitVec& row : rows) {
            BitVec next = cur;
            next |= row;
            if (closure.insert(next).second) {
                if (closure.size() > cap) return {cap, true};
                frontier.push_back(std::move(next));
            }
        }
    }
    return {closure.size(), false};
}

std::uint64_t neighborhood_count(const Graph& g, std::span<const int> a, std::span<const int> b,
                                 std::size_t limit, std::uint64_t cap) {
    NeighborhoodCountResult r = neighborhood_closure_count(g, a, b, cap);
    if (r.saturated && a.size() > limit)
        throw ResourceLimitError("neighborhood count saturated at " + std::to_string(cap) +
                                 " for a cut with |a|=" + std::to_string(a.size()) +
                                 ", |b|=" + std::to_string(b.size()));
    if (r.saturated)
        throw ResourceLimitError("neighborhood closure exceeded cap " + std::to_string(cap));
    return r.count;
}

} // namespace rwlab
