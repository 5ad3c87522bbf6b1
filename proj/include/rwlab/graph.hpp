#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "rwlab/bitvec.hpp"
#include "rwlab/errors.hpp"

namespace rwlab {

/// Structured vertex identity. Vertices created by a gadget construction
/// remember which block they came from; `twin` counts false-twin copies and
/// `hat` marks the true-twin duplicate.
enum class LabelKind : std::uint8_t {
    A,      // selector-side vertex a^{copy}_{mask}
    B,      // probe-side vertex b^{copy}_{mask}
    BHat,   // matched probe copy bh^{copy}_{mask}
    Clause, // clause-gadget vertex c^{copy}_{pos}
    Aux,    // block-closing clique vertex x^{copy}_{j}
    Plain,  // unstructured vertex v{id}
};

struct VertexLabel {
    LabelKind kind = LabelKind::Plain;
    std::int32_t copy = 0;
    std::uint32_t mask = 0; // subset mask, clause position, or aux block index
    std::int32_t twin = 0;  // false-twin copy number, 0 for the original
    bool hat = false;       // true-twin duplicate

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;

    friend bool operator<(const VertexLabel& a, const VertexLabel& b) {
        return std::tie(a.kind, a.copy, a.mask, a.twin, a.hat) <
               std::tie(b.kind, b.copy, b.mask, b.twin, b.hat);
    }

    std::string to_string() const;
    static VertexLabel from_string(const std::string& s);

    static VertexLabel plain(int id) { return {LabelKind::Plain, id, 0, 0, false}; }
    static VertexLabel a(int copy, std::uint32_t mask) { return {LabelKind::A, copy, mask, 0, false}; }
    static VertexLabel b(int copy, std::uint32_t mask) { return {LabelKind::B, copy, mask, 0, false}; }
    static VertexLabel b_hat(int copy, std::uint32_t mask) { return {LabelKind::BHat, copy, mask, 0, false}; }
    static VertexLabel clause(int copy, std::uint32_t pos) { return {LabelKind::Clause, copy, pos, 0, false}; }
    static VertexLabel aux(int copy, std::uint32_t j) { return {LabelKind::Aux, copy, j, 0, false}; }
};

struct VertexLabelHash {
    std::size_t operator()(const VertexLabel& l) const {
        std::uint64_t h = static_cast<std::uint64_t>(l.kind);
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(l.copy);
        h = h * 0x9e3779b97f4a7c15ULL + l.mask;
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(l.twin);
        h = h * 0x9e3779b97f4a7c15ULL + (l.hat ? 1 : 0);
        return static_cast<std::size_t>(h);
    }
};

/// Undirected simple graph with stable structured labels and bitset
/// adjacency rows. Immutable once a construction finishes building it.
class Graph {
public:
    int add_vertex(const VertexLabel& label);
    void add_edge(int u, int v);
    void add_edge(const VertexLabel& u, const VertexLabel& v);

    int n() const { return static_cast<int>(labels_.size()); }
    std::size_t edge_count() const;
    bool has_edge(int u, int v) const;
    const BitVec& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).count()); }
    const VertexLabel& label(int v) const;
    const std::vector<VertexLabel>& labels() const { return labels_; }

    int index_of(const VertexLabel& label) const; // throws InputError when unknown
    std::optional<int> find(const VertexLabel& label) const;

    /// N(U): union of neighborhoods minus U itself.
    BitVec neighborhood(const BitVec& u) const;
    std::vector<int> neighborhood(std::span<const int> u) const;

    /// Edge list with u < v, sorted; the canonical serialized form.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_vertex(int v) const;

    std::vector<VertexLabel> labels_;
    std::vector<BitVec> adj_;
    std::unordered_map<VertexLabel, int, VertexLabelHash> index_;
};

struct WeightedGraph {
    Graph graph;
    std::vector<std::uint64_t> weights; // by vertex index

    std::uint64_t weight(int v) const { return weights.at(static_cast<std::size_t>(v)); }
    std::uint64_t total_weight() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) = default;
};

/// Appends `count` false twins of v: same open neighborhood, no edges
/// inside the twin family, each with weight 1.
WeightedGraph add_false_twins(const WeightedGraph& g, const VertexLabel& v, int count);

/// Appends the true twin of v: adjacent to v and to everything v sees.
Graph add_true_twin(const Graph& g, const VertexLabel& v);

} // namespace rwlab
