#include "rwlab/graph.hpp"

#include <algorithm>
#include <cctype>

#include "rwlab/util.hpp"

namespace rwlab {

namespace {

const char* kind_tag(LabelKind k) {
    switch (k) {
        case LabelKind::A: return "a";
        case LabelKind::B: return "b";
        case LabelKind::BHat: return "bh";
        case LabelKind::Clause: return "c";
        case LabelKind::Aux: return "x";
        case LabelKind::Plain: return "v";
    }
    return "?";
}

} // namespace

std::string VertexLabel::to_string() const {
    std::string s = kind_tag(kind);
    if (kind == LabelKind::Plain) {
        s += std::to_string(copy);
    } else {
        s += "^" + std::to_string(copy) + "_" + std::to_string(mask);
    }
    if (twin > 0) s += "~" + std::to_string(twin);
    if (hat) s += "'";
    return s;
}

VertexLabel VertexLabel::from_string(const std::string& text) {
    auto fail = [&] { throw InputError("bad vertex label: '" + text + "'"); };
    VertexLabel l;
    std::size_t p = 0;
    auto starts = [&](const char* tag) {
        std::size_t len = std::string(tag).size();
        return text.compare(0, len, tag) == 0 &&
               (text.size() > len && (std::isdigit(text[len]) || text[len] == '^'));
    };
    if (starts("bh")) { l.kind = LabelKind::BHat; p = 2; }
    else if (starts("a")) { l.kind = LabelKind::A; p = 1; }
    else if (starts("b")) { l.kind = LabelKind::B; p = 1; }
    else if (starts("c")) { l.kind = LabelKind::Clause; p = 1; }
    else if (starts("x")) { l.kind = LabelKind::Aux; p = 1; }
    else if (starts("v")) { l.kind = LabelKind::Plain; p = 1; }
    else fail();

    auto read_int = [&]() -> long {
        std::size_t start = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == start) fail();
        return std::stol(text.substr(start, p - start));
    };

    if (l.kind == LabelKind::Plain) {
        l.copy = static_cast<std::int32_t>(read_int());
    } else {
        if (p >= text.size() || text[p] != '^') fail();
        ++p;
        l.copy = static_cast<std::int32_t>(read_int());
        if (p >= text.size() || text[p] != '_') fail();
        ++p;
        l.mask = static_cast<std::uint32_t>(read_int());
    }
    if (p < text.size() && text[p] == '~') {
        ++p;
        l.twin = static_cast<std::int32_t>(read_int());
    }
    if (p < text.size() && text[p] == '\'') {
        l.hat = true;
        ++p;
    }
    if (p != text.size()) fail();
    return l;
}

int Graph::add_vertex(const VertexLabel& label) {
    auto [it, inserted] = index_.emplace(label, n());
    if (!inserted) throw InputError("duplicate vertex label: " + label.to_string());
    labels_.push_back(label);
    adj_.emplace_back();
    return it->second;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop on vertex " + labels_[u].to_string());
    adj_[u].set(static_cast<std::size_t>(v));
    adj_[v].set(static_cast<std::size_t>(u));
}

void Graph::add_edge(const VertexLabel& u, const VertexLabel& v) {
    add_edge(index_of(u), index_of(v));
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(static_cast<std::size_t>(v));
}

const BitVec& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

const VertexLabel& Graph::label(int v) const {
    check_vertex(v);
    return labels_[v];
}

int Graph::index_of(const VertexLabel& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InputError("unknown vertex label: " + label.to_string());
    return it->second;
}

std::optional<int> Graph::find(const VertexLabel& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

BitVec Graph::neighborhood(const BitVec& u) const {
    BitVec out;
    for (std::size_t v = u.find_first(); v != BitVec::npos; v = u.find_next(v)) {
        check_vertex(static_cast<int>(v));
        out |= adj_[v];
    }
    return out.and_not(u);
}

std::vector<int> Graph::neighborhood(std::span<const int> u) const {
    BitVec mask;
    for (int v : u) {
        check_vertex(v);
        mask.set(static_cast<std::size_t>(v));
    }
    return neighborhood(mask).indices();
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u) {
        const BitVec& row = adj_[u];
        for (std::size_t v = row.find_first(); v != BitVec::npos; v = row.find_next(v)) {
            if (static_cast<int>(v) > u) out.emplace_back(u, static_cast<int>(v));
        }
    }
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.labels_ != b.labels_) return false;
    for (int v = 0; v < a.n(); ++v)
        if (a.adj_[v] != b.adj_[v]) return false;
    return true;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n()) throw InputError("vertex index out of range: " + std::to_string(v));
}

std::uint64_t WeightedGraph::total_weight() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : weights) total = checked_add(total, w);
    return total;
}

WeightedGraph add_false_twins(const WeightedGraph& g, const VertexLabel& v, int count) {
    if (count < 0) throw InputError("negative twin count");
    WeightedGraph out = g;
    int base = out.graph.index_of(v);
    BitVec base_nbrs = out.graph.neighbors(base); // copy; family members are never in it
    int next_twin = 1;
    while (out.graph.find({v.kind, v.copy, v.mask, v.twin + next_twin, v.hat}))
        ++next_twin;
    for (int c = 0; c < count; ++c) {
        VertexLabel tl{v.kind, v.copy, v.mask, v.twin + next_twin + c, v.hat};
        int t = out.graph.add_vertex(tl);
        for (std::size_t u = base_nbrs.find_first(); u != BitVec::npos; u = base_nbrs.find_next(u))
            out.graph.add_edge(t, static_cast<int>(u));
        out.weights.push_back(1);
    }
    return out;
}

Graph add_true_twin(const Graph& g, const VertexLabel& v) {
    Graph out = g;
    int base = out.index_of(v);
    VertexLabel hl = v;
    hl.hat = true;
    int t = out.add_vertex(hl);
    BitVec nbrs = g.neighbors(base);
    for (std::size_t u = nbrs.find_first(); u != BitVec::npos; u = nbrs.find_next(u))
        out.add_edge(t, static_cast<int>(u));
    out.add_edge(t, base);
    return out;
}

} // namespace rwlab
