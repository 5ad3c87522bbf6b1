#include "rwlab/bundle.hpp"

#include <sstream>

#include "rwlab/errors.hpp"

namespace rwlab {

using nlohmann::json;

std::string sense_to_string(Sense s) { return s == Sense::Max ? "max" : "min"; }

Sense sense_from_string(const std::string& s) {
    if (s == "max") return Sense::Max;
    if (s == "min") return Sense::Min;
    throw InputError("bad sense '" + s + "' (want \"max\" or \"min\")");
}

bool meets_target(const ReductionBundle& b, std::uint64_t value) {
    return b.sense == Sense::Max ? value >= b.target : value <= b.target;
}

json bundle_to_json(const ReductionBundle& b) {
    json meta = b.meta.extra;
    meta["construction"] = b.meta.construction;
    meta["k"] = b.meta.k;
    meta["m"] = b.meta.m;
    meta["target"] = b.target;
    meta["sense"] = sense_to_string(b.sense);

    json vertices = json::array();
    for (int v = 0; v < b.instance.graph.n(); ++v)
        vertices.push_back({{"label", b.instance.graph.label(v).to_string()},
                            {"weight", b.instance.weight(v)}});

    json edges = json::array();
    for (auto [u, v] : b.instance.graph.edges()) edges.push_back({u, v});

    return json{{"meta", std::move(meta)},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)},
                {"order", b.order.perm},
                {"width_bound", b.width_bound}};
}

ReductionBundle bundle_from_json(const json& j) {
    try {
        ReductionBundle b;
        const json& meta = j.at("meta");
        b.meta.construction = meta.at("construction").get<std::string>();
        b.meta.k = meta.at("k").get<int>();
        b.meta.m = meta.at("m").get<int>();
        b.target = meta.at("target").get<std::uint64_t>();
        b.sense = sense_from_string(meta.at("sense").get<std::string>());
        b.meta.extra = meta;
        for (const char* key : {"construction", "k", "m", "target", "sense"})
            b.meta.extra.erase(key);

        for (const json& vj : j.at("vertices")) {
            b.instance.graph.add_vertex(VertexLabel::from_string(vj.at("label").get<std::string>()));
            b.instance.weights.push_back(vj.at("weight").get<std::uint64_t>());
        }
        for (const json& ej : j.at("edges")) {
            if (!ej.is_array() || ej.size() != 2) throw InputError("bad edge entry");
            b.instance.graph.add_edge(ej.at(0).get<int>(), ej.at(1).get<int>());
        }
        b.order.perm = j.at("order").get<std::vector<int>>();
        b.order.validate(b.instance.graph.n());
        b.width_bound = j.at("width_bound").get<int>();
        return b;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad bundle JSON: ") + e.what());
    }
}

std::string to_edge_list_text(const WeightedGraph& g) {
    std::ostringstream out;
    auto edges = g.graph.edges();
    out << "p edge " << g.graph.n() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    for (int v = 0; v < g.graph.n(); ++v) out << "w " << (v + 1) << " " << g.weight(v) << "\n";
    return out.str();
}

bool verify_width_certificate(const ReductionBundle& b) {
    WidthResult w = linear_width(b.instance.graph, b.order, CutMeasure::CutRank);
    return w.width <= static_cast<std::uint64_t>(b.width_bound);
}

} // namespace rwlab
