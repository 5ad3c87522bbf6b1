#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "rwlab/decomposition.hpp"
#include "rwlab/graph.hpp"

namespace rwlab {

enum class Sense { Max, Min };

std::string sense_to_string(Sense s);
Sense sense_from_string(const std::string& s);

struct BundleMeta {
    std::string construction; // "is", "is-unweighted", "mim", "fvs", "wds", "separation"
    int k = 0;
    int m = 0;
    nlohmann::json extra = nlohmann::json::object();

    friend bool operator==(const BundleMeta& a, const BundleMeta& b) {
        return a.construction == b.construction && a.k == b.k && a.m == b.m && a.extra == b.extra;
    }
};

/// The unit of exchange between reductions, solvers and the CLI: a reduced
/// weighted graph, its threshold target and direction, a vertex order with
/// a certified width bound, and provenance metadata.
struct ReductionBundle {
    WeightedGraph instance;
    std::uint64_t target = 0;
    Sense sense = Sense::Max;
    LinearOrder order;
    int width_bound = 0;
    BundleMeta meta;

    friend bool operator==(const ReductionBundle&, const ReductionBundle&) = default;
};

/// Did the solved value meet the bundle's threshold in its sense?
bool meets_target(const ReductionBundle& b, std::uint64_t value);

nlohmann::json bundle_to_json(const ReductionBundle& b);
ReductionBundle bundle_from_json(const nlohmann::json& j);

/// Plain text interop format: `p edge n m`, one `e u v` line per edge and
/// one `w v x` line per vertex, all indices 1-based in canonical order.
std::string to_edge_list_text(const WeightedGraph& g);

/// True once linear_width(instance, order, cut-rank) fits under the bound.
bool verify_width_certificate(const ReductionBundle& b);

} // namespace rwlab
