#include "rwlab/universal_cut.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "rwlab/errors.hpp"
#include "rwlab/parallel.hpp"

namespace rwlab {

std::vector<int> UniversalCut::a_side() const {
    std::vector<int> out(static_cast<std::size_t>(side_size()));
    for (int i = 0; i < side_size(); ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
}

std::vector<int> UniversalCut::b_side() const {
    std::vector<int> out(static_cast<std::size_t>(side_size()));
    for (int i = 0; i < side_size(); ++i) out[static_cast<std::size_t>(i)] = side_size() + i;
    return out;
}

std::vector<int> UniversalCut::a_of(const Collection& s) const {
    std::vector<int> out;
    out.reserve(s.members.size());
    for (std::uint32_t m : s.members) out.push_back(a_index(m));
    return out;
}

UniversalCut build_universal_cut(int k) {
    if (k < 1) throw InputError("universal cut needs k >= 1");
    if (k > 20) throw ResourceLimitError("universal cut side 2^k too large for k=" + std::to_string(k));
    UniversalCut cut;
    cut.k = k;
    std::uint32_t side = 1u << k;
    for (std::uint32_t s = 0; s < side; ++s) cut.graph.add_vertex(VertexLabel::a(0, s));
    for (std::uint32_t t = 0; t < side; ++t) cut.graph.add_vertex(VertexLabel::b(0, t));
    for (std::uint32_t s = 0; s < side; ++s)
        for (std::uint32_t t = 0; t < side; ++t)
            if (std::popcount(s & t) % 2 == 1)
                cut.graph.add_edge(cut.a_index(s), cut.b_index(t));
    return cut;
}

std::vector<Collection> extend_collection(const Collection& s) {
    std::uint32_t new_bit = 1u << s.ground;
    std::vector<Collection> out;
    out.reserve((std::size_t{1} << s.size()) + 1);

    Collection grown;
    grown.ground = s.ground + 1;
    grown.members = s.members;
    grown.members.push_back(new_bit);
    grown.normalize();
    out.push_back(std::move(grown));

    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << s.size()); ++choice) {
        Collection c;
        c.ground = s.ground + 1;
        c.members.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::uint32_t m = s.members[i];
            if ((choice >> i) & 1) m |= new_bit;
            c.members.push_back(m);
        }
        c.normalize();
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Collection> enumerate_family(int k, int guard) {
    if (k < 1) throw InputError("family enumeration needs k >= 1");
    if (k > guard)
        throw ResourceLimitError("family enumeration guarded at k <= " + std::to_string(guard) +
                                 " (requested k=" + std::to_string(k) + ")");
    std::vector<Collection> family;
    family.push_back(Collection{1, {}});
    family.push_back(Collection{1, {1u}});
    for (int ground = 1; ground < k; ++ground) {
        std::vector<Collection> next;
        for (const Collection& s : family)
            for (Collection& e : extend_collection(s)) next.push_back(std::move(e));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        family = std::move(next);
    }
    std::sort(family.begin(), family.end());
    return family;
}

FamilyMembership is_in_family(const Collection& s) {
    FamilyMembership result;
    std::uint32_t pivot_mask = 0;
    std::vector<int> pivots;
    pivots.reserve(s.size());
    for (std::uint32_t m : s.members) {
        if (m == 0) return result; // the empty set has no pivot
        int pivot = std::countr_zero(m) + 1;
        std::uint32_t bit = 1u << (pivot - 1);
        if ((pivot_mask & bit) != 0) return result; // shared minimum
        pivot_mask |= bit;
        pivots.push_back(pivot);
    }
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        std::uint32_t own = 1u << (pivots[i] - 1);
        if ((s.members[i] & pivot_mask) != own) return result; // touches a foreign pivot
    }
    result.in_family = true;
    result.pivots = std::move(pivots);
    return result;
}

std::uint32_t witness_vector(const Collection& s, const Collection& x) {
    FamilyMembership membership = is_in_family(s);
    if (!membership.in_family) throw InputError("collection is not in the family");
    for (std::uint32_t m : x.members)
        if (!s.contains(m)) throw InputError("witness request is not a sub-collection");
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < s.members.size(); ++i)
        if (x.contains(s.members[i])) t |= 1u << (membership.pivots[i] - 1);
    return t;
}

namespace {

BitVec family_neighborhood(const UniversalCut& cut, const Collection& s) {
    BitVec a_set;
    for (std::uint32_t m : s.members) a_set.set(static_cast<std::size_t>(cut.a_index(m)));
    return cut.graph.neighborhood(a_set);
}

} // namespace

DistinctNeighborhoodsReport verify_distinct_neighborhoods(int k, int threads, int guard) {
    DistinctNeighborhoodsReport report;
    report.k = k;
    std::vector<Collection> family = enumerate_family(k, guard);
    report.family_size = family.size();
    report.pairs_checked = family.size() * (family.size() - 1) / 2;

    UniversalCut cut = build_universal_cut(k);
    std::vector<BitVec> nbhd(family.size());
    parallel_for(family.size(), threads,
                 [&](std::size_t i) { nbhd[i] = family_neighborhood(cut, family[i]); });

    // Deterministic collision scan independently of thread count.
    std::map<BitVec, std::size_t> seen;
    for (std::size_t i = 0; i < family.size(); ++i) {
        auto [it, inserted] = seen.emplace(nbhd[i], i);
        if (!inserted) report.collisions.push_back({family[it->second], family[i]});
    }
    return report;
}

NeighborhoodSizeReport verify_neighborhood_size(int k, int guard) {
    NeighborhoodSizeReport report;
    report.k = k;
    std::vector<Collection> family = enumerate_family(k, guard);
    report.family_size = family.size();
    UniversalCut cut = build_universal_cut(k);
    for (const Collection& s : family) {
        std::uint64_t expected =
            (std::uint64_t{1} << k) - (std::uint64_t{1} << (k - static_cast<int>(s.size())));
        std::uint64_t actual = family_neighborhood(cut, s).count();
        if (actual != expected) report.mismatches.push_back({s, expected, actual});
    }
    return report;
}

} // namespace rwlab
