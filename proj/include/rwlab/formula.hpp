#pragma once

#include <cstdint>
#include <istream>
#include <vector>

#include "rwlab/errors.hpp"

namespace rwlab {

/// A set of subsets of [1..ground]; each member is a bitmask with bit e-1
/// standing for element e. Members are kept sorted and distinct.
struct Collection {
    int ground = 0;
    std::vector<std::uint32_t> members;

    std::size_t size() const { return members.size(); }
    bool contains(std::uint32_t mask) const;
    void normalize(); // sort, dedupe, check masks fit the ground set

    friend bool operator==(const Collection&, const Collection&) = default;
    friend bool operator<(const Collection& a, const Collection& b) {
        if (a.members != b.members) return a.members < b.members;
        return a.ground < b.ground;
    }
};

/// Intersection of member sets (as sets of masks, not element-wise).
bool collections_intersect(const Collection& a, const Collection& b);

/// Literal of the k x k variable grid v_{row,col}, row in [1,k],
/// col in [k+1,2k].
struct Literal {
    int row = 0;
    int col = 0;
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

/// 3-CNF over the doubly indexed grid; clauses hold 1..3 literals until
/// gadget construction pads them to exactly 3 positions.
struct CnfFormula {
    int k = 0;
    std::vector<std::vector<Literal>> clauses;

    int var_count() const { return k * k; }
    int clause_count() const { return static_cast<int>(clauses.size()); }
    void validate() const;

    /// Clause padded to 3 positions by repeating its last literal.
    std::vector<Literal> padded_clause(int i) const;
};

struct RawCnf {
    int n_vars = 0;
    std::vector<std::vector<int>> clauses; // nonzero 1-based DIMACS literals
};

/// Standard DIMACS CNF; clauses longer than 3 literals are rejected.
RawCnf parse_dimacs(std::istream& in);

/// Grid embedding: k = ceil(sqrt(n_vars)); unused dummy cells pad the grid
/// to k^2 variables. 1-based variable v maps row-major to
/// row = (v-1)/k + 1, col = k + (v-1)%k + 1.
CnfFormula pad_to_square(const RawCnf& raw);

/// Total assignment of the k^2 grid; cell (row,col) occupies bit
/// (row-1)*k + (col-k-1), with cell 0 the most significant position of the
/// lexicographic order used by the SAT oracle.
struct Assignment {
    int k = 0;
    std::uint32_t bits = 0;

    int cell(int row, int col) const { return (row - 1) * k + (col - k - 1); }
    bool value(int row, int col) const { return ((bits >> cell(row, col)) & 1) != 0; }
    bool value(const Literal& lit) const {
        bool v = value(lit.row, lit.col);
        return lit.positive ? v : !v;
    }
    bool satisfies(const CnfFormula& f) const;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// The selector collection of an assignment: member i is
/// {i} ∪ {col : f(v_{i,col}) = 1}, one member per grid row, over
/// ground [2k].
Collection assignment_to_collection(const Assignment& f);

/// The members of row block i compatible with the literal: containing its
/// column when positive, omitting it when negative. Always 2^{k-1} members.
Collection literal_sets(const Literal& lit, int k);

/// All masks s ⊆ [2k] with s ∩ [k] = {i}, ascending (the row block S_i).
std::vector<std::uint32_t> row_block_masks(int i, int k);

/// The whole selector universe S = S_1 ∪ ... ∪ S_k, ascending by mask.
std::vector<std::uint32_t> selector_masks(int k);

} // namespace rwlab
