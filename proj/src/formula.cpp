#include "rwlab/formula.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <string>

namespace rwlab {

bool Collection::contains(std::uint32_t mask) const {
    return std::binary_search(members.begin(), members.end(), mask);
}

void Collection::normalize() {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (ground < 0 || ground > 31) throw InputError("collection ground out of range");
    std::uint32_t universe = (ground == 31) ? 0x7fffffffu : ((1u << ground) - 1);
    for (std::uint32_t m : members)
        if ((m & ~universe) != 0) throw InputError("collection member outside ground set");
}

bool collections_intersect(const Collection& a, const Collection& b) {
    for (std::uint32_t m : a.members)
        if (b.contains(m)) return true;
    return false;
}

void CnfFormula::validate() const {
    if (k < 1) throw InputError("grid dimension k must be >= 1");
    for (const auto& clause : clauses) {
        if (clause.empty() || clause.size() > 3)
            throw InputError("clause must hold 1..3 literals");
        for (const Literal& lit : clause) {
            if (lit.row < 1 || lit.row > k || lit.col < k + 1 || lit.col > 2 * k)
                throw InputError("literal outside the variable grid");
        }
    }
}

std::vector<Literal> CnfFormula::padded_clause(int i) const {
    std::vector<Literal> c = clauses.at(static_cast<std::size_t>(i));
    while (c.size() < 3) c.push_back(c.back());
    return c;
}

RawCnf parse_dimacs(std::istream& in) {
    RawCnf cnf;
    bool header_seen = false;
    long declared_clauses = -1;
    std::vector<int> cur;
    std::string tok;
    while (in >> tok) {
        if (tok == "c" || tok[0] == 'c') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        if (tok == "p") {
            std::string fmt;
            if (!(in >> fmt >> cnf.n_vars >> declared_clauses) || fmt != "cnf")
                throw InputError("malformed DIMACS header");
            if (cnf.n_vars < 1) throw InputError("DIMACS header declares no variables");
            header_seen = true;
            continue;
        }
        int lit = 0;
        try {
            lit = std::stoi(tok);
        } catch (const std::exception&) {
            throw InputError("bad DIMACS token: '" + tok + "'");
        }
        if (!header_seen) throw InputError("DIMACS literal before header");
        if (lit == 0) {
            if (cur.empty()) throw InputError("empty clause in DIMACS input");
            cnf.clauses.push_back(cur);
            cur.clear();
        } else {
            int var = std::abs(lit);
            if (var > cnf.n_vars) throw InputError("variable index out of range: " + tok);
            cur.push_back(lit);
            if (cur.size() > 3) throw InputError("clause longer than 3 literals (3-CNF only)");
        }
    }
    if (!cur.empty()) cnf.clauses.push_back(cur);
    if (!header_seen) throw InputError("missing DIMACS header");
    return cnf;
}

CnfFormula pad_to_square(const RawCnf& raw) {
    if (raw.n_vars < 1) throw InputError("need at least one variable");
    int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(raw.n_vars))));
    while (k * k < raw.n_vars) ++k;

    CnfFormula f;
    f.k = k;
    f.clauses.reserve(raw.clauses.size());
    for (const auto& clause : raw.clauses) {
        std::vector<Literal> out;
        out.reserve(clause.size());
        for (int lit : clause) {
            int var = std::abs(lit) - 1; // 0-based
            Literal l;
            l.row = var / k + 1;
            l.col = k + var % k + 1;
            l.positive = lit > 0;
            out.push_back(l);
        }
        f.clauses.push_back(std::move(out));
    }
    f.validate();
    return f;
}

bool Assignment::satisfies(const CnfFormula& f) const {
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (const Literal& lit : clause)
            if (value(lit)) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

Collection assignment_to_collection(const Assignment& f) {
    Collection out;
    out.ground = 2 * f.k;
    out.members.reserve(static_cast<std::size_t>(f.k));
    for (int i = 1; i <= f.k; ++i) {
        std::uint32_t s = 1u << (i - 1);
        for (int j = f.k + 1; j <= 2 * f.k; ++j)
            if (f.value(i, j)) s |= 1u << (j - 1);
        out.members.push_back(s);
    }
    out.normalize();
    return out;
}

Collection literal_sets(const Literal& lit, int k) {
    if (lit.row < 1 || lit.row > k || lit.col < k + 1 || lit.col > 2 * k)
        throw InputError("literal outside the variable grid");
    Collection out;
    out.ground = 2 * k;
    std::uint32_t row_bit = 1u << (lit.row - 1);
    std::uint32_t col_bit = 1u << (lit.col - 1);
    for (std::uint32_t hi = 0; hi < (1u << k); ++hi) {
        std::uint32_t s = row_bit | (hi << k);
        bool has_col = (s & col_bit) != 0;
        if (has_col == lit.positive) out.members.push_back(s);
    }
    out.normalize();
    return out;
}

std::vector<std::uint32_t> row_block_masks(int i, int k) {
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t{1} << k);
    std::uint32_t row_bit = 1u << (i - 1);
    for (std::uint32_t hi = 0; hi < (1u << k); ++hi) out.push_back(row_bit | (hi << k));
    return out;
}

std::vector<std::uint32_t> selector_masks(int k) {
    std::vector<std::uint32_t> out;
    out.reserve((std::size_t{1} << k) * static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        auto block = row_block_masks(i, k);
        out.insert(out.end(), block.begin(), block.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rwlab
