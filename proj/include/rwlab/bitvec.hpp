#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rwlab {

/// Dynamic bit vector packed into 64-bit words. Logically zero-extended:
/// two vectors compare equal when they agree on every bit, regardless of
/// how many trailing zero words each one stores.
class BitVec {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVec() = default;
    explicit BitVec(std::size_t n_bits) : words_((n_bits + 63) / 64, 0) {}

    void set(std::size_t i) {
        grow_for(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        if ((i >> 6) < words_.size()) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool test(std::size_t i) const {
        return (i >> 6) < words_.size() && ((words_[i >> 6] >> (i & 63)) & 1) != 0;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w != 0) return true;
        return false;
    }

    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t find_first() const { return find_from(0); }

    std::size_t find_next(std::size_t prev) const { return find_from(prev + 1); }

    BitVec& operator|=(const BitVec& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= (i < o.words_.size()) ? o.words_[i] : 0;
        return *this;
    }

    BitVec& operator^=(const BitVec& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    /// *this & ~o
    BitVec and_not(const BitVec& o) const {
        BitVec r = *this;
        for (std::size_t i = 0; i < r.words_.size() && i < o.words_.size(); ++i)
            r.words_[i] &= ~o.words_[i];
        return r;
    }

    bool intersects(const BitVec& o) const {
        std::size_t n = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }

    bool subset_of(const BitVec& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t ow = (i < o.words_.size()) ? o.words_[i] : 0;
            if ((words_[i] & ~ow) != 0) return false;
        }
        return true;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        std::size_t n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t aw = (i < a.words_.size()) ? a.words_[i] : 0;
            std::uint64_t bw = (i < b.words_.size()) ? b.words_[i] : 0;
            if (aw != bw) return false;
        }
        return true;
    }

    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    /// Lexicographic-by-word order ignoring trailing zeros; gives a stable
    /// total order for deterministic sorting of neighborhoods.
    friend bool operator<(const BitVec& a, const BitVec& b) {
        std::size_t n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = n; i-- > 0;) {
            std::uint64_t aw = (i < a.words_.size()) ? a.words_[i] : 0;
            std::uint64_t bw = (i < b.words_.size()) ? b.words_[i] : 0;
            if (aw != bw) return aw < bw;
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t last = words_.size();
        while (last > 0 && words_[last - 1] == 0) --last;
        std::uint64_t h = 1469598103934665603ULL;
        for (std::size_t i = 0; i < last; ++i) {
            h ^= words_[i];
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::size_t i = find_first(); i != npos; i = find_next(i))
            out.push_back(static_cast<int>(i));
        return out;
    }

    static BitVec from_indices(const std::vector<int>& idx) {
        BitVec v;
        for (int i : idx) v.set(static_cast<std::size_t>(i));
        return v;
    }

private:
    void grow_for(std::size_t i) {
        std::size_t need = (i >> 6) + 1;
        if (need > words_.size()) words_.resize(need, 0);
    }

    std::size_t find_from(std::size_t start) const {
        std::size_t w = start >> 6;
        if (w >= words_.size()) return npos;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (cur != 0)
                return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w >= words_.size()) return npos;
            cur = words_[w];
        }
    }

    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

} // namespace rwlab
