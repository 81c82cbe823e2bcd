#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace cihp {

/// Vertices are 1-based indices; sets are stored as 64-bit masks, so the
/// ground interval may reach at most vertex 64.
inline constexpr int kMaxVertex = 64;

class VertexSet {
public:
    VertexSet() = default;

    static VertexSet interval(int lo, int hi) {
        VertexSet s;
        for (int v = lo; v <= hi; ++v) s.add(v);
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    void add(int v) { bits_ |= bit(v); }
    void remove(int v) { bits_ &= ~bit(v); }
    bool contains(int v) const { return v >= 1 && v <= kMaxVertex && (bits_ & bit(v)) != 0; }

    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcountll(bits_); }

    int min() const { return __builtin_ctzll(bits_) + 1; }
    int max() const { return 64 - __builtin_clzll(bits_); }

    bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    /// True when the set is a contiguous run of integers.
    bool contiguous() const {
        if (bits_ == 0) return false;
        uint64_t run = bits_ >> (min() - 1);
        return (run & (run + 1)) == 0;
    }

    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }

    friend bool operator==(VertexSet a, VertexSet b) = default;
    friend std::strong_ordering operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(__builtin_ctzll(b) + 1);
        return out;
    }

    uint64_t bits() const { return bits_; }

private:
    explicit VertexSet(uint64_t bits) : bits_(bits) {}
    static uint64_t bit(int v) { return uint64_t{1} << (v - 1); }

    uint64_t bits_ = 0;
};

/// The ground interval [lo, hi] of a hypergraph; always at least two vertices.
struct GroundInterval {
    int lo = 1;
    int hi = 2;

    int size() const { return hi - lo + 1; }
    bool contains(int v) const { return lo <= v && v <= hi; }
    bool contains(GroundInterval d) const { return lo <= d.lo && d.hi <= hi; }
    VertexSet vertices() const { return VertexSet::interval(lo, hi); }

    friend bool operator==(GroundInterval, GroundInterval) = default;
};

std::string to_string(VertexSet s);
std::string to_string(GroundInterval g);

}  // namespace cihp
