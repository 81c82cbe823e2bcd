#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "cihp/hypergraph.hpp"
#include "cihp/lattice.hpp"
#include "cihp/orientation.hpp"

namespace cihp::testing {

inline VertexSet vs(std::initializer_list<int> xs) { return VertexSet::of(xs); }

inline CyclicIntervalHypergraph cih(int lo, int hi,
                                    std::initializer_list<std::initializer_list<int>> edges) {
    std::vector<VertexSet> raw;
    for (auto e : edges) raw.push_back(VertexSet::of(e));
    return CyclicIntervalHypergraph::parse(GroundInterval{lo, hi}, raw);
}

inline GenericHypergraph gh(int lo, int hi,
                            std::initializer_list<std::initializer_list<int>> edges) {
    std::vector<VertexSet> raw;
    for (auto e : edges) raw.push_back(VertexSet::of(e));
    return GenericHypergraph::make(GroundInterval{lo, hi}, raw);
}

/// The (k-1)^2 distinct non-singleton cyclic-interval edges on [1, k],
/// regulars first.
inline std::vector<VertexSet> all_edges(int k) {
    std::vector<VertexSet> edges;
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (!(i == 1 && j == k)) edges.push_back(VertexSet::interval(i, j));
    edges.push_back(VertexSet::interval(1, k));
    for (int a = 2; a < k; ++a)
        for (int b = a; b < k; ++b)
            edges.push_back(VertexSet::interval(1, k) - VertexSet::interval(a, b));
    return edges;
}

inline CyclicIntervalHypergraph subset_hypergraph(int k, const std::vector<VertexSet>& edges,
                                                  uint64_t subset) {
    std::vector<VertexSet> chosen;
    for (size_t e = 0; e < edges.size(); ++e)
        if (subset >> e & 1) chosen.push_back(edges[e]);
    return CyclicIntervalHypergraph::parse(GroundInterval{1, k}, chosen);
}

/// Independent acyclicity oracle: literal search over edge-index tuples
/// of length 2..k (with repetition) for a chain whose sources thread
/// cyclically through non-source vertices. Exponential; test sizes only.
inline bool oracle_is_cyclic(const GenericHypergraph& h, const Orientation& a) {
    const int k = h.edge_count();
    std::vector<int> seq;
    auto chained = [&](int p, int q) {
        return h.edges()[p].contains(a.sources[q]) && a.sources[q] != a.sources[p];
    };
    std::function<bool(int)> extend = [&](int len) {
        if (static_cast<int>(seq.size()) == len)
            return chained(seq.back(), seq.front());
        for (int e = 0; e < k; ++e) {
            if (!seq.empty() && !chained(seq.back(), e)) continue;
            seq.push_back(e);
            if (extend(len)) return true;
            seq.pop_back();
        }
        return false;
    };
    for (int len = 2; len <= std::max(k, 2); ++len) {
        seq.clear();
        if (extend(len)) return true;
    }
    return false;
}

/// Independent oracle for the best sequence value: enumerates the chains
/// themselves (start value, then per-edge family maxima, strictly
/// increasing) instead of closing a reachable set.
inline int oracle_x_of(const OrientationFamily& f, int edge, int l, bool ascending = true) {
    const auto& edges = f.generic().edges();
    int best = l;  // the length-1 chain
    std::function<void(int)> walk = [&](int h) {
        if (edges[edge].contains(h)) best = ascending ? std::max(best, h) : std::min(best, h);
        for (size_t e = 0; e < edges.size(); ++e) {
            if (!edges[e].contains(h)) continue;
            int next = ascending ? f.max_source(static_cast<int>(e))
                                 : f.min_source(static_cast<int>(e));
            if (ascending ? next > h : next < h) walk(next);
        }
    };
    walk(l);
    return best;
}

}  // namespace cihp::testing
