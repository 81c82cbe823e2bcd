#pragma once

#include <optional>
#include <vector>

#include "cihp/hypergraph.hpp"
#include "cihp/vertex_set.hpp"

namespace cihp {

/// A hypergraph with arbitrarily-shaped edges (|edge| >= 2, deduplicated).
/// The poset machinery works at this generality; the complete graph K_n is
/// the standard example outside the cyclic interval class.
class GenericHypergraph {
public:
    static GenericHypergraph make(GroundInterval ground, const std::vector<VertexSet>& raw_edges);

    GroundInterval ground() const { return ground_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    friend bool operator==(const GenericHypergraph&, const GenericHypergraph&) = default;

private:
    GroundInterval ground_;
    std::vector<VertexSet> edges_;
};

GenericHypergraph as_generic(const CyclicIntervalHypergraph& h);

/// One source vertex per edge, aligned with edge declaration order.
struct Orientation {
    std::vector<int> sources;

    friend bool operator==(const Orientation&, const Orientation&) = default;
    friend auto operator<=>(const Orientation&, const Orientation&) = default;
};

/// Throws InvalidSource unless sources[i] is in edges[i] for all i.
void validate_orientation(const GenericHypergraph& h, const Orientation& a);

/// A directed cycle over edge indices, when the orientation is cyclic:
/// consecutive entries p, q satisfy a.sources[q] in edges[p] \ {a.sources[p]}.
std::optional<std::vector<int>> find_cycle(const GenericHypergraph& h, const Orientation& a);

inline bool is_acyclic(const GenericHypergraph& h, const Orientation& a) {
    return !find_cycle(h, a).has_value();
}

/// Per edge, the earliest element of pi lying in that edge. The result is
/// always acyclic. `pi` lists the ground vertices in visit order; throws
/// NotAPermutation otherwise.
Orientation orientation_from_permutation(const GenericHypergraph& h, const std::vector<int>& pi);

enum class EnumerationStrategy {
    Permutations,  // image of pi -> O_pi over all ground permutations
    Backtracking,  // per-edge source choices with incremental cycle pruning
};

struct EnumerationBudget {
    int max_ground_size = 9;
};

/// The exact set of acyclic orientations, sorted by source sequence.
/// Both strategies produce identical sets; Permutations is the trusted
/// reference, Backtracking the performance path.
std::vector<Orientation> enumerate_acyclic(
    const GenericHypergraph& h,
    EnumerationStrategy strategy = EnumerationStrategy::Backtracking,
    EnumerationBudget budget = {});

}  // namespace cihp
