#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cihp/vertex_set.hpp"

namespace cihp {

enum class EdgeKind { Regular, Cyclic };

/// A non-singleton hyperedge of a cyclic interval hypergraph: either a
/// contiguous run [i,j] strictly inside the ground (Regular) or a
/// wrap-around set [j,hi] u [lo,i] (Cyclic). The full ground set counts
/// as Cyclic.
struct Hyperedge {
    VertexSet vertices;
    EdgeKind kind = EdgeKind::Regular;

    bool is_regular() const { return kind == EdgeKind::Regular; }
    bool is_cyclic() const { return kind == EdgeKind::Cyclic; }

    friend bool operator==(const Hyperedge& a, const Hyperedge& b) {
        return a.vertices == b.vertices;
    }
};

/// Classify a vertex set relative to `ground`, or nullopt when it is
/// neither shape (or has fewer than two vertices).
std::optional<EdgeKind> classify(VertexSet s, GroundInterval ground);

/// The low wrap part [lo,i] of a cyclic edge; for the full ground set the
/// convention is [lo, hi-1].
VertexSet cyclic_low_part(const Hyperedge& e, GroundInterval ground);
/// The high wrap part [j,hi]; for the full ground set, {hi}.
VertexSet cyclic_high_part(const Hyperedge& e, GroundInterval ground);

class CyclicIntervalHypergraph {
public:
    /// Validates and classifies every raw edge. Singletons are silently
    /// dropped, duplicates merged; declaration order is preserved.
    /// Throws EdgeShapeError / EmptyGroundError.
    static CyclicIntervalHypergraph parse(GroundInterval ground,
                                          const std::vector<VertexSet>& raw_edges);

    GroundInterval ground() const { return ground_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    friend bool operator==(const CyclicIntervalHypergraph&,
                           const CyclicIntervalHypergraph&) = default;

private:
    GroundInterval ground_;
    std::vector<Hyperedge> edges_;
};

/// {E n D : E in H} with empties/singletons dropped, duplicates merged and
/// each survivor re-classified relative to D. The class is closed under
/// restriction, so this cannot fail shape validation.
CyclicIntervalHypergraph restrict(const CyclicIntervalHypergraph& h, GroundInterval d);

/// Two regular edges whose non-singleton intersection is not an edge.
struct IntersectionWitness {
    Hyperedge a;
    Hyperedge b;
    VertexSet missing;
};

/// nullopt when the regular edges are closed under intersection
/// (singleton intersections always pass); otherwise the first violating
/// pair in declaration order.
std::optional<IntersectionWitness> regular_closure_violation(const CyclicIntervalHypergraph& h);

/// Two regular and two cyclic edges where the I-pair contains {lo, lo+1}
/// and the J-pair contains {hi-1, hi}.
struct HuggingQuadruple {
    Hyperedge i;
    Hyperedge i_cyc;
    Hyperedge j;
    Hyperedge j_cyc;

    VertexSet union_set() const {
        return i.vertices | i_cyc.vertices | j.vertices | j_cyc.vertices;
    }
};

/// All quadruples, in declaration order of (i, i_cyc, j, j_cyc).
std::vector<HuggingQuadruple> hugging_quadruples(const CyclicIntervalHypergraph& h);

/// First edge E (declaration order) with {lo+1, hi-1} <= E <= union of the
/// quadruple; the fix may coincide with a quadruple member.
std::optional<Hyperedge> find_fix(const CyclicIntervalHypergraph& h, const HuggingQuadruple& q);

struct FixlessQuadrupleWitness {
    HuggingQuadruple quadruple;
};

struct CharacterizationWitness {
    GroundInterval interval;
    std::variant<IntersectionWitness, FixlessQuadrupleWitness> violation;
};

struct CharacterizationResult {
    bool holds = false;
    std::optional<CharacterizationWitness> witness;  // present iff !holds
};

/// The structural lattice test: every sub-interval restriction must have
/// intersection-closed regular edges and a fix for each hugging quadruple.
/// Scans sub-intervals in (lo, hi)-lexicographic order and reports the
/// first violation.
CharacterizationResult satisfies_characterization(const CyclicIntervalHypergraph& h);

}  // namespace cihp
