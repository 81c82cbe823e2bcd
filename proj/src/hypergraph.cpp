#include "cihp/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "cihp/errors.hpp"

namespace cihp {

std::string to_string(VertexSet s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : s.to_vector()) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << '}';
    return out.str();
}

std::string to_string(GroundInterval g) {
    return "[" + std::to_string(g.lo) + "," + std::to_string(g.hi) + "]";
}

std::optional<EdgeKind> classify(VertexSet s, GroundInterval ground) {
    if (s.size() < 2 || !s.subset_of(ground.vertices())) return std::nullopt;
    if (s == ground.vertices()) return EdgeKind::Cyclic;
    if (s.contiguous()) return EdgeKind::Regular;
    // Cyclic: both ends of the ground, and the gap is one contiguous run
    // strictly between them.
    if (!s.contains(ground.lo) || !s.contains(ground.hi)) return std::nullopt;
    VertexSet gap = ground.vertices() - s;
    if (gap.contiguous() && gap.min() > ground.lo && gap.max() < ground.hi)
        return EdgeKind::Cyclic;
    return std::nullopt;
}

VertexSet cyclic_low_part(const Hyperedge& e, GroundInterval ground) {
    if (e.vertices == ground.vertices()) return VertexSet::interval(ground.lo, ground.hi - 1);
    VertexSet gap = ground.vertices() - e.vertices;
    return VertexSet::interval(ground.lo, gap.min() - 1);
}

VertexSet cyclic_high_part(const Hyperedge& e, GroundInterval ground) {
    if (e.vertices == ground.vertices()) return VertexSet::interval(ground.hi, ground.hi);
    VertexSet gap = ground.vertices() - e.vertices;
    return VertexSet::interval(gap.max() + 1, ground.hi);
}

CyclicIntervalHypergraph CyclicIntervalHypergraph::parse(GroundInterval ground,
                                                         const std::vector<VertexSet>& raw_edges) {
    if (ground.lo < 1 || ground.hi > kMaxVertex || ground.lo >= ground.hi)
        throw EmptyGroundError("ground interval must satisfy 1 <= lo < hi <= " +
                               std::to_string(kMaxVertex) + ", got " + to_string(ground));
    CyclicIntervalHypergraph h;
    h.ground_ = ground;
    for (const VertexSet& raw : raw_edges) {
        if (!raw.empty() && !raw.subset_of(ground.vertices()))
            throw EdgeShapeError("edge " + to_string(raw) + " leaves the ground " +
                                 to_string(ground));
        if (raw.size() <= 1) continue;  // singletons implicit
        auto kind = classify(raw, ground);
        if (!kind)
            throw EdgeShapeError("edge " + to_string(raw) +
                                 " is neither a regular nor a cyclic interval on " +
                                 to_string(ground));
        Hyperedge e{raw, *kind};
        if (std::find(h.edges_.begin(), h.edges_.end(), e) == h.edges_.end())
            h.edges_.push_back(e);
    }
    return h;
}

CyclicIntervalHypergraph restrict(const CyclicIntervalHypergraph& h, GroundInterval d) {
    if (!h.ground().contains(d) || d.lo >= d.hi)
        throw EmptyGroundError("restriction interval " + to_string(d) + " invalid within " +
                               to_string(h.ground()));
    std::vector<VertexSet> cut;
    cut.reserve(h.edges().size());
    for (const Hyperedge& e : h.edges()) cut.push_back(e.vertices & d.vertices());
    // parse() re-validates each survivor relative to d; closure of the
    // class under restriction makes this total.
    return CyclicIntervalHypergraph::parse(d, cut);
}

std::optional<IntersectionWitness> regular_closure_violation(const CyclicIntervalHypergraph& h) {
    const auto& edges = h.edges();
    for (size_t a = 0; a < edges.size(); ++a) {
        if (!edges[a].is_regular()) continue;
        for (size_t b = a + 1; b < edges.size(); ++b) {
            if (!edges[b].is_regular()) continue;
            VertexSet cap = edges[a].vertices & edges[b].vertices;
            if (cap.size() < 2) continue;  // empty or singleton: implicit
            bool present = std::any_of(edges.begin(), edges.end(),
                                       [&](const Hyperedge& e) { return e.vertices == cap; });
            if (!present) return IntersectionWitness{edges[a], edges[b], cap};
        }
    }
    return std::nullopt;
}

std::vector<HuggingQuadruple> hugging_quadruples(const CyclicIntervalHypergraph& h) {
    const auto& edges = h.edges();
    const GroundInterval g = h.ground();
    const VertexSet lo_pair = VertexSet::of({g.lo, g.lo + 1});
    const VertexSet hi_pair = VertexSet::of({g.hi - 1, g.hi});

    std::vector<HuggingQuadruple> out;
    for (const Hyperedge& i : edges) {
        if (!i.is_regular() || !lo_pair.subset_of(i.vertices)) continue;
        for (const Hyperedge& ic : edges) {
            if (!ic.is_cyclic() || !lo_pair.subset_of(ic.vertices)) continue;
            for (const Hyperedge& j : edges) {
                if (!j.is_regular() || !hi_pair.subset_of(j.vertices)) continue;
                if (j == i) continue;
                for (const Hyperedge& jc : edges) {
                    if (!jc.is_cyclic() || !hi_pair.subset_of(jc.vertices)) continue;
                    if (jc == ic) continue;
                    out.push_back(HuggingQuadruple{i, ic, j, jc});
                }
            }
        }
    }
    return out;
}

std::optional<Hyperedge> find_fix(const CyclicIntervalHypergraph& h, const HuggingQuadruple& q) {
    const GroundInterval g = h.ground();
    const VertexSet anchors = VertexSet::of({g.lo + 1, g.hi - 1});
    const VertexSet hull = q.union_set();
    for (const Hyperedge& e : h.edges())
        if (anchors.subset_of(e.vertices) && e.vertices.subset_of(hull)) return e;
    return std::nullopt;
}

CharacterizationResult satisfies_characterization(const CyclicIntervalHypergraph& h) {
    const GroundInterval g = h.ground();
    for (int x = g.lo; x < g.hi; ++x) {
        for (int y = x + 1; y <= g.hi; ++y) {
            GroundInterval d{x, y};
            CyclicIntervalHypergraph hd = restrict(h, d);
            if (auto w = regular_closure_violation(hd))
                return {false, CharacterizationWitness{d, *w}};
            for (const HuggingQuadruple& q : hugging_quadruples(hd))
                if (!find_fix(hd, q))
                    return {false, CharacterizationWitness{d, FixlessQuadrupleWitness{q}}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace cihp
