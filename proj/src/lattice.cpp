#include "cihp/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cihp/errors.hpp"

namespace cihp {

OrientationFamily::OrientationFamily(const CyclicIntervalHypergraph& h,
                                     std::vector<Orientation> members)
    : hypergraph_(&h), generic_(as_generic(h)), members_(std::move(members)) {
    if (members_.empty()) throw InvalidSource("orientation family must be non-empty");
    for (const Orientation& m : members_) {
        if (auto cycle = find_cycle(generic_, m)) {
            std::ostringstream msg;
            msg << "family member is cyclic through edges";
            for (int e : *cycle) msg << ' ' << e;
            throw InvalidSource(msg.str());
        }
    }
    const int k = generic_.edge_count();
    max_source_.resize(k);
    min_source_.resize(k);
    for (int e = 0; e < k; ++e) {
        int mx = members_[0].sources[e], mn = mx;
        for (const Orientation& m : members_) {
            mx = std::max(mx, m.sources[e]);
            mn = std::min(mn, m.sources[e]);
        }
        max_source_[e] = mx;
        min_source_[e] = mn;
    }
}

namespace {

// Close `start` under ascending (join) or descending (meet) steps through
// per-edge family extremes, then return the best reachable value inside
// the target edge.
int reachable_extreme(const OrientationFamily& f, int edge, int start, bool ascending) {
    const auto& edges = f.generic().edges();
    if (!edges[edge].contains(start))
        throw InvalidSource("value " + std::to_string(start) + " is not in edge " +
                            to_string(edges[edge]));
    VertexSet reachable;
    reachable.add(start);
    std::vector<int> worklist{start};
    while (!worklist.empty()) {
        int h = worklist.back();
        worklist.pop_back();
        for (size_t e = 0; e < edges.size(); ++e) {
            if (!edges[e].contains(h)) continue;
            int step = ascending ? f.max_source(static_cast<int>(e))
                                 : f.min_source(static_cast<int>(e));
            bool improves = ascending ? step > h : step < h;
            if (improves && !reachable.contains(step)) {
                reachable.add(step);
                worklist.push_back(step);
            }
        }
    }
    VertexSet landing = reachable & edges[edge];
    return ascending ? landing.max() : landing.min();
}

Orientation assemble(const OrientationFamily& f, bool join, PseudoJoinOptions opts) {
    const auto& h = f.hypergraph();
    Orientation out;
    out.sources.reserve(h.edges().size());
    for (int e = 0; e < h.edge_count(); ++e) {
        const int anchor = join ? f.max_source(e) : f.min_source(e);
        if (opts.use_regular_shortcut && h.edges()[e].is_regular()) {
            out.sources.push_back(reachable_extreme(f, e, anchor, join));
            continue;
        }
        int best = 0;
        for (int l : h.edges()[e].vertices.to_vector()) {
            if (join ? l < anchor : l > anchor) continue;
            int v = reachable_extreme(f, e, l, join);
            if (best == 0 || (join ? v < best : v > best)) best = v;
        }
        out.sources.push_back(best);
    }
    return out;
}

}  // namespace

int x_of(const OrientationFamily& f, int edge, int l) {
    return reachable_extreme(f, edge, l, true);
}

int meet_x_of(const OrientationFamily& f, int edge, int l) {
    return reachable_extreme(f, edge, l, false);
}

Orientation pseudo_join(const OrientationFamily& f, PseudoJoinOptions opts) {
    if (f.members().size() == 1) return f.members().front();
    Orientation x = assemble(f, true, opts);
    if (auto cycle = find_cycle(f.generic(), x))
        throw PseudoJoinCyclic("pseudo-join is cyclic", *cycle);
    return x;
}

Orientation pseudo_meet(const OrientationFamily& f, PseudoJoinOptions opts) {
    if (f.members().size() == 1) return f.members().front();
    Orientation x = assemble(f, false, opts);
    if (auto cycle = find_cycle(f.generic(), x))
        throw PseudoMeetCyclic("pseudo-meet is cyclic", *cycle);
    return x;
}

bool fold_check(const OrientationFamily& f) {
    const auto& h = f.hypergraph();
    Orientation join_all = pseudo_join(f);
    Orientation meet_all = pseudo_meet(f);

    Orientation jfold = f.members().front();
    Orientation mfold = f.members().front();
    for (size_t i = 1; i < f.members().size(); ++i) {
        jfold = pseudo_join(OrientationFamily(h, {jfold, f.members()[i]}));
        mfold = pseudo_meet(OrientationFamily(h, {mfold, f.members()[i]}));
    }
    return join_all == jfold && meet_all == mfold;
}

LatticeReport lattice_verdict(const CyclicIntervalHypergraph& h, EnumerationBudget budget) {
    CharacterizationResult chr = satisfies_characterization(h);

    LatticeReport report;
    report.is_lattice = chr.holds;
    report.characterization_witness = chr.witness;
    try {
        SourcePoset p = SourcePoset::build(as_generic(h), budget);
        LatticeReport brute = is_lattice_bruteforce(p);
        if (brute.is_lattice != chr.holds)
            throw std::logic_error(
                "characterization and brute force disagree; implementation bug");
        report.method = LatticeMethod::Both;
        report.pair_witness = brute.pair_witness;
    } catch (const BudgetExceeded&) {
        report.method = LatticeMethod::Characterization;
    }
    return report;
}

}  // namespace cihp
