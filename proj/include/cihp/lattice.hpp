#pragma once

#include <vector>

#include "cihp/hypergraph.hpp"
#include "cihp/orientation.hpp"
#include "cihp/poset.hpp"

namespace cihp {

/// A non-empty family of acyclic orientations of one cyclic interval
/// hypergraph, with per-edge source maxima/minima cached.
class OrientationFamily {
public:
    /// Validates each member and rejects cyclic ones (InvalidSource /
    /// PseudoJoinCyclic is not raised here; a cyclic member throws
    /// InvalidSource with the cycle rendered in the message).
    OrientationFamily(const CyclicIntervalHypergraph& h, std::vector<Orientation> members);

    const CyclicIntervalHypergraph& hypergraph() const { return *hypergraph_; }
    const GenericHypergraph& generic() const { return generic_; }
    const std::vector<Orientation>& members() const { return members_; }

    int max_source(int edge) const { return max_source_[edge]; }
    int min_source(int edge) const { return min_source_[edge]; }

private:
    const CyclicIntervalHypergraph* hypergraph_;
    GenericHypergraph generic_;
    std::vector<Orientation> members_;
    std::vector<int> max_source_;
    std::vector<int> min_source_;
};

/// The best value reachable from start l on edge e: close {l} under steps
/// h -> max_source(E) over edges E containing h with max_source(E) > h,
/// then take the largest reachable value lying in edge e. Always >= l.
/// Throws SourceNotInEdge-style InvalidSource when l is not in the edge.
int x_of(const OrientationFamily& f, int edge, int l);

/// Dual fixpoint: descending steps to per-edge minima; smallest reachable
/// value lying in the edge. Always <= l.
int meet_x_of(const OrientationFamily& f, int edge, int l);

struct PseudoJoinOptions {
    /// Regular edges admit a shortcut: the min over l is attained at the
    /// per-edge family maximum. Disabled, the full min is computed; tests
    /// compare both routes.
    bool use_regular_shortcut = true;
};

/// Candidate join: per edge, min over l >= max_source(e) of x_of(e, l).
/// Acyclicity is asserted; PseudoJoinCyclic carries the cycle witness and
/// is expected only on characterization-failing hypergraphs.
Orientation pseudo_join(const OrientationFamily& f, PseudoJoinOptions opts = {});

/// Order dual; throws PseudoMeetCyclic.
Orientation pseudo_meet(const OrientationFamily& f, PseudoJoinOptions opts = {});

/// n-ary pseudo-join equals the left fold of pairwise pseudo-joins, and
/// dually for meets. Meaningful on characterization-passing inputs.
bool fold_check(const OrientationFamily& f);

/// Runs the structural characterization and, budget permitting, the
/// brute-force lattice test; the two must agree (disagreement is a logic
/// error in this implementation and throws). On BudgetExceeded the
/// brute-force leg is skipped and the report is single-method.
LatticeReport lattice_verdict(const CyclicIntervalHypergraph& h, EnumerationBudget budget = {});

}  // namespace cihp
