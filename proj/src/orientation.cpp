#include "cihp/orientation.hpp"

#include <algorithm>
#include <set>

#include "cihp/errors.hpp"

namespace cihp {

GenericHypergraph GenericHypergraph::make(GroundInterval ground,
                                          const std::vector<VertexSet>& raw_edges) {
    if (ground.lo < 1 || ground.hi > kMaxVertex || ground.lo >= ground.hi)
        throw EmptyGroundError("ground interval must satisfy 1 <= lo < hi <= " +
                               std::to_string(kMaxVertex) + ", got " + to_string(ground));
    GenericHypergraph h;
    h.ground_ = ground;
    for (const VertexSet& raw : raw_edges) {
        if (!raw.empty() && !raw.subset_of(ground.vertices()))
            throw EdgeShapeError("edge " + to_string(raw) + " leaves the ground " +
                                 to_string(ground));
        if (raw.size() <= 1) continue;
        if (std::find(h.edges_.begin(), h.edges_.end(), raw) == h.edges_.end())
            h.edges_.push_back(raw);
    }
    return h;
}

GenericHypergraph as_generic(const CyclicIntervalHypergraph& h) {
    std::vector<VertexSet> raw;
    raw.reserve(h.edges().size());
    for (const Hyperedge& e : h.edges()) raw.push_back(e.vertices);
    return GenericHypergraph::make(h.ground(), raw);
}

void validate_orientation(const GenericHypergraph& h, const Orientation& a) {
    if (a.sources.size() != h.edges().size())
        throw MismatchedHypergraph("orientation has " + std::to_string(a.sources.size()) +
                                   " sources but the hypergraph has " +
                                   std::to_string(h.edges().size()) + " edges");
    for (size_t i = 0; i < a.sources.size(); ++i)
        if (!h.edges()[i].contains(a.sources[i]))
            throw InvalidSource("source " + std::to_string(a.sources[i]) +
                                " is not a vertex of edge " + to_string(h.edges()[i]));
}

namespace {

// Arc p -> q iff sources[q] is in edges[p] minus its own source.
std::vector<std::vector<int>> source_digraph(const GenericHypergraph& h, const Orientation& a) {
    const int k = h.edge_count();
    std::vector<std::vector<int>> adj(k);
    for (int p = 0; p < k; ++p) {
        for (int q = 0; q < k; ++q) {
            if (p == q) continue;
            if (h.edges()[p].contains(a.sources[q]) && a.sources[q] != a.sources[p])
                adj[p].push_back(q);
        }
    }
    return adj;
}

}  // namespace

std::optional<std::vector<int>> find_cycle(const GenericHypergraph& h, const Orientation& a) {
    validate_orientation(h, a);
    const int k = h.edge_count();
    auto adj = source_digraph(h, a);

    // Iterative DFS; gray nodes form the current stack path.
    enum : uint8_t { White, Gray, Black };
    std::vector<uint8_t> color(k, White);
    std::vector<int> parent(k, -1);
    for (int root = 0; root < k; ++root) {
        if (color[root] != White) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        color[root] = Gray;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[u].size()) {
                int v = adj[u][next++];
                if (color[v] == Gray) {
                    std::vector<int> cycle{v};
                    for (int w = u; w != v; w = parent[w]) cycle.push_back(w);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    return cycle;
                }
                if (color[v] == White) {
                    color[v] = Gray;
                    parent[v] = u;
                    stack.push_back({v, 0});
                }
            } else {
                color[u] = Black;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

Orientation orientation_from_permutation(const GenericHypergraph& h, const std::vector<int>& pi) {
    const GroundInterval g = h.ground();
    if (static_cast<int>(pi.size()) != g.size())
        throw NotAPermutation("expected a permutation of " + std::to_string(g.size()) +
                              " ground vertices, got " + std::to_string(pi.size()));
    VertexSet seen;
    for (int v : pi) {
        if (!g.contains(v) || seen.contains(v))
            throw NotAPermutation("not a permutation of the ground " + to_string(g));
        seen.add(v);
    }
    Orientation a;
    a.sources.reserve(h.edges().size());
    for (const VertexSet& e : h.edges()) {
        int src = 0;
        for (int v : pi) {
            if (e.contains(v)) {
                src = v;
                break;
            }
        }
        a.sources.push_back(src);
    }
    return a;
}

namespace {

void check_budget(const GenericHypergraph& h, EnumerationBudget budget) {
    if (h.ground().size() > budget.max_ground_size)
        throw BudgetExceeded("ground has " + std::to_string(h.ground().size()) +
                             " vertices; enumeration budget allows " +
                             std::to_string(budget.max_ground_size));
}

std::vector<Orientation> enumerate_by_permutations(const GenericHypergraph& h) {
    std::vector<int> pi;
    for (int v = h.ground().lo; v <= h.ground().hi; ++v) pi.push_back(v);
    std::set<Orientation> out;
    do {
        out.insert(orientation_from_permutation(h, pi));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return {out.begin(), out.end()};
}

// True when assigning edge `last` closes a directed cycle among the
// assigned prefix [0, last].
bool closes_cycle(const GenericHypergraph& h, const std::vector<int>& sources, int last) {
    // BFS from `last` over prefix arcs, looking for a way back.
    std::vector<char> visited(last + 1, 0);
    std::vector<int> queue{last};
    visited[last] = 1;
    while (!queue.empty()) {
        int p = queue.back();
        queue.pop_back();
        for (int q = 0; q <= last; ++q) {
            if (!h.edges()[p].contains(sources[q]) || sources[q] == sources[p]) continue;
            if (q == last && p != last) return true;
            if (!visited[q]) {
                visited[q] = 1;
                queue.push_back(q);
            }
        }
    }
    return false;
}

void backtrack(const GenericHypergraph& h, std::vector<int>& sources, size_t depth,
               std::vector<Orientation>& out) {
    if (depth == h.edges().size()) {
        out.push_back(Orientation{sources});
        return;
    }
    for (int v : h.edges()[depth].to_vector()) {
        sources.push_back(v);
        if (!closes_cycle(h, sources, static_cast<int>(depth)))
            backtrack(h, sources, depth + 1, out);
        sources.pop_back();
    }
}

std::vector<Orientation> enumerate_by_backtracking(const GenericHypergraph& h) {
    std::vector<Orientation> out;
    std::vector<int> sources;
    backtrack(h, sources, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Orientation> enumerate_acyclic(const GenericHypergraph& h,
                                           EnumerationStrategy strategy,
                                           EnumerationBudget budget) {
    check_budget(h, budget);
    switch (strategy) {
        case EnumerationStrategy::Permutations:
            return enumerate_by_permutations(h);
        case EnumerationStrategy::Backtracking:
        default:
            return enumerate_by_backtracking(h);
    }
}

}  // namespace cihp
