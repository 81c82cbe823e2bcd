#include "cihp/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "cihp/errors.hpp"

namespace cihp {

bool leq(const Orientation& a, const Orientation& b) {
    if (a.sources.size() != b.sources.size())
        throw MismatchedHypergraph("source sequences have different lengths");
    for (size_t i = 0; i < a.sources.size(); ++i)
        if (a.sources[i] > b.sources[i]) return false;
    return true;
}

SourcePoset SourcePoset::build(const GenericHypergraph& h, EnumerationBudget budget) {
    SourcePoset p;
    p.hypergraph_ = h;
    p.elements_ = enumerate_acyclic(h, EnumerationStrategy::Backtracking, budget);

    const int n = static_cast<int>(p.elements_.size());
    if (n > (1 << 14))
        throw BudgetExceeded("poset has " + std::to_string(n) +
                             " elements; dense order storage is capped at 2^14");

    p.order_ = BitMatrix(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (cihp::leq(p.elements_[a], p.elements_[b])) p.order_.set(a, b);

    std::vector<int> identity, rev;
    for (int v = h.ground().lo; v <= h.ground().hi; ++v) identity.push_back(v);
    rev.assign(identity.rbegin(), identity.rend());
    p.bottom_ = p.index_of(orientation_from_permutation(h, identity));
    p.top_ = p.index_of(orientation_from_permutation(h, rev));
    if (p.bottom_ < 0 || p.top_ < 0)
        throw std::logic_error("extreme orientations missing from the enumeration");
    for (int e = 0; e < n; ++e)
        if (!p.order_.get(p.bottom_, e) || !p.order_.get(e, p.top_))
            throw std::logic_error("bottom/top are not extreme");
    return p;
}

int SourcePoset::index_of(const Orientation& a) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
    if (it == elements_.end() || !(*it == a)) return -1;
    return static_cast<int>(it - elements_.begin());
}

std::vector<std::pair<int, int>> hasse(const SourcePoset& p) {
    const int n = p.size();
    const int words = (n + 63) / 64;
    // strict-above bit rows
    std::vector<uint64_t> above(size_t(n) * words, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && p.leq(a, b)) above[size_t(a) * words + b / 64] |= uint64_t{1} << (b % 64);

    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b || !p.leq(a, b)) continue;
            bool mid = false;
            for (int w = 0; w < words && !mid; ++w)
                // k strictly between a and b: k above a and b above k
                for (uint64_t bits = above[size_t(a) * words + w]; bits && !mid; bits &= bits - 1) {
                    int k = w * 64 + __builtin_ctzll(bits);
                    if (k != b && p.leq(k, b)) mid = true;
                }
            if (!mid) covers.emplace_back(a, b);
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

namespace {

std::variant<int, NoBound> unique_extremal_bound(const SourcePoset& p, int a, int b, bool join) {
    std::vector<int> bounds;
    for (int c = 0; c < p.size(); ++c) {
        bool is_bound = join ? (p.leq(a, c) && p.leq(b, c)) : (p.leq(c, a) && p.leq(c, b));
        if (is_bound) bounds.push_back(c);
    }
    std::vector<int> extremal;
    for (int c : bounds) {
        bool dominated = std::any_of(bounds.begin(), bounds.end(), [&](int d) {
            return d != c && (join ? p.leq(d, c) : p.leq(c, d));
        });
        if (!dominated) extremal.push_back(c);
    }
    if (extremal.size() == 1) return extremal.front();
    return NoBound{std::move(extremal)};
}

}  // namespace

std::variant<int, NoBound> brute_join(const SourcePoset& p, int a, int b) {
    return unique_extremal_bound(p, a, b, true);
}

std::variant<int, NoBound> brute_meet(const SourcePoset& p, int a, int b) {
    return unique_extremal_bound(p, a, b, false);
}

LatticeReport is_lattice_bruteforce(const SourcePoset& p) {
    LatticeReport report;
    report.method = LatticeMethod::BruteForce;
    for (int a = 0; a < p.size(); ++a) {
        for (int b = a + 1; b < p.size(); ++b) {
            auto join = brute_join(p, a, b);
            if (auto* nb = std::get_if<NoBound>(&join)) {
                report.is_lattice = false;
                report.pair_witness = PairWitness{a, b, true, nb->extremal_bounds};
                return report;
            }
            auto meet = brute_meet(p, a, b);
            if (auto* nb = std::get_if<NoBound>(&meet)) {
                report.is_lattice = false;
                report.pair_witness = PairWitness{a, b, false, nb->extremal_bounds};
                return report;
            }
        }
    }
    report.is_lattice = true;
    return report;
}

GenericHypergraph reversal(const GenericHypergraph& h) {
    const GroundInterval g = h.ground();
    std::vector<VertexSet> edges;
    edges.reserve(h.edges().size());
    for (const VertexSet& e : h.edges()) {
        VertexSet r;
        for (int v : e.to_vector()) r.add(g.lo + g.hi - v);
        edges.push_back(r);
    }
    return GenericHypergraph::make(g, edges);
}

Orientation reversal(const GenericHypergraph& h, const Orientation& a) {
    const GroundInterval g = h.ground();
    Orientation r;
    r.sources.reserve(a.sources.size());
    for (int v : a.sources) r.sources.push_back(g.lo + g.hi - v);
    return r;
}

namespace {

// A permutation pi of `ground` with O_pi = a: repeatedly emit a vertex
// that is the designated source of every still-untouched edge containing
// it. Acyclicity guarantees progress.
std::vector<int> realizing_permutation(const GenericHypergraph& h, const Orientation& a) {
    const GroundInterval g = h.ground();
    std::vector<int> pi;
    VertexSet remaining = g.vertices();
    std::vector<char> touched(h.edges().size(), 0);
    while (!remaining.empty()) {
        int pick = 0;
        for (int v : remaining.to_vector()) {
            bool ok = true;
            for (size_t e = 0; e < h.edges().size(); ++e)
                if (!touched[e] && h.edges()[e].contains(v) && a.sources[e] != v) {
                    ok = false;
                    break;
                }
            if (ok) {
                pick = v;
                break;
            }
        }
        if (pick == 0) throw std::logic_error("no realizing permutation; orientation is cyclic");
        pi.push_back(pick);
        remaining.remove(pick);
        for (size_t e = 0; e < h.edges().size(); ++e)
            if (h.edges()[e].contains(pick)) touched[e] = 1;
    }
    return pi;
}

// Image of P_{H|_D} in P_H through pi_A extended by `tail`, checked for
// injectivity, order embedding, and order convexity.
bool embedding_is_interval(const SourcePoset& big, const SourcePoset& small,
                           const GenericHypergraph& h, const std::vector<int>& tail) {
    std::vector<int> image(small.size(), -1);
    for (int a = 0; a < small.size(); ++a) {
        std::vector<int> pi = realizing_permutation(small.hypergraph(), small.elements()[a]);
        pi.insert(pi.end(), tail.begin(), tail.end());
        image[a] = big.index_of(orientation_from_permutation(h, pi));
        if (image[a] < 0) return false;
    }
    for (int a = 0; a < small.size(); ++a)
        for (int b = 0; b < small.size(); ++b) {
            if (a != b && image[a] == image[b]) return false;
            if (small.leq(a, b) != big.leq(image[a], image[b])) return false;
        }
    // convexity in the big poset
    std::vector<char> in_image(big.size(), 0);
    for (int idx : image) in_image[idx] = 1;
    for (int c = 0; c < big.size(); ++c) {
        if (in_image[c]) continue;
        bool has_lower = false, has_upper = false;
        for (int idx : image) {
            has_lower |= big.leq(idx, c);
            has_upper |= big.leq(c, idx);
        }
        if (has_lower && has_upper) return false;
    }
    return true;
}

}  // namespace

bool restriction_embedding_check(const CyclicIntervalHypergraph& h, GroundInterval d,
                                 EnumerationBudget budget) {
    GenericHypergraph gh = as_generic(h);
    if (d == h.ground()) return true;  // identity embedding
    CyclicIntervalHypergraph hd = restrict(h, d);
    SourcePoset big = SourcePoset::build(gh, budget);
    SourcePoset small = SourcePoset::build(as_generic(hd), budget);

    std::vector<int> tail;
    for (int v = h.ground().lo; v <= h.ground().hi; ++v)
        if (!d.contains(v)) tail.push_back(v);
    if (embedding_is_interval(big, small, gh, tail)) return true;
    // Exhaust the remaining arrangements of the outside vertices before
    // giving up.
    std::sort(tail.begin(), tail.end());
    do {
        if (embedding_is_interval(big, small, gh, tail)) return true;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return false;
}

}  // namespace cihp
