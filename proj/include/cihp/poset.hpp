#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cihp/hypergraph.hpp"
#include "cihp/orientation.hpp"

namespace cihp {

/// Dense boolean matrix with bitset rows; row-major reachability storage.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(size_t(rows) * words_, 0) {}

    void set(int r, int c) { data_[size_t(r) * words_ + c / 64] |= uint64_t{1} << (c % 64); }
    bool get(int r, int c) const {
        return (data_[size_t(r) * words_ + c / 64] >> (c % 64)) & 1;
    }
    int rows() const { return rows_; }

    /// row(r) |= row(s)
    void or_row(int r, int s) {
        for (int w = 0; w < words_; ++w)
            data_[size_t(r) * words_ + w] |= data_[size_t(s) * words_ + w];
    }
    /// row(r) contains row(s)?
    bool row_superset(int r, int s) const {
        for (int w = 0; w < words_; ++w)
            if (data_[size_t(s) * words_ + w] & ~data_[size_t(r) * words_ + w]) return false;
        return true;
    }

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

/// Componentwise comparison of source sequences; the order of the poset.
/// Throws MismatchedHypergraph on length mismatch.
bool leq(const Orientation& a, const Orientation& b);

/// All acyclic orientations of a hypergraph with the componentwise order
/// cached, elements sorted by source sequence.
class SourcePoset {
public:
    static SourcePoset build(const GenericHypergraph& h, EnumerationBudget budget = {});

    const GenericHypergraph& hypergraph() const { return hypergraph_; }
    const std::vector<Orientation>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }

    bool leq(int a, int b) const { return order_.get(a, b); }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    /// Element index of an orientation, or -1 when absent (i.e. cyclic).
    int index_of(const Orientation& a) const;

private:
    GenericHypergraph hypergraph_;
    std::vector<Orientation> elements_;
    BitMatrix order_;
    int bottom_ = -1, top_ = -1;
};

/// Cover pairs (lower, upper) of the exact transitive reduction, sorted.
std::vector<std::pair<int, int>> hasse(const SourcePoset& p);

struct NoBound {
    std::vector<int> extremal_bounds;  // minimal upper / maximal lower bounds; count != 1
};

/// The unique minimal upper bound of {a, b}, or the full minimal-bound set
/// when it is not unique (possibly empty).
std::variant<int, NoBound> brute_join(const SourcePoset& p, int a, int b);
/// Dual: unique maximal lower bound.
std::variant<int, NoBound> brute_meet(const SourcePoset& p, int a, int b);

struct PairWitness {
    int a = -1, b = -1;
    bool join_side = true;  // false: the meet failed
    std::vector<int> extremal_bounds;
};

enum class LatticeMethod { Characterization, BruteForce, Both };

struct LatticeReport {
    bool is_lattice = false;
    LatticeMethod method = LatticeMethod::BruteForce;
    std::optional<CharacterizationWitness> characterization_witness;
    std::optional<PairWitness> pair_witness;
};

/// Scans all pairs in element-index order for a unique join and a unique
/// meet; first failure wins.
LatticeReport is_lattice_bruteforce(const SourcePoset& p);

/// Relabel i -> lo + hi - i. Maps cyclic interval hypergraphs to cyclic
/// interval hypergraphs and reverses the order of the poset.
GenericHypergraph reversal(const GenericHypergraph& h);
Orientation reversal(const GenericHypergraph& h, const Orientation& a);

/// Operational form of the restriction-is-interval property: embeds
/// P_{H|_D} into P_H through permutations extended by the vertices outside
/// D in ascending order and checks the image is an order-convex subset.
/// Falls back to every arrangement of the outside vertices before
/// reporting false.
bool restriction_embedding_check(const CyclicIntervalHypergraph& h, GroundInterval d,
                                 EnumerationBudget budget = {});

}  // namespace cihp
