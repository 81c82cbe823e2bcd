#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cihp/errors.hpp"
#include "cihp/io.hpp"
#include "cihp/lattice.hpp"
#include "cihp/poset.hpp"

using namespace cihp;

namespace {

constexpr int kExitLattice = 0;
constexpr int kExitNotLattice = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDisagreement = 3;

CyclicIntervalHypergraph load_cyclic(const std::string& path) {
    RawHypergraph raw = load_hypergraph_file(path);
    return CyclicIntervalHypergraph::parse(raw.ground, raw.edges);
}

int cmd_check(const std::string& path, bool json, EnumerationBudget budget) {
    CyclicIntervalHypergraph h = load_cyclic(path);
    LatticeReport report = lattice_verdict(h, budget);
    SourcePoset poset;
    const SourcePoset* pp = nullptr;
    if (report.method == LatticeMethod::Both && report.pair_witness) {
        poset = SourcePoset::build(as_generic(h), budget);
        pp = &poset;
    }
    std::cout << (json ? report_json(report, pp) : to_string(report, pp));
    return report.is_lattice ? kExitLattice : kExitNotLattice;
}

int cmd_join(const std::string& path, const std::vector<std::string>& orients, bool meet,
             bool json) {
    CyclicIntervalHypergraph h = load_cyclic(path);
    GenericHypergraph gh = as_generic(h);
    std::vector<Orientation> members;
    for (const std::string& text : orients) {
        Orientation a = parse_orientation(text);
        validate_orientation(gh, a);
        if (auto cycle = find_cycle(gh, a)) {
            std::cerr << "input orientation " << text << " is cyclic through edges:";
            for (int e : *cycle) std::cerr << ' ' << e;
            std::cerr << '\n';
            return kExitInputError;
        }
        members.push_back(std::move(a));
    }
    OrientationFamily family(h, std::move(members));
    try {
        Orientation result = meet ? pseudo_meet(family) : pseudo_join(family);
        if (json)
            std::cout << "[" << to_string(result) << "]\n";
        else
            std::cout << to_string(result) << '\n';
    } catch (const PseudoJoinCyclic& e) {
        std::cerr << "pseudo-join is cyclic through edges:";
        for (int idx : e.cycle) std::cerr << ' ' << idx;
        std::cerr << '\n';
        return kExitNotLattice;
    } catch (const PseudoMeetCyclic& e) {
        std::cerr << "pseudo-meet is cyclic through edges:";
        for (int idx : e.cycle) std::cerr << ' ' << idx;
        std::cerr << '\n';
        return kExitNotLattice;
    }
    return kExitLattice;
}

int cmd_hasse(const std::string& path, const std::string& format, EnumerationBudget budget) {
    RawHypergraph raw = load_hypergraph_file(path);
    SourcePoset p = SourcePoset::build(GenericHypergraph::make(raw.ground, raw.edges), budget);
    std::cout << (format == "json" ? hasse_json(p) : hasse_dot(p));
    return kExitLattice;
}

int cmd_orientations(const std::string& path, bool list, EnumerationBudget budget) {
    RawHypergraph raw = load_hypergraph_file(path);
    GenericHypergraph h = GenericHypergraph::make(raw.ground, raw.edges);
    std::vector<Orientation> all = enumerate_acyclic(h, EnumerationStrategy::Backtracking, budget);
    if (list)
        for (const Orientation& a : all) std::cout << to_string(a) << '\n';
    else
        std::cout << all.size() << '\n';
    return kExitLattice;
}

int cmd_restrict(const std::string& path, int lo, int hi) {
    CyclicIntervalHypergraph h = load_cyclic(path);
    std::cout << to_text(restrict(h, GroundInterval{lo, hi}));
    return kExitLattice;
}

// All distinct non-singleton cyclic-interval hyperedges on [1, k]:
// (k-1)^2 of them, regulars first by (i, j), then cyclics.
std::vector<VertexSet> all_cyclic_interval_edges(int k) {
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

int cmd_verify(int k, int parallel, EnumerationBudget budget) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const std::vector<VertexSet> edges = all_cyclic_interval_edges(k);
    const uint64_t total = uint64_t{1} << edges.size();

    std::atomic<uint64_t> lattice_count{0};
    std::atomic<uint64_t> next{0};
    std::vector<uint64_t> disagreements;
    std::mutex disagreements_mu;

    auto worker = [&] {
        constexpr uint64_t kChunk = 64;
        for (;;) {
            uint64_t begin = next.fetch_add(kChunk);
            if (begin >= total) return;
            uint64_t end = std::min(begin + kChunk, total);
            for (uint64_t subset = begin; subset < end; ++subset) {
                std::vector<VertexSet> chosen;
                for (size_t e = 0; e < edges.size(); ++e)
                    if (subset >> e & 1) chosen.push_back(edges[e]);
                auto h = CyclicIntervalHypergraph::parse(GroundInterval{1, k}, chosen);
                bool chr = satisfies_characterization(h).holds;
                bool brute = is_lattice_bruteforce(SourcePoset::build(as_generic(h), budget))
                                 .is_lattice;
                if (chr) lattice_count.fetch_add(1);
                if (chr != brute) {
                    std::lock_guard lock(disagreements_mu);
                    disagreements.push_back(subset);
                }
            }
        }
    };

    std::vector<std::thread> threads;
    for (int t = 1; t < parallel; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    std::sort(disagreements.begin(), disagreements.end());
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    std::cout << "hypergraphs checked: " << total << '\n'
              << "lattices:            " << lattice_count.load() << '\n'
              << "non-lattices:        " << total - lattice_count.load() << '\n'
              << "disagreements:       " << disagreements.size() << '\n'
              << "elapsed:             " << ms << " ms\n";
    if (!disagreements.empty()) {
        uint64_t subset = disagreements.front();
        std::vector<VertexSet> chosen;
        for (size_t e = 0; e < edges.size(); ++e)
            if (subset >> e & 1) chosen.push_back(edges[e]);
        std::cout << "first offending hypergraph:\n"
                  << to_text(CyclicIntervalHypergraph::parse(GroundInterval{1, k}, chosen));
        return kExitDisagreement;
    }
    return kExitLattice;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic interval hypergraphic posets: lattice checks, joins/meets, Hasse export"};
    app.require_subcommand(1);

    bool json = false;
    int budget_n = 9;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_option("--budget", budget_n, "enumeration cap on the ground size")
        ->check(CLI::PositiveNumber);

    std::string file;
    std::vector<std::string> orients;
    std::string format = "dot";
    bool list = false;
    int lo = 0, hi = 0;
    int sweep_n = 4;
    int parallel = 1;

    auto* check = app.add_subcommand("check", "decide whether the poset is a lattice");
    check->add_option("file", file)->required();

    auto* join = app.add_subcommand("join", "pseudo-join of two or more orientations");
    join->add_option("file", file)->required();
    join->add_option("--orient", orients, "source sequence, e.g. 1,3,5,3,5")
        ->required()
        ->expected(-2);

    auto* meet = app.add_subcommand("meet", "pseudo-meet of two or more orientations");
    meet->add_option("file", file)->required();
    meet->add_option("--orient", orients)->required()->expected(-2);

    auto* hasse_cmd = app.add_subcommand("hasse", "export the Hasse diagram");
    hasse_cmd->add_option("file", file)->required();
    hasse_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* orient_cmd = app.add_subcommand("orientations", "enumerate acyclic orientations");
    orient_cmd->add_option("file", file)->required();
    orient_cmd->add_flag("--list", list, "print sequences instead of the count");
    orient_cmd->add_flag("--count", "print the count (default)");

    auto* restrict_cmd = app.add_subcommand("restrict", "restrict to a sub-interval");
    restrict_cmd->add_option("file", file)->required();
    restrict_cmd->add_option("--lo", lo)->required();
    restrict_cmd->add_option("--hi", hi)->required();

    auto* verify = app.add_subcommand(
        "verify", "exhaustively cross-check the characterization against brute force");
    verify->add_option("--n", sweep_n, "ground size of the sweep")->check(CLI::Range(2, 5));
    verify->add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);
    EnumerationBudget budget{budget_n};

    try {
        if (*check) return cmd_check(file, json, budget);
        if (*join) return cmd_join(file, orients, false, json);
        if (*meet) return cmd_join(file, orients, true, json);
        if (*hasse_cmd) return cmd_hasse(file, format, budget);
        if (*orient_cmd) return cmd_orientations(file, list, budget);
        if (*restrict_cmd) return cmd_restrict(file, lo, hi);
        if (*verify) return cmd_verify(sweep_n, parallel, budget);
    } catch (const ParseError& e) {
        std::cerr << "input error";
        if (e.line > 0) std::cerr << " at line " << e.line;
        std::cerr << ": " << e.what() << '\n';
        return kExitInputError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitInputError;
    } catch (const InvalidSource& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const MismatchedHypergraph& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal disagreement: " << e.what() << '\n';
        return kExitDisagreement;
    }
    return kExitLattice;
}
