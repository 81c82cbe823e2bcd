#include <doctest.h>

#include "cihp/errors.hpp"
#include "cihp/hypergraph.hpp"
#include "helpers.hpp"

using namespace cihp;
using namespace cihp::testing;

TEST_CASE("parse classifies edges and preserves declaration order") {
    auto h = cih(1, 6, {{1, 2, 5, 6}, {1, 2, 3}, {2, 3, 4, 5, 6}});
    REQUIRE(h.edge_count() == 3);
    CHECK(h.edges()[0].kind == EdgeKind::Cyclic);
    CHECK(h.edges()[1].kind == EdgeKind::Regular);
    CHECK(h.edges()[2].kind == EdgeKind::Regular);
    CHECK(h.edges()[0].vertices == vs({1, 2, 5, 6}));
}

TEST_CASE("parse rejects sets that are neither shape") {
    CHECK_THROWS_AS(cih(1, 4, {{1, 3}}), EdgeShapeError);
    CHECK_THROWS_AS(cih(1, 5, {{1, 3, 5}}), EdgeShapeError);
    CHECK_THROWS_AS(cih(1, 5, {{2, 3, 5}}), EdgeShapeError);  // touches hi but not lo
}

TEST_CASE("parse drops singletons and merges duplicates") {
    auto h = cih(1, 4, {{2}, {1, 2}});
    REQUIRE(h.edge_count() == 1);
    CHECK(h.edges()[0].vertices == vs({1, 2}));
    CHECK(cih(1, 4, {{1, 2}, {1, 2}, {3, 4}}).edge_count() == 2);
}

TEST_CASE("parse rejects degenerate grounds") {
    CHECK_THROWS_AS(CyclicIntervalHypergraph::parse(GroundInterval{3, 3}, {}), EmptyGroundError);
    CHECK_THROWS_AS(CyclicIntervalHypergraph::parse(GroundInterval{0, 4}, {}), EmptyGroundError);
}

TEST_CASE("full ground set is cyclic, with the special wrap parts") {
    auto h = cih(1, 4, {{1, 2, 3, 4}});
    REQUIRE(h.edges()[0].kind == EdgeKind::Cyclic);
    CHECK(cyclic_low_part(h.edges()[0], h.ground()) == vs({1, 2, 3}));
    CHECK(cyclic_high_part(h.edges()[0], h.ground()) == vs({4}));

    auto w = cih(1, 6, {{1, 2, 5, 6}});
    CHECK(cyclic_low_part(w.edges()[0], w.ground()) == vs({1, 2}));
    CHECK(cyclic_high_part(w.edges()[0], w.ground()) == vs({5, 6}));
}

TEST_CASE("classification partition over every subset, n <= 5") {
    // Generate the cyclic shapes explicitly from (i, j) pairs and compare
    // against classify() for every subset of the ground.
    for (int n = 2; n <= 5; ++n) {
        GroundInterval g{1, n};
        std::vector<VertexSet> regular, cyclic;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                VertexSet run = VertexSet::interval(i, j);
                if (run != g.vertices()) regular.push_back(run);
                cyclic.push_back(VertexSet::interval(j, n) | VertexSet::interval(1, i));
            }
        for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
            VertexSet s;
            for (int v = 1; v <= n; ++v)
                if (bits >> (v - 1) & 1) s.add(v);
            auto kind = classify(s, g);
            bool is_reg = std::find(regular.begin(), regular.end(), s) != regular.end();
            bool is_cyc = std::find(cyclic.begin(), cyclic.end(), s) != cyclic.end();
            CHECK(!(is_reg && is_cyc));
            if (is_reg) CHECK(kind == EdgeKind::Regular);
            else if (is_cyc) CHECK(kind == EdgeKind::Cyclic);
            else CHECK(!kind.has_value());
        }
    }
}

TEST_CASE("restriction reproduces the worked examples") {
    auto h1 = cih(1, 5, {{1, 2, 5}, {3, 4, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}});
    auto r1 = restrict(h1, GroundInterval{1, 4});
    REQUIRE(r1.edge_count() == 4);
    CHECK(r1.edges()[0].vertices == vs({1, 2}));
    CHECK(r1.edges()[1].vertices == vs({3, 4}));
    CHECK(r1.edges()[2].vertices == vs({1, 2, 4}));
    CHECK(r1.edges()[3].vertices == vs({1, 3, 4}));

    auto h2 = cih(1, 5, {{2, 3, 4}, {1, 2, 3, 5}, {1, 3, 4, 5}});
    auto r2 = restrict(h2, GroundInterval{1, 4});
    REQUIRE(r2.edge_count() == 3);
    CHECK(r2.edges()[0].vertices == vs({2, 3, 4}));
    CHECK(r2.edges()[1].vertices == vs({1, 2, 3}));
    CHECK(r2.edges()[2].vertices == vs({1, 3, 4}));

    auto h3 = cih(1, 6, {{1, 2, 5, 6}, {1, 2, 3}, {2, 3, 4, 5, 6}});
    auto r3 = restrict(h3, GroundInterval{2, 5});
    REQUIRE(r3.edge_count() == 3);
    CHECK(r3.edges()[0].vertices == vs({2, 5}));
    CHECK(r3.edges()[0].kind == EdgeKind::Cyclic);
    CHECK(r3.edges()[1].vertices == vs({2, 3}));
    CHECK(r3.edges()[1].kind == EdgeKind::Regular);
    CHECK(r3.edges()[2].vertices == vs({2, 3, 4, 5}));
    CHECK(r3.edges()[2].kind == EdgeKind::Cyclic);  // equals the sub-ground
}

TEST_CASE("restriction closure: every restriction re-validates, exhaustive n = 4") {
    auto edges = all_edges(4);
    for (uint64_t subset = 0; subset < (uint64_t{1} << edges.size()); ++subset) {
        auto h = subset_hypergraph(4, edges, subset);
        for (int x = 1; x < 4; ++x)
            for (int y = x + 1; y <= 4; ++y)
                CHECK_NOTHROW(restrict(h, GroundInterval{x, y}));
    }
}

TEST_CASE("regular intersection closure") {
    auto bad = cih(1, 4, {{2, 3, 4}, {1, 2, 3}, {1, 3, 4}});
    auto w = regular_closure_violation(bad);
    REQUIRE(w.has_value());
    CHECK(w->a.vertices == vs({2, 3, 4}));
    CHECK(w->b.vertices == vs({1, 2, 3}));
    CHECK(w->missing == vs({2, 3}));

    auto complete = cih(1, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 2, 3}, {2, 3, 4}, {1, 2, 3, 4}});
    CHECK(!regular_closure_violation(complete).has_value());

    CHECK(!regular_closure_violation(cih(1, 4, {{1, 2}, {3, 4}})).has_value());

    // singleton intersection imposes nothing
    CHECK(!regular_closure_violation(cih(1, 4, {{1, 2}, {2, 3}})).has_value());
}

TEST_CASE("hugging quadruples of the minimal examples") {
    auto fixless = cih(1, 4, {{1, 2}, {1, 2, 4}, {3, 4}, {1, 3, 4}});
    auto quads = hugging_quadruples(fixless);
    REQUIRE(quads.size() == 1);
    CHECK(quads[0].i.vertices == vs({1, 2}));
    CHECK(quads[0].i_cyc.vertices == vs({1, 2, 4}));
    CHECK(quads[0].j.vertices == vs({3, 4}));
    CHECK(quads[0].j_cyc.vertices == vs({1, 3, 4}));

    CHECK(hugging_quadruples(cih(1, 4, {{1, 2}, {2, 3}, {3, 4}})).empty());

    auto with_fix = cih(1, 4, {{1, 2}, {1, 2, 4}, {2, 3}, {3, 4}, {1, 3, 4}});
    REQUIRE(hugging_quadruples(with_fix).size() == 1);
}

TEST_CASE("fix detection") {
    auto with_fix = cih(1, 4, {{1, 2}, {1, 2, 4}, {2, 3}, {3, 4}, {1, 3, 4}});
    auto q1 = hugging_quadruples(with_fix).front();
    auto fix = find_fix(with_fix, q1);
    REQUIRE(fix.has_value());
    CHECK(fix->vertices == vs({2, 3}));

    auto fixless = cih(1, 4, {{1, 2}, {1, 2, 4}, {3, 4}, {1, 3, 4}});
    CHECK(!find_fix(fixless, hugging_quadruples(fixless).front()).has_value());

    // the fix may be a quadruple member or the full ground set
    auto full = cih(1, 4, {{1, 2}, {1, 2, 4}, {3, 4}, {1, 3, 4}, {1, 2, 3, 4}});
    auto q2 = hugging_quadruples(full).front();
    auto fix2 = find_fix(full, q2);
    REQUIRE(fix2.has_value());
    CHECK(fix2->vertices == vs({1, 2, 3, 4}));
}

TEST_CASE("characterization verdicts and witnesses") {
    auto fixless = cih(1, 4, {{1, 2}, {1, 2, 4}, {3, 4}, {1, 3, 4}});
    auto res = satisfies_characterization(fixless);
    REQUIRE(!res.holds);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->interval == GroundInterval{1, 4});
    auto* fq = std::get_if<FixlessQuadrupleWitness>(&res.witness->violation);
    REQUIRE(fq != nullptr);
    CHECK(fq->quadruple.i.vertices == vs({1, 2}));

    auto tamari = cih(1, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 2, 3}, {2, 3, 4}, {1, 2, 3, 4}});
    CHECK(satisfies_characterization(tamari).holds);

    // the obstruction only appears after restricting to [1,4]
    auto hidden = cih(1, 5, {{1, 2, 5}, {3, 4, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}});
    auto res2 = satisfies_characterization(hidden);
    REQUIRE(!res2.holds);
    CHECK(res2.witness->interval == GroundInterval{1, 4});
    CHECK(std::holds_alternative<FixlessQuadrupleWitness>(res2.witness->violation));
}

TEST_CASE("characterization is hereditary under restriction, exhaustive n = 4") {
    auto edges = all_edges(4);
    for (uint64_t subset = 0; subset < (uint64_t{1} << edges.size()); ++subset) {
        auto h = subset_hypergraph(4, edges, subset);
        if (!satisfies_characterization(h).holds) continue;
        for (int x = 1; x < 4; ++x)
            for (int y = x + 1; y <= 4; ++y)
                CHECK(satisfies_characterization(restrict(h, GroundInterval{x, y})).holds);
    }
}

TEST_CASE("singleton neutrality of parse") {
    std::vector<VertexSet> with = {vs({1}), vs({1, 2}), vs({3}), vs({2, 3, 4})};
    std::vector<VertexSet> without = {vs({1, 2}), vs({2, 3, 4})};
    CHECK(CyclicIntervalHypergraph::parse(GroundInterval{1, 4}, with) ==
          CyclicIntervalHypergraph::parse(GroundInterval{1, 4}, without));
}
