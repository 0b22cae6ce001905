#include <doctest.h>

#include <nw/cartangraph/graph.hpp>
#include <nw/ydmod/iso.hpp>

#include "fixture_modules.hpp"

#include <string>
#include <vector>

using nw::cartangraph::abstract_graph;
using nw::cartangraph::CartanGraph;
using nw::cartangraph::connectivity;
using nw::cartangraph::explore;
using nw::cartangraph::ExploreResult;
using nw::cartangraph::locate;
using nw::cartangraph::relabel;
using nw::cartangraph::verify_axioms;
using nw::exact::CycNumber;
using nw::exact::Matrix;
using nw::groupdata::AbelianGroup;
using nw::groupdata::ThreeCocycle;
using nw::nichols::CapExceeded;
using nw::reflect::CartanMatrix;
using nw::ydmod::ModuleTuple;
using nw::ydmod::YDModule;

namespace {

const CartanMatrix kA2{{{2, -1}, {-1, 2}}};

ModuleTuple fixture_tuple() {
    const auto& fx = nwtest::Fixture::instance();
    return ModuleTuple{{fx.mod(0), fx.mod(1), fx.mod(2)}};
}

// Explored fixture graph, computed once per binary and relabeled by the
// catalog modules so objects read as module-name triples.
const ExploreResult& fixture_exploration() {
    static const ExploreResult res = [] {
        ExploreResult r = explore(fixture_tuple());
        const auto& fx = nwtest::Fixture::instance();
        std::vector<const YDModule*> refs;
        for (size_t m = 0; m < 6; ++m) refs.push_back(&fx.mod(m));
        relabel(r, refs);
        return r;
    }();
    return res;
}

ModuleTuple fixture_triple(size_t a, size_t b, size_t c) {
    const auto& fx = nwtest::Fixture::instance();
    return ModuleTuple{{fx.mod(a), fx.mod(b), fx.mod(c)}};
}

// One-dimensional module of degree generator `which`; qs[l] is the scalar by
// which generator l acts.
YDModule char_line(const ThreeCocycle& phi, const std::string& name, size_t which, std::vector<CycNumber> qs) {
    std::vector<Matrix> gens;
    for (const CycNumber& q : qs) {
        Matrix m(1, 1);
        m.at(0, 0) = q;
        gens.push_back(m);
    }
    std::vector<long> exps(qs.size(), 0);
    exps[which] = 1;
    return YDModule::from_generator_actions(phi, name, phi.group().element(exps), std::move(gens));
}

bool any_violation_mentions(const CartanGraph& g, const std::string& needle) {
    for (const std::string& v : g.violations)
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("abstract single-object graph of type A2 passes the axioms") {
    CartanGraph g = abstract_graph(2, {kA2}, {{0, 0}});
    CHECK(g.violations.empty());
    CHECK(g.objects() == 1);
    CHECK(g.is_standard());
    CHECK(g.connected_from(0));
    CHECK(g.closed);

    const std::string dot = g.dot();
    CHECK(dot.find("graph cartan {") != std::string::npos);
    CHECK(dot.find("n0 -- n0") != std::string::npos);  // self-loops are kept
    CHECK(dot.find("r1") != std::string::npos);
}

TEST_CASE("abstract graphs with broken axioms report the violations") {
    // r1 sends object 1 to itself but object 0 to 1: not involutive.
    {
        CartanGraph g = abstract_graph(2, {kA2, kA2}, {{1, 1}, {1, 0}});
        CHECK_FALSE(g.violations.empty());
        CHECK(any_violation_mentions(g, "CG1"));
    }
    // Row 0 changes across the r1 edge between the objects.
    {
        CartanMatrix other{{{2, -2}, {-1, 2}}};
        CartanGraph g = abstract_graph(2, {kA2, other}, {{1, 0}, {0, 1}});
        CHECK_FALSE(g.violations.empty());
        CHECK(any_violation_mentions(g, "CG2"));
    }
    // A positive off-diagonal entry is not a generalized Cartan matrix.
    {
        CartanMatrix bad{{{2, 1}, {1, 2}}};
        CartanGraph g = abstract_graph(2, {bad}, {{0, 0}});
        CHECK_FALSE(g.violations.empty());
    }
}

TEST_CASE("abstract graph with object-dependent matrices can still be lawful") {
    // Row 0 agrees across the r1 edge and r2 is a self-loop at both objects,
    // so CG2 holds even though the two matrices differ.
    CartanMatrix other{{{2, -1}, {-2, 2}}};
    CartanGraph g = abstract_graph(2, {kA2, other}, {{1, 0}, {0, 1}});
    CHECK(g.violations.empty());
    CHECK_FALSE(g.is_standard());
    CHECK(g.connected_from(0));
}

TEST_CASE("fixture exploration closes on the standard graph with 24 objects") {
    const ExploreResult& res = fixture_exploration();
    const CartanGraph& g = res.graph;

    CHECK(g.rank == 3);
    CHECK(g.objects() == 24);
    CHECK(g.closed);
    CHECK(g.violations.empty());
    CHECK(g.is_standard());
    CHECK(g.connected_from(0));

    const CartanMatrix affine{{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}};
    for (const CartanMatrix& cm : g.cartans) CHECK(cm == affine);

    // Reflections are involutive on objects (also covered by verify_axioms).
    for (size_t x = 0; x < g.objects(); ++x)
        for (size_t i = 0; i < g.rank; ++i) CHECK(g.edges[g.edges[x][i]][i] == x);

    // The words recorded for the objects are genuine reflection sequences.
    for (size_t x = 0; x < g.objects(); ++x) {
        size_t cur = 0;
        for (size_t i : res.words[x]) cur = g.edges[cur][i];
        CHECK(cur == x);
    }
}

TEST_CASE("fixture exploration finds the expected classes") {
    const ExploreResult& res = fixture_exploration();

    CHECK(locate(res, fixture_tuple()) == size_t{0});
    CHECK(locate(res, fixture_triple(0, 3, 4)).has_value());  // (M1,M4,M5)
    CHECK(locate(res, fixture_triple(1, 3, 5)).has_value());  // (M2,M4,M6)
    CHECK(locate(res, fixture_triple(1, 0, 2)).has_value());  // (M2,M1,M3)
    CHECK(locate(res, fixture_triple(3, 0, 4)).has_value());  // (M4,M1,M5)
    CHECK(locate(res, fixture_triple(3, 1, 5)).has_value());  // (M4,M2,M6)

    // r1 of the base object is the class of (M1,M4,M5).
    CHECK(res.graph.edges[0][0] == locate(res, fixture_triple(0, 3, 4)));

    // A tuple outside the orbit's slot order at the base: nothing matches
    // a mixed-rank tuple.
    const auto& fx = nwtest::Fixture::instance();
    CHECK_FALSE(locate(res, ModuleTuple{{fx.mod(0)}}).has_value());
}

TEST_CASE("fixture object map satisfies the rank-2 relation (r1 r2)^3 = id") {
    const CartanGraph& g = fixture_exploration().graph;
    for (size_t start = 0; start < g.objects(); ++start) {
        size_t x = start;
        for (int k = 0; k < 3; ++k) x = g.edges[g.edges[x][1]][0];
        CHECK(x == start);
    }
}

TEST_CASE("relabeled fixture graph names objects by catalog triples") {
    const ExploreResult& res = fixture_exploration();
    CHECK(res.graph.labels[0] == "(M1,M2,M3)");

    const auto r1 = locate(res, fixture_triple(0, 3, 4));
    REQUIRE(r1.has_value());
    CHECK(res.graph.labels[*r1] == "(M1,M4,M5)");

    const std::string dot = res.graph.dot();
    CHECK(dot.find("(M1,M2,M3)") != std::string::npos);
    CHECK(dot.find("(M1,M4,M5)") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
}

TEST_CASE("single-module exploration yields one self-paired object") {
    const auto& fx = nwtest::Fixture::instance();
    ExploreResult res = explore(ModuleTuple{{fx.mod(0)}});
    CHECK(res.graph.objects() == 1);
    CHECK(res.graph.closed);
    CHECK(res.graph.violations.empty());
    CHECK(res.graph.edges[0][0] == 0);  // the dual is isomorphic to the module
    CHECK(res.graph.cartans[0] == CartanMatrix{{{2}}});
}

TEST_CASE("exploration stops unfinished when the object budget is hit") {
    ExploreResult res = explore(fixture_tuple(), /*max_objects=*/5);
    CHECK_FALSE(res.graph.closed);
    CHECK(res.graph.objects() == 5);
}

TEST_CASE("exploration surfaces an undefined reflection with its sequence") {
    // Characters over Z4 x Z4 arranged so the seed's Cartan matrix exists
    // (chains stop after 1 and 3 steps) but the reflected pair has braiding
    // self-scalar 1 with cross product -i, so its chain never terminates.
    AbelianGroup g({4, 4});
    ThreeCocycle phi = ThreeCocycle::trivial(g);
    const CycNumber im = CycNumber::zeta(4, 1);
    YDModule v1 = char_line(phi, "V1", 0, {CycNumber(-1), CycNumber(1)});
    YDModule v2 = char_line(phi, "V2", 1, {im, im});
    REQUIRE(v1.validate().empty());
    REQUIRE(v2.validate().empty());

    ModuleTuple seed{{v1, v2}};
    CHECK(nw::reflect::cartan_of(seed, 4) == CartanMatrix{{{2, -1}, {-3, 2}}});
    CHECK_THROWS_WITH_AS(explore(seed, 16, /*cap=*/4), doctest::Contains("reached by sequence (1)"),
                         CapExceeded);

    // A seed whose own Cartan matrix is undefined fails up front.
    AbelianGroup g2({2, 2});
    ThreeCocycle phi2 = ThreeCocycle::trivial(g2);
    YDModule w1 = char_line(phi2, "W1", 0, {CycNumber(1), CycNumber(1)});
    YDModule w2 = char_line(phi2, "W2", 1, {CycNumber(-1), CycNumber(1)});
    CHECK_THROWS_WITH_AS(explore(ModuleTuple{{w1, w2}}, 16, /*cap=*/4),
                         doctest::Contains("cap exceeded at pair"), CapExceeded);
}

TEST_CASE("connectivity report: connected, simply connected only in small windows") {
    const CartanGraph& g = fixture_exploration().graph;

    const auto c3 = connectivity(g, 3);
    CHECK(c3.connected);
    CHECK(c3.simply_connected_within_bound);
    CHECK(c3.witness.empty());

    // From word length 4 onward some pair of objects is joined by two
    // distinct morphisms, so the groupoid is no longer simply connected
    // within the window.
    const auto c4 = connectivity(g, 4);
    CHECK(c4.connected);
    CHECK_FALSE(c4.simply_connected_within_bound);
    CHECK_FALSE(c4.witness.empty());

    const auto c12 = connectivity(g, 12);
    CHECK(c12.connected);
    CHECK_FALSE(c12.simply_connected_within_bound);

    // Two components that never meet.
    CartanGraph split = abstract_graph(2, {kA2, kA2}, {{0, 0}, {1, 1}});
    CHECK(split.violations.empty());
    CHECK_FALSE(connectivity(split, 2).connected);
}
