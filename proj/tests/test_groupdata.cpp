#include <doctest.h>

#include <nw/groupdata/cocycle.hpp>
#include <nw/groupdata/coherence.hpp>
#include <nw/groupdata/group.hpp>

#include <map>
#include <random>

using nw::exact::CycNumber;
using nw::groupdata::AbelianGroup;
using nw::groupdata::BracketTree;
using nw::groupdata::GroupElement;
using nw::groupdata::ThreeCocycle;
using nw::groupdata::TwoCocycle;

namespace {

const CycNumber kOne = CycNumber::one();
const CycNumber kMinusOne = -CycNumber::one();

AbelianGroup z2cubed() { return AbelianGroup({2, 2, 2}); }

ThreeCocycle standard_sign_cocycle(const AbelianGroup& g) {
    return ThreeCocycle::from_formula(g, "minus_one_pow(i3*j2*k1)");
}

}  // namespace

TEST_CASE("abelian group arithmetic and enumeration") {
    const AbelianGroup g({4, 2});
    CHECK(g.order() == 8);
    CHECK(g.rank() == 2);
    CHECK(g.is_identity(g.identity()));
    CHECK(g.mul(g.generator(0), g.generator(0)) == g.element({2, 0}));
    CHECK(g.pow(g.generator(0), 5) == g.generator(0));
    CHECK(g.pow(g.generator(0), -1) == g.element({3, 0}));
    CHECK(g.inv(g.element({3, 1})) == g.element({1, 1}));
    CHECK(g.element({-1, 3}) == g.element({3, 1}));

    const auto els = g.elements();
    REQUIRE(els.size() == 8);
    for (size_t i = 0; i < els.size(); ++i) CHECK(g.index_of(els[i]) == i);

    CHECK(g.str(g.identity()) == "e");
    CHECK(g.str(g.generator(1)) == "h2");
    CHECK(g.str(g.element({3, 1})) == "h1^3*h2");
}

TEST_CASE("sign cocycle evaluates the pinned triples") {
    const AbelianGroup g = z2cubed();
    const ThreeCocycle phi = standard_sign_cocycle(g);
    const GroupElement h1 = g.generator(0), h2 = g.generator(1), h3 = g.generator(2);

    CHECK(phi.eval(h3, h2, h1) == kMinusOne);
    CHECK(phi.eval(g.mul(h1, h3), h2, h1) == kMinusOne);
    CHECK(phi.eval(h1, h2, h3) == kOne);
    CHECK(phi.eval(h1, h1, h1) == kOne);
    CHECK(phi.scalar_order() == 2);

    // Normalization at the identity in every slot.
    for (const auto& a : g.elements())
        for (const auto& b : g.elements()) {
            CHECK(phi.eval(g.identity(), a, b) == kOne);
            CHECK(phi.eval(a, g.identity(), b) == kOne);
            CHECK(phi.eval(a, b, g.identity()) == kOne);
        }

    // Full closed form: the exponent is (third component of the first
    // argument) * (second of the second) * (first of the third).
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            for (const auto& c : g.elements()) {
                const bool flip = (a.e[2] * b.e[1] * c.e[0]) % 2 == 1;
                CHECK(phi.eval(a, b, c) == (flip ? kMinusOne : kOne));
            }
}

TEST_CASE("formula parser handles arithmetic and rejects malformed input") {
    const AbelianGroup z4({4});
    // Carry cocycle on Z_4: exponent is i1 * floor((j1 + k1) / 4).
    const ThreeCocycle carry = ThreeCocycle::from_formula(z4, "zeta_pow(4, i1*((j1+k1)/4))");
    const GroupElement a = z4.element({3}), b = z4.element({2}), c = z4.element({3});
    CHECK(carry.eval(a, b, c) == CycNumber::zeta(4, 3));  // carry of 2+3 over 4
    CHECK(carry.eval(a, b, z4.element({1})) == kOne);
    CHECK(carry.scalar_order() == 4);

    const ThreeCocycle trivial = ThreeCocycle::trivial(z4);
    CHECK(trivial.eval(a, b, c) == kOne);
    CHECK(trivial.scalar_order() == 1);
    CHECK(trivial.validate().empty());

    // Expression arithmetic: unary minus distributes over the product, and
    // (1-1)/2 = 0 makes the second factor trivial here.
    const ThreeCocycle fancy = ThreeCocycle::from_formula(z4, "zeta_pow(4, -i1*j1*k1) * zeta_pow(2, (i1-1)/2)");
    CHECK(fancy.eval(z4.element({1}), z4.element({1}), z4.element({1})) == CycNumber::zeta(4, -1));

    CHECK_THROWS_AS(ThreeCocycle::from_formula(z4, "cos(i1)"), std::invalid_argument);
    CHECK_THROWS_AS(ThreeCocycle::from_formula(z4, "minus_one_pow(i2)"), std::invalid_argument);
    CHECK_THROWS_AS(ThreeCocycle::from_formula(z4, "minus_one_pow(x1)"), std::invalid_argument);
    CHECK_THROWS_AS(ThreeCocycle::from_formula(z4, "zeta_pow(0, i1)"), std::invalid_argument);
    CHECK_THROWS_AS(ThreeCocycle::from_formula(z4, "minus_one_pow(i1) trailing"), std::invalid_argument);
    CHECK_THROWS_AS(ThreeCocycle::from_formula(z4, "minus_one_pow(i1"), std::invalid_argument);
}

TEST_CASE("floor division in formulas rounds toward negative infinity") {
    const AbelianGroup z4({4});
    // (i1 - 3) / 2 at i1 = 0 is floor(-3/2) = -2, so zeta_4^(-2) = -1.
    const ThreeCocycle f = ThreeCocycle::from_formula(z4, "zeta_pow(4, (i1-3)/2)");
    CHECK(f.eval(z4.element({0}), z4.identity(), z4.identity()) == kMinusOne);
    CHECK(f.eval(z4.element({3}), z4.identity(), z4.identity()) == kOne);
    CHECK(f.eval(z4.element({1}), z4.identity(), z4.identity()) == CycNumber::zeta(4, -1));
}

TEST_CASE("three-cocycle identity holds exhaustively for shipped families") {
    SUBCASE("sign cocycle on Z2^3") {
        const AbelianGroup g = z2cubed();
        CHECK(standard_sign_cocycle(g).validate().empty());
    }
    SUBCASE("carry cocycle on Z16") {
        const AbelianGroup g({16});
        const ThreeCocycle phi = ThreeCocycle::from_formula(g, "zeta_pow(16, i1*((j1+k1)/16))");
        CHECK(phi.scalar_order() == 16);
        CHECK(phi.validate().empty());
    }
    SUBCASE("product of carry cocycles on Z4 x Z2") {
        const AbelianGroup g({4, 2});
        const ThreeCocycle phi =
            ThreeCocycle::from_formula(g, "zeta_pow(4, i1*((j1+k1)/4)) * minus_one_pow(i2*((j2+k2)/2))");
        CHECK(phi.scalar_order() == 4);
        CHECK(phi.validate().empty());
    }
}

TEST_CASE("table backend matches the formula it was built from") {
    const AbelianGroup g = z2cubed();
    const ThreeCocycle phi = standard_sign_cocycle(g);

    std::map<std::array<size_t, 3>, CycNumber> table;
    const auto els = g.elements();
    for (size_t i = 0; i < els.size(); ++i)
        for (size_t j = 0; j < els.size(); ++j)
            for (size_t k = 0; k < els.size(); ++k) {
                const CycNumber v = phi.eval(els[i], els[j], els[k]);
                if (!v.is_one()) table[{i, j, k}] = v;
            }
    CHECK(table.size() == 64);  // an eighth of the 512 triples pick up the sign

    const ThreeCocycle tab = ThreeCocycle::from_table(g, table);
    CHECK(tab.scalar_order() == 2);
    CHECK(tab.validate().empty());
    for (const auto& a : els)
        for (const auto& b : els)
            for (const auto& c : els) CHECK(tab.eval(a, b, c) == phi.eval(a, b, c));
}

TEST_CASE("validation reports broken tables") {
    const AbelianGroup g = z2cubed();
    const auto els = g.elements();

    SUBCASE("normalization failure") {
        std::map<std::array<size_t, 3>, CycNumber> table;
        table[{0, 1, 2}] = kMinusOne;  // identity in the first slot
        const auto report = ThreeCocycle::from_table(g, table).validate();
        REQUIRE(!report.empty());
        CHECK(report.front().find("not normalized") != std::string::npos);
    }
    SUBCASE("cocycle identity failure") {
        std::map<std::array<size_t, 3>, CycNumber> table;
        table[{1, 1, 1}] = kMinusOne;  // lone sign cannot satisfy the identity
        const auto report = ThreeCocycle::from_table(g, table).validate();
        REQUIRE(!report.empty());
        CHECK(report.front().find("3-cocycle identity fails") != std::string::npos);
    }
}

TEST_CASE("derived projective two-cocycles") {
    const AbelianGroup g = z2cubed();
    const ThreeCocycle phi = standard_sign_cocycle(g);
    const GroupElement h1 = g.generator(0), h2 = g.generator(1), h3 = g.generator(2);

    SUBCASE("identity degree gives the constant cocycle") {
        const TwoCocycle te = derive_two_cocycle(phi, g.identity());
        for (const auto& a : g.elements())
            for (const auto& b : g.elements()) CHECK(te.eval(a, b) == kOne);
    }

    SUBCASE("pinned values for degree h1") {
        const TwoCocycle t1 = derive_two_cocycle(phi, h1);
        CHECK(t1.eval(h3, h2) == kMinusOne);
        CHECK(t1.eval(h2, h3) == kOne);
    }

    SUBCASE("closed form and 2-cocycle identity for every degree") {
        for (const auto& gdeg : g.elements()) {
            const TwoCocycle t = derive_two_cocycle(phi, gdeg);
            CHECK(t.base_degree() == gdeg);
            CHECK(t.validate().empty());
            for (const auto& e : g.elements())
                for (const auto& f : g.elements()) {
                    const unsigned expo =
                        f.e[0] * e.e[1] * gdeg.e[2] + gdeg.e[0] * f.e[1] * e.e[2] + f.e[0] * gdeg.e[1] * e.e[2];
                    CHECK(t.eval(e, f) == (expo % 2 == 1 ? kMinusOne : kOne));
                }
        }
    }

    SUBCASE("multiplicativity in the degree on this fixture") {
        const auto els = g.elements();
        for (const auto& ga : els)
            for (const auto& gb : els) {
                const TwoCocycle ta = derive_two_cocycle(phi, ga), tb = derive_two_cocycle(phi, gb);
                const TwoCocycle tab = derive_two_cocycle(phi, g.mul(ga, gb));
                for (const auto& e : els)
                    for (const auto& f : els) CHECK(ta.eval(e, f) * tb.eval(e, f) == tab.eval(e, f));
            }
    }
}

TEST_CASE("bracket trees and rebracketing scalars") {
    const AbelianGroup g = z2cubed();
    const ThreeCocycle phi = standard_sign_cocycle(g);
    const GroupElement h1 = g.generator(0), h2 = g.generator(1), h3 = g.generator(2);

    SUBCASE("structure accessors") {
        const BracketTree t = BracketTree::left_comb(g, {h1, h2, h3});
        CHECK(t.leaf_count() == 3);
        CHECK(t.degree() == g.element({1, 1, 1}));
        CHECK(t.left().leaf_count() == 2);
        CHECK(t.right().is_leaf());
        CHECK(t.str() == "((h1 h2) h3)");
        CHECK(BracketTree::right_comb(g, {h1, h2, h3}).str() == "(h1 (h2 h3))");
        CHECK(t.leaf_degrees() == std::vector<GroupElement>{h1, h2, h3});
        CHECK(t == BracketTree::node(BracketTree::node(BracketTree::leaf(g, h1), BracketTree::leaf(g, h2)),
                                     BracketTree::leaf(g, h3)));
        CHECK(t != BracketTree::right_comb(g, {h1, h2, h3}));
    }

    SUBCASE("identical trees give scalar one") {
        std::mt19937 rng(7);
        for (int it = 0; it < 20; ++it) {
            std::vector<GroupElement> degs;
            for (int l = 0; l < 5; ++l) degs.push_back(g.element_at(rng() % g.order()));
            const BracketTree t = nw::groupdata::random_tree(g, degs, rng);
            CHECK(coherence_scalar(phi, t, t) == kOne);
        }
    }

    SUBCASE("single associator move equals one cocycle value") {
        for (const auto& a : g.elements())
            for (const auto& b : g.elements())
                for (const auto& c : g.elements()) {
                    const BracketTree from = BracketTree::right_comb(g, {a, b, c});
                    const BracketTree to = BracketTree::left_comb(g, {a, b, c});
                    CHECK(coherence_scalar(phi, from, to) == phi.eval(a, b, c));
                }
    }

    SUBCASE("pinned example: right to left comb on (h3, h2, h1)") {
        const BracketTree from = BracketTree::right_comb(g, {h3, h2, h1});
        const BracketTree to = BracketTree::left_comb(g, {h3, h2, h1});
        CHECK(coherence_scalar(phi, from, to) == kMinusOne);
    }

    SUBCASE("inverse direction inverts the scalar") {
        std::mt19937 rng(11);
        for (int it = 0; it < 40; ++it) {
            std::vector<GroupElement> degs;
            const size_t n = 3 + rng() % 4;
            for (size_t l = 0; l < n; ++l) degs.push_back(g.element_at(rng() % g.order()));
            const BracketTree t1 = nw::groupdata::random_tree(g, degs, rng);
            const BracketTree t2 = nw::groupdata::random_tree(g, degs, rng);
            CHECK(coherence_scalar(phi, t1, t2) * coherence_scalar(phi, t2, t1) == kOne);
        }
    }

    SUBCASE("composition along a middle tree") {
        std::mt19937 rng(13);
        for (int it = 0; it < 40; ++it) {
            std::vector<GroupElement> degs;
            const size_t n = 3 + rng() % 4;
            for (size_t l = 0; l < n; ++l) degs.push_back(g.element_at(rng() % g.order()));
            const BracketTree t1 = nw::groupdata::random_tree(g, degs, rng);
            const BracketTree t2 = nw::groupdata::random_tree(g, degs, rng);
            const BracketTree t3 = nw::groupdata::random_tree(g, degs, rng);
            CHECK(coherence_scalar(phi, t1, t2) * coherence_scalar(phi, t2, t3) == coherence_scalar(phi, t1, t3));
        }
    }

    SUBCASE("path independence on 200 random trees") {
        std::mt19937 rng(17);
        for (int it = 0; it < 200; ++it) {
            std::vector<GroupElement> degs;
            const size_t n = 3 + rng() % 5;
            for (size_t l = 0; l < n; ++l) degs.push_back(g.element_at(rng() % g.order()));
            const BracketTree t1 = nw::groupdata::random_tree(g, degs, rng);
            const BracketTree t2 = nw::groupdata::random_tree(g, degs, rng);
            const CycNumber canonical = coherence_scalar(phi, t1, t2);
            CHECK(canonical == coherence_scalar_random_path(phi, t1, t2, rng));
        }
    }

    SUBCASE("degree-sequence mismatch is an error") {
        const BracketTree a = BracketTree::left_comb(g, {h1, h2});
        const BracketTree b = BracketTree::left_comb(g, {h2, h1});
        const BracketTree c = BracketTree::left_comb(g, {h1, h2, h3});
        CHECK_THROWS_AS(coherence_scalar(phi, a, b), std::invalid_argument);
        CHECK_THROWS_AS(coherence_scalar(phi, a, c), std::invalid_argument);
    }
}
