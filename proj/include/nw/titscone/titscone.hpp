#pragma once

#include <nw/exact/rational.hpp>
#include <nw/weylroots/weyl.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace nw::titscone {

using nw::cartangraph::CartanGraph;
using nw::exact::Rational;
using nw::weylroots::IntMatrix;

// One open simplicial cone of the arrangement: the image of the positive
// orthant under a groupoid morphism from the base object. The defining
// covectors are the columns of the inverse matrix; the extreme rays are the
// rows of the matrix itself (so covector i vanishes on every ray but ray i).
struct Chamber {
    size_t object = 0;         // endpoint of the realizing morphism
    IntMatrix w;               // morphism matrix
    IntMatrix winv;            // exact integer inverse (reflections are unimodular)
    std::vector<size_t> word;  // generator word that realized the chamber

    std::vector<long> covector(size_t i) const;  // column i of winv
    std::vector<long> ray(size_t j) const;       // row j of w

    // Sign (-1, 0, +1) of covector i evaluated at an exact rational point.
    int side(size_t i, const std::vector<Rational>& x) const;
    bool contains_open(const std::vector<Rational>& x) const;    // all covectors > 0
    bool contains_closed(const std::vector<Rational>& x) const;  // all covectors >= 0
};

// All chambers realized by morphisms from the base within the word bound,
// one chamber per distinct matrix; the base chamber (identity, the positive
// orthant) comes first.
std::vector<Chamber> chambers(const CartanGraph& g, size_t base, size_t bound);

// The per-object chamber map: each object reachable within the bound is
// realized along its unique morphism from the base. Lawful only when the
// graph is connected and simply connected within the bound; otherwise
// throws std::invalid_argument quoting the duplicated hom-set.
std::map<size_t, Chamber> realize(const CartanGraph& g, size_t base, size_t bound);

enum class ConeClass { finite, affine, indefinite, nonstandard };
std::string cone_class_name(ConeClass c);

// Classification of the cone spanned by the realized chambers, with the
// verification outcomes that back it up.
struct TitsReport {
    ConeClass classification = ConeClass::indefinite;
    std::vector<long> null_vector;  // strictly positive primitive left kernel; empty unless affine
    std::vector<long> delta;        // coefficients of the level covector (= null vector)
    bool has_positive_null = false;
    bool roots_closed_below_bound = false;
    // Affine verification: every chamber ray strictly positive under delta.
    bool half_space_verified = false;
    // Sum invariance: sum_i v_i beta_i equals the level covector on every chamber.
    bool sum_invariance_verified = false;
    bool consistent = true;  // the two classification signals agree
    size_t chamber_count = 0;
    std::set<std::vector<long>> hyperplanes;  // primitive sign-normalized wall covectors
    std::vector<std::string> notes;
};

TitsReport classify_cone(const CartanGraph& g, size_t base = 0, size_t bound = 10);

// Exact tessellation desk check on the level-1 slice of an affine cone:
// every rational grid point of the square [-side, side]^{rank-1} (the last
// slice coordinate being determined by delta = 1) is tested against every
// chamber's inequalities.
struct TilingReport {
    size_t grid_points = 0;
    size_t covered = 0;          // lies in at least one closed alcove
    size_t uncovered = 0;        // in no closed alcove: increase the word bound
    size_t interior_double = 0;  // strictly inside two or more alcoves (never lawful)
    size_t boundary = 0;         // covered, but on a wall of every alcove containing it
    std::vector<std::string> uncovered_samples;  // a few uncovered points, rendered

    bool ok() const { return interior_double == 0; }
};

TilingReport alcove_tiling_check(const CartanGraph& g, size_t base, size_t bound, long side, long denom);

// Plain-text dump of the alcove vertices (rays scaled onto the level-1
// slice) as exact rationals, one chamber per line.
std::string alcove_vertex_dump(const std::vector<Chamber>& chs, const std::vector<long>& delta);

}  // namespace nw::titscone
