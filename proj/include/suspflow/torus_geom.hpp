// Exact rational geometry on T^2: the fixed-point formula, the section
// parallelogram and its embedding classification, periodic-orbit
// intersection counts, and stable-direction tangency counting.
#pragma once

#include <vector>

#include "suspflow/mat2.hpp"
#include "suspflow/rlword.hpp"
#include "suspflow/sl2z.hpp"
#include "suspflow/torus_point.hpp"

namespace suspflow::torus_geom {

// A lifted (plane) point, not reduced mod Z^2.
struct PlanePointQ {
    Qrat x{0}, y{0};
    friend bool operator==(const PlanePointQ&, const PlanePointQ&) = default;
};

struct FormulaPoints {
    std::vector<TorusPointQ> points;  // k-order of first occurrence, deduplicated
    bool collapsed;                   // true when fewer than tr-2 distinct points
};

// The points k/(t-2) * (d-1, -c) mod Z^2 for rw = (a b; c d), t = tr >= 3,
// each verified fixed by rw. May be a proper subset of the fixed set when
// gcd effects collapse the list; the lattice enumeration is authoritative.
FormulaPoints formula_fixed_points(const Mat2& rw);

enum class Embedding { Generic, DegenerateMN };

// The quadrilateral with lifted vertices O=(0,0), N, O'=(1,0), M built
// from rw = word_to_matrix(R w). Sides: r1 = [O, M], r0 = [O', M],
// s0 = [O, N], s1 = [O', N]. Strictly convex for every mixed w.
struct ParallelogramData {
    RLWord w;
    Mat2 rw;
    PlanePointQ lift_o, lift_o2, lift_m, lift_n;
    Embedding embedding;

    TorusPointQ vertex_o() const { return TorusPointQ::reduce(lift_o.x, lift_o.y); }
    TorusPointQ vertex_m() const { return TorusPointQ::reduce(lift_m.x, lift_m.y); }
    TorusPointQ vertex_n() const { return TorusPointQ::reduce(lift_n.x, lift_n.y); }
};

ParallelogramData build_parallelogram(const RLWord& w);

enum class Containment { Interior, Boundary, Outside };

// Tests every lift q + (i,j), i,j in {-1,0,1}, against the closed
// quadrilateral with exact orientation predicates. The open diagonal
// O-O' lies in the strict interior. A point that is both interior and
// on a side through different lifts reports Boundary.
Containment point_in_parallelogram(const ParallelogramData& p, const TorusPointQ& q);

struct OrbitRecord {
    TorusPointQ representative;  // least point of the orbit
    long period;                 // least period under rw
    long passes;                 // orbit points strictly inside the parallelogram
    long intersection;           // period + passes
    bool boundary_orbit;         // orbit of O, M or N
};

// One record per rw-orbit of least period <= max_period, sorted by
// (period, representative). Requires rw to be literally R * (positive
// mixed word). Throws AmbiguousCrossing when a non-vertex orbit point
// lands exactly on a side.
std::vector<OrbitRecord> enumerate_periodic_orbits(const Mat2& rw, long max_period);
std::vector<OrbitRecord> enumerate_periodic_orbits(const RLWord& w, long max_period);

// Number of corner sectors of the parallelogram (two at O, one at M, one
// at N) containing the stable eigendirection of rw; equals 2. All slope
// comparisons are exact sign tests of integers p + q*sqrt(D).
int stable_tangency_count(const RLWord& w);

}  // namespace suspflow::torus_geom
