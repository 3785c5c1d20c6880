// Birkhoff-surface bookkeeping: boundary multicurve resolution, the pair
// of pants and the genus-one section, first-return data, trace descent,
// the orbifold section census and the dynamical audit.
#pragma once

#include <string>
#include <vector>

#include "suspflow/mat2.hpp"
#include "suspflow/rlword.hpp"
#include "suspflow/torus_geom.hpp"

namespace suspflow::birkhoff {

// Homology class (longitude, meridian) on a blown-up boundary torus.
struct CurveClass {
    Zint longitude{0}, meridian{0};
    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

struct BoundaryEntry {
    std::string orbit;      // "gamma_O", "gamma_M", "gamma_N", or a label
    Zint multiplicity;      // signed wrapping count, = circles * longitude
    Zint circle_count;      // parallel embedded circles over this orbit
    CurveClass per_circle;  // primitive class of each circle
};

struct SurfaceData {
    Zint euler{0};  // Euler characteristic measured in the blown-up manifold
    std::vector<BoundaryEntry> boundary;

    Zint circle_count() const;
    Zint orbit_count() const;
    Zint genus() const;  // from chi = 2 - 2g - circles; asserts integrality
};

// Oriented resolution of transverse essential curves on one torus:
// total class is the componentwise sum, and the resolved multicurve has
// gcd(|P|,|Q|) parallel embedded components. Refuses cancelling inputs
// (antiparallel classes or zero total).
std::pair<CurveClass, Zint> resolve_multicurve_on_torus(
    const std::vector<CurveClass>& classes);

// The pair of pants over the parallelogram: chi = -1, genus 0;
// boundary -gamma_M - gamma_N + 2 gamma_O, degenerating to
// -2 gamma_M + 2 gamma_O for words of the form R L^n or L^n R.
SurfaceData pair_of_pants_data(const RLWord& w);

// One disc removal on surface 1 or 2 at the named orbit.
struct Puncture {
    int surface;  // 1 or 2
    std::string orbit;
};

// Euler characteristic adds after disc removals; boundary curves over a
// common orbit are merged by the torus resolution.
SurfaceData fried_sum_data(const SurfaceData& s1, const SurfaceData& s2,
                           const std::vector<Puncture>& punctures);

// Horizontal torus + pants: genus 1 with 4 circles over 3 orbits
// (generic) or 3 circles over 2 orbits (degenerate).
SurfaceData genus_one_section(const RLWord& w);

struct FirstReturnData {
    Mat2 matrix;       // equals word_to_matrix(w)
    Vec2 alpha, beta;  // section basis classes (d, -c), (d-b, a-c)
};

// First-return map of the suspension flow on the genus-one section,
// with the homology-basis certificate rw*alpha = (1,0), rw*beta = (1,1)
// checked exactly.
FirstReturnData first_return_matrix(const RLWord& w);

// One trace-descent move: a rotation g w' of w with g a letter occurring
// at least twice and w' mixed; tr(w') < tr(w).
std::pair<char, RLWord> minakawa_step(const RLWord& w);

struct DescentStep {
    RLWord before;
    char peeled;
    RLWord after;
    Zint trace_before, trace_after;
};

struct DescentChain {
    std::vector<DescentStep> steps;  // |w| - 2 steps down to the RL class
    Zint ghys_bound() const { return Zint(3) * Zint(steps.size()); }
};

DescentChain descent_chain(const RLWord& w);

struct CensusData {
    SurfaceData surface;  // chi = -4g - n - 3, genus 1
    Zint curve_count;     // 4g + n + 3 boundary geodesics
    Zint chi_handles;     // -4g
    Zint chi_cones;       // 1 - n
    Zint chi_connector;   // -4
};

// Genus-one section census for the orbifold of genus g >= 1 with cone
// orders k_i >= 3 (n >= 1). Formula-level only.
CensusData orbifold_section_census(long genus, const std::vector<long>& orders);

struct AuditRow {
    long m;
    Zint lhs;           // tr(W^m) - 2
    Zint interior_sum;  // sum of intersection over non-boundary orbits with
                        // intersection dividing m
    Zint residual;      // lhs - interior_sum
};

struct AuditTable {
    RLWord w;
    std::vector<AuditRow> rows;
    Zint boundary_circles;
    // Per boundary circle, a fitted period p with residual(m) = #{c : p_c | m};
    // 0 marks a circle that never contributes within the table range.
    std::vector<long> fitted_periods;
    bool fit_ok;
};

// Lefschetz-style audit of the section: residuals stay within
// [0, boundary circles] and are explained by a per-circle period
// assignment fitted from the data.
AuditTable lefschetz_audit(const RLWord& w, long max_m);

}  // namespace suspflow::birkhoff
