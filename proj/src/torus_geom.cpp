#include "suspflow/torus_geom.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace suspflow::torus_geom {

using sl2z::word_to_matrix;

namespace {

TorusPointQ apply_torus(const Mat2& m, const TorusPointQ& p) {
    return TorusPointQ::reduce(Qrat(m.a) * p.x + Qrat(m.b) * p.y,
                               Qrat(m.c) * p.x + Qrat(m.d) * p.y);
}

PlanePointQ apply_plane(const Mat2& m, const PlanePointQ& p) {
    return PlanePointQ{Qrat(m.a) * p.x + Qrat(m.b) * p.y,
                       Qrat(m.c) * p.x + Qrat(m.d) * p.y};
}

}  // namespace

FormulaPoints formula_fixed_points(const Mat2& rw) {
    if (rw.det() != 1)
        throw DomainError(Err::NotUnimodular, "formula needs determinant +1");
    Zint t = rw.trace();
    if (t < 3) throw DomainError(Err::NotHyperbolic, "trace " + t.str() + " < 3");
    Zint delta = t - 2;
    FormulaPoints out;
    std::set<TorusPointQ> seen;
    for (Zint k = 0; k < delta; ++k) {
        TorusPointQ p = TorusPointQ::reduce(Qrat(k * (rw.d - 1), delta),
                                            Qrat(-k * rw.c, delta));
        if (!seen.insert(p).second) continue;
        if (!(apply_torus(rw, p) == p))
            throw DomainError(Err::CertificateFailure,
                              "formula point not fixed: " + to_string(p));
        out.points.push_back(p);
    }
    out.collapsed = Zint(out.points.size()) < delta;
    return out;
}

ParallelogramData build_parallelogram(const RLWord& w) {
    if (!w.mixed()) throw DomainError(Err::NotMixed, "word " + w.letters());
    Mat2 rw = gen_r() * word_to_matrix(w);
    Zint t = rw.trace();
    Zint delta = t - 2;
    ParallelogramData p{w,
                        rw,
                        PlanePointQ{0, 0},
                        PlanePointQ{1, 0},
                        PlanePointQ{Qrat(rw.d - 1, delta), Qrat(-rw.c, delta)},
                        PlanePointQ{Qrat(rw.a - 1, delta), Qrat(rw.c, delta)},
                        Embedding::Generic};

    // Triangle confinement: 0 < c <= a-1 and d-1 <= t-2, so N sits in the
    // closed triangle (0,0),(1,0),(1,1) and M in its reflection.
    if (!(rw.c > 0 && rw.c <= rw.a - 1 && rw.d >= 1 && rw.d - 1 <= delta))
        throw DomainError(Err::CertificateFailure, "vertex confinement failed");

    bool degenerate_word = w.is_degenerate_form();
    bool degenerate_coords = p.vertex_m() == p.vertex_n();
    if (degenerate_word != degenerate_coords)
        throw DomainError(Err::CertificateFailure,
                          "embedding word test disagrees with coordinates");
    p.embedding = degenerate_word ? Embedding::DegenerateMN : Embedding::Generic;

    // rw maps r1 = [O, M] onto r0 - (1,0) and s1 = [O', N] onto s0 + (a,c).
    PlanePointQ m_img = apply_plane(rw, p.lift_m);
    PlanePointQ n_img = apply_plane(rw, p.lift_n);
    bool r_ok = m_img == PlanePointQ{p.lift_m.x - 1, p.lift_m.y};
    bool s_ok = n_img == PlanePointQ{p.lift_n.x + Qrat(rw.a), p.lift_n.y + Qrat(rw.c)};
    if (!r_ok || !s_ok)
        throw DomainError(Err::CertificateFailure, "side mapping identity failed");
    return p;
}

namespace {

// (b - a) x (c - a); positive means c lies left of a->b.
Qrat orient2d(const PlanePointQ& a, const PlanePointQ& b, const PlanePointQ& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Quadrilateral traversal O -> N -> O' -> M is clockwise (all interior
// orientation signs negative); strict convexity holds for every mixed w.
enum class LiftState { In, On, Out };

LiftState classify_lift(const ParallelogramData& p, const PlanePointQ& q) {
    const PlanePointQ* vs[4] = {&p.lift_o, &p.lift_n, &p.lift_o2, &p.lift_m};
    bool any_zero = false;
    for (int i = 0; i < 4; ++i) {
        Qrat s = orient2d(*vs[i], *vs[(i + 1) % 4], q);
        if (s > 0) return LiftState::Out;
        if (s == 0) any_zero = true;
    }
    return any_zero ? LiftState::On : LiftState::In;
}

}  // namespace

Containment point_in_parallelogram(const ParallelogramData& p, const TorusPointQ& q) {
    int interior = 0, boundary = 0;
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) {
            PlanePointQ lift{q.x + i, q.y + j};
            switch (classify_lift(p, lift)) {
                case LiftState::In: ++interior; break;
                case LiftState::On: ++boundary; break;
                case LiftState::Out: break;
            }
        }
    }
    assert(interior <= 1);
    if (boundary > 0) return Containment::Boundary;
    return interior > 0 ? Containment::Interior : Containment::Outside;
}

namespace {

// Orbit engine over the scaled lattice: a fixed point of rw^n with
// denominator Delta is stored as (u, v) in [0, Delta)^2. Containment
// tests run in coordinates scaled by delta * Delta, all in exact ints.
struct ScaledQuad {
    Zint delta;  // tr(rw) - 2
    Zint scale;  // delta * Delta
    std::array<std::pair<Zint, Zint>, 4> verts;  // O, N, O', M

    static ScaledQuad make(const Mat2& rw, const Zint& lattice_denom) {
        Zint delta = rw.trace() - 2;
        ScaledQuad q;
        q.delta = delta;
        q.scale = delta * lattice_denom;
        q.verts[0] = {0, 0};
        q.verts[1] = {(rw.a - 1) * lattice_denom, rw.c * lattice_denom};
        q.verts[2] = {q.scale, 0};
        q.verts[3] = {(rw.d - 1) * lattice_denom, -rw.c * lattice_denom};
        return q;
    }

    LiftState classify(const Zint& x, const Zint& y) const {
        bool any_zero = false;
        for (int i = 0; i < 4; ++i) {
            const auto& [ax, ay] = verts[i];
            const auto& [bx, by] = verts[(i + 1) % 4];
            Zint s = (bx - ax) * (y - ay) - (by - ay) * (x - ax);
            if (s > 0) return LiftState::Out;
            if (s == 0) any_zero = true;
        }
        return any_zero ? LiftState::On : LiftState::In;
    }

    // Torus containment of (u, v)/Delta over all lifts in {-1,0,1}^2.
    Containment contains(const Zint& u, const Zint& v, const Zint& lattice_denom) const {
        Zint ymin = verts[3].second, ymax = verts[1].second;
        int interior = 0, boundary = 0;
        for (int i = -1; i <= 1; ++i) {
            Zint x = (u + i * lattice_denom) * delta;
            if (x < 0 || x > scale) continue;
            for (int j = -1; j <= 1; ++j) {
                Zint y = (v + j * lattice_denom) * delta;
                if (y < ymin || y > ymax) continue;
                switch (classify(x, y)) {
                    case LiftState::In: ++interior; break;
                    case LiftState::On: ++boundary; break;
                    case LiftState::Out: break;
                }
            }
        }
        if (boundary > 0) return Containment::Boundary;
        return interior > 0 ? Containment::Interior : Containment::Outside;
    }
};

constexpr std::size_t kOrbitPointBudget = 50000000;

// Scaled coordinates of a rational fixed point with denominator dividing
// lattice_denom; num/den reduced to the lattice grid.
std::pair<Zint, Zint> scale_to_lattice(const Qrat& x, const Qrat& y, const Zint& denom) {
    Zint u = znum(x) * (denom / zden(x));
    Zint v = znum(y) * (denom / zden(y));
    return {floor_mod(u, denom), floor_mod(v, denom)};
}

}  // namespace

std::vector<OrbitRecord> enumerate_periodic_orbits(const RLWord& w, long max_period) {
    if (max_period < 1) throw std::invalid_argument("max_period >= 1 required");
    ParallelogramData par = build_parallelogram(w);
    const Mat2& rw = par.rw;
    std::vector<OrbitRecord> records;

    TorusPointQ mpt = par.vertex_m(), npt = par.vertex_n();

    for (long n = 1; n <= max_period; ++n) {
        Mat2 an = mat_pow(rw, n);
        assert(an.trace() > 2);
        Mat2 bmat{an.a - 1, an.b, an.c, an.d - 1};
        sl2z::Smith2 sn = sl2z::smith_form(bmat);
        Zint denom = sn.d2;
        Zint count = sn.d1 * sn.d2;
        if (count > Zint(kOrbitPointBudget))
            throw DomainError(Err::CapExceeded,
                              "orbit enumeration needs " + count.str() + " points");

        std::vector<std::pair<Zint, Zint>> pts;
        pts.reserve(static_cast<std::size_t>(count));
        Zint step = sn.d2 / sn.d1;
        for (Zint k1 = 0; k1 < sn.d1; ++k1) {
            for (Zint k2 = 0; k2 < sn.d2; ++k2) {
                pts.emplace_back(floor_mod(sn.col.a * k1 * step + sn.col.b * k2, denom),
                                 floor_mod(sn.col.c * k1 * step + sn.col.d * k2, denom));
            }
        }
        std::sort(pts.begin(), pts.end());
        assert(std::adjacent_find(pts.begin(), pts.end()) == pts.end());

        ScaledQuad quad = ScaledQuad::make(rw, denom);
        auto o_scaled = std::pair<Zint, Zint>{0, 0};
        auto m_scaled = scale_to_lattice(mpt.x, mpt.y, denom);
        auto n_scaled = scale_to_lattice(npt.x, npt.y, denom);

        auto index_of = [&](const std::pair<Zint, Zint>& p) {
            auto it = std::lower_bound(pts.begin(), pts.end(), p);
            assert(it != pts.end() && *it == p);
            return static_cast<std::size_t>(it - pts.begin());
        };

        std::vector<bool> visited(pts.size(), false);
        std::vector<std::size_t> orbit;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (visited[i]) continue;
            orbit.clear();
            std::size_t j = i;
            do {
                visited[j] = true;
                orbit.push_back(j);
                const auto& [u, v] = pts[j];
                j = index_of({floor_mod(rw.a * u + rw.b * v, denom),
                              floor_mod(rw.c * u + rw.d * v, denom)});
            } while (j != i);
            if (static_cast<long>(orbit.size()) != n) continue;  // smaller least period

            bool is_boundary = false;
            if (n == 1) {
                const auto& p0 = pts[orbit[0]];
                is_boundary = p0 == o_scaled || p0 == m_scaled || p0 == n_scaled;
            }
            long passes = 0;
            for (std::size_t idx : orbit) {
                const auto& [u, v] = pts[idx];
                Containment c = quad.contains(u, v, denom);
                if (c == Containment::Interior) ++passes;
                if (c == Containment::Boundary && !is_boundary)
                    throw DomainError(Err::AmbiguousCrossing,
                                      "orbit point on a section side: " +
                                          to_string(TorusPointQ{Qrat(u, denom),
                                                                Qrat(v, denom)}));
            }
            std::size_t rep = *std::min_element(orbit.begin(), orbit.end(),
                                                [&](std::size_t x, std::size_t y) {
                                                    return pts[x] < pts[y];
                                                });
            records.push_back(OrbitRecord{
                TorusPointQ{Qrat(pts[rep].first, denom), Qrat(pts[rep].second, denom)},
                n, passes, n + passes, is_boundary});
        }
    }
    std::sort(records.begin(), records.end(), [](const OrbitRecord& x, const OrbitRecord& y) {
        if (x.period != y.period) return x.period < y.period;
        return x.representative < y.representative;
    });
    return records;
}

std::vector<OrbitRecord> enumerate_periodic_orbits(const Mat2& rw, long max_period) {
    std::optional<RLWord> w = sl2z::exact_word_of(inverse_unimodular(gen_r()) * rw);
    if (!w || !w->mixed())
        throw DomainError(Err::NotMixed,
                          "matrix is not R * (mixed positive word): " + to_string(rw));
    return enumerate_periodic_orbits(*w, max_period);
}

namespace {

// Sign of p + q * sqrt(D) for nonsquare D > 0; never zero when q != 0.
int surd_sign(const Zint& p, const Zint& q, const Zint& D) {
    if (q == 0) return sign_of(p);
    if (q > 0) {
        if (p >= 0) return 1;
        Zint cmp = q * q * D - p * p;
        assert(cmp != 0);
        return cmp > 0 ? 1 : -1;
    }
    return -surd_sign(-p, -q, D);
}

}  // namespace

int stable_tangency_count(const RLWord& w) {
    ParallelogramData par = build_parallelogram(w);
    if (par.embedding == Embedding::DegenerateMN)
        throw DomainError(Err::DegenerateEmbedding, "word " + w.letters());
    const Mat2& rw = par.rw;
    Zint t = rw.trace();
    Zint D = t * t - 4;
    if (is_perfect_square(D))
        throw DomainError(Err::CertificateFailure, "eigenvalue is rational");

    // Stable direction, doubled to clear fractions: (2b, (t - 2a) - sqrt(D)).
    Zint ex_p = 2 * rw.b;
    Zint ey_p = t - 2 * rw.a;
    Zint a1 = rw.a - 1, d1 = rw.d - 1, c = rw.c, delta = t - 2;

    struct Dir {
        Zint x, y;
    };
    // Corner sectors: O, O', M, N, with edge directions scaled by delta.
    std::array<std::array<Dir, 2>, 4> sectors = {{
        {Dir{a1, c}, Dir{d1, -c}},                    // at O: toward N, toward M
        {Dir{a1 - delta, c}, Dir{d1 - delta, -c}},    // at O'
        {Dir{-d1, c}, Dir{delta - d1, c}},            // at M: toward O, toward O'
        {Dir{-a1, -c}, Dir{delta - a1, -c}},          // at N
    }};

    // cross(u, e) = [u.x * ey_p - u.y * ex_p] + [-u.x] sqrt(D)
    auto cross_dir_eigen = [&](const Dir& u, int eigen_sign) {
        Zint p = eigen_sign * (u.x * ey_p - u.y * ex_p);
        Zint q = eigen_sign * -u.x;
        return surd_sign(p, q, D);
    };

    int count = 0;
    for (const auto& sec : sectors) {
        Zint cr = sec[0].x * sec[1].y - sec[0].y * sec[1].x;
        int s0 = sign_of(cr);
        assert(s0 != 0);
        bool hit = false;
        for (int eigen_sign : {1, -1}) {
            // e strictly inside cone(u0, u1): both turns agree with s0.
            int c1 = cross_dir_eigen(sec[0], eigen_sign);
            // cross(e, u1) = -cross(u1, e)
            int c2 = -cross_dir_eigen(sec[1], eigen_sign);
            if (c1 == s0 && c2 == s0) hit = true;
        }
        if (hit) ++count;
    }
    return count;
}

}  // namespace suspflow::torus_geom
