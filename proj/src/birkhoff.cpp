#include "suspflow/birkhoff.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace suspflow::birkhoff {

using sl2z::word_to_matrix;
using torus_geom::Embedding;

Zint SurfaceData::circle_count() const {
    Zint n = 0;
    for (const auto& e : boundary) n += e.circle_count;
    return n;
}

Zint SurfaceData::orbit_count() const { return Zint(boundary.size()); }

Zint SurfaceData::genus() const {
    Zint rhs = Zint(2) - euler - circle_count();
    assert(rhs % 2 == 0 && rhs >= 0);
    return rhs / 2;
}

namespace {

Zint gcd_z(const Zint& a, const Zint& b) { return boost::multiprecision::gcd(abs(a), abs(b)); }

void validate_surface(const SurfaceData& s) {
    for (const auto& e : s.boundary) {
        assert(e.circle_count >= 1);
        assert(e.multiplicity == e.circle_count * e.per_circle.longitude);
        assert(gcd_z(e.per_circle.longitude, e.per_circle.meridian) == 1);
    }
    (void)s.genus();  // parity check
}

}  // namespace

std::pair<CurveClass, Zint> resolve_multicurve_on_torus(
    const std::vector<CurveClass>& classes) {
    if (classes.empty()) throw std::invalid_argument("resolve: empty curve collection");
    for (const auto& c : classes)
        if (c.longitude == 0 && c.meridian == 0)
            throw std::invalid_argument("resolve: zero curve class");
    // Antiparallel pairs would cancel into null-homotopic components.
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            Zint cross = classes[i].longitude * classes[j].meridian -
                         classes[j].longitude * classes[i].meridian;
            Zint dot = classes[i].longitude * classes[j].longitude +
                       classes[i].meridian * classes[j].meridian;
            if (cross == 0 && dot < 0)
                throw DomainError(Err::IncoherentOrientation,
                                  "antiparallel boundary curves cannot be resolved");
        }
    }
    CurveClass total;
    for (const auto& c : classes) {
        total.longitude += c.longitude;
        total.meridian += c.meridian;
    }
    if (total.longitude == 0 && total.meridian == 0)
        throw DomainError(Err::IncoherentOrientation, "resolution cancels to zero class");
    return {total, gcd_z(total.longitude, total.meridian)};
}

SurfaceData pair_of_pants_data(const RLWord& w) {
    Embedding emb = torus_geom::build_parallelogram(w).embedding;
    SurfaceData s;
    s.euler = -1;
    if (emb == Embedding::Generic) {
        s.boundary = {
            BoundaryEntry{"gamma_M", -1, 1, CurveClass{-1, 0}},
            BoundaryEntry{"gamma_N", -1, 1, CurveClass{-1, 0}},
            // One circle wrapping twice; its meridian coordinate is only
            // determined mod 2 by embeddedness, stored as the odd rep 1.
            BoundaryEntry{"gamma_O", 2, 1, CurveClass{2, 1}},
        };
    } else {
        s.boundary = {
            BoundaryEntry{"gamma_M", -2, 2, CurveClass{-1, 0}},
            BoundaryEntry{"gamma_O", 2, 1, CurveClass{2, 1}},
        };
    }
    validate_surface(s);
    assert(s.genus() == 0);
    return s;
}

SurfaceData fried_sum_data(const SurfaceData& s1, const SurfaceData& s2,
                           const std::vector<Puncture>& punctures) {
    SurfaceData a = s1, b = s2;
    for (const auto& p : punctures) {
        if (p.surface != 1 && p.surface != 2)
            throw std::invalid_argument("puncture surface index must be 1 or 2");
        SurfaceData& s = (p.surface == 1) ? a : b;
        s.euler -= 1;  // one disc removed per crossing of the other boundary
        s.boundary.push_back(BoundaryEntry{p.orbit, 0, 1, CurveClass{0, 1}});
    }

    std::map<std::string, std::vector<CurveClass>> per_orbit;
    for (const SurfaceData* s : {&a, &b})
        for (const auto& e : s->boundary)
            for (Zint i = 0; i < e.circle_count; ++i)
                per_orbit[e.orbit].push_back(e.per_circle);

    SurfaceData out;
    out.euler = a.euler + b.euler;
    for (const auto& [orbit, classes] : per_orbit) {
        auto [total, count] = resolve_multicurve_on_torus(classes);
        out.boundary.push_back(BoundaryEntry{
            orbit, total.longitude, count,
            CurveClass{total.longitude / count, total.meridian / count}});
    }
    validate_surface(out);
    return out;
}

SurfaceData genus_one_section(const RLWord& w) {
    SurfaceData pants = pair_of_pants_data(w);
    SurfaceData torus;  // closed horizontal fiber, chi = 0
    std::vector<Puncture> punctures;
    for (const auto& e : pants.boundary) punctures.push_back(Puncture{1, e.orbit});
    SurfaceData sum = fried_sum_data(torus, pants, punctures);
    assert(sum.genus() == 1);
    assert(sum.orbit_count() <= 3);
    return sum;
}

FirstReturnData first_return_matrix(const RLWord& w) {
    if (!w.mixed()) throw DomainError(Err::NotMixed, "word " + w.letters());
    Mat2 rw = gen_r() * word_to_matrix(w);
    FirstReturnData out;
    out.alpha = Vec2{rw.d, -rw.c};
    out.beta = Vec2{rw.d - rw.b, rw.a - rw.c};
    Vec2 ia = rw * out.alpha, ib = rw * out.beta;
    Mat2 basis{out.alpha[0], out.beta[0], out.alpha[1], out.beta[1]};
    if (!(ia == Vec2{1, 0} && ib == Vec2{1, 1} && basis.det() == 1))
        throw DomainError(Err::CertificateFailure, "first-return basis certificate");
    out.matrix = Mat2{rw.a - rw.c, rw.b - rw.d, rw.c, rw.d};
    if (!(out.matrix == word_to_matrix(w)))
        throw DomainError(Err::CertificateFailure, "first-return matrix mismatch");
    return out;
}

std::pair<char, RLWord> minakawa_step(const RLWord& w) {
    if (!w.mixed()) throw DomainError(Err::NotMixed, "word " + w.letters());
    if (w.size() == 2)
        throw DomainError(Err::AlreadyMinimal, "the RL class has minimal trace 3");
    char g = (w.count('R') >= w.count('L')) ? 'R' : 'L';
    assert(w.count(g) >= 2);
    RLWord canon = w.canonical();
    for (std::size_t i = 0; i < canon.size(); ++i) {
        if (canon.at(i) != g) continue;
        RLWord rot = canon.rotated(i);
        RLWord rest(rot.letters().substr(1));
        if (!rest.mixed()) continue;
        assert(word_to_matrix(rest).trace() < word_to_matrix(w).trace());
        return {g, rest};
    }
    throw DomainError(Err::CertificateFailure, "no peelable rotation found");
}

DescentChain descent_chain(const RLWord& w) {
    if (!w.mixed()) throw DomainError(Err::NotMixed, "word " + w.letters());
    DescentChain chain;
    RLWord cur = w;
    while (cur.size() > 2) {
        auto [g, next] = minakawa_step(cur);
        chain.steps.push_back(DescentStep{cur, g, next,
                                          word_to_matrix(cur).trace(),
                                          word_to_matrix(next).trace()});
        cur = next;
    }
    assert(cur.canonical() == RLWord("RL"));
    return chain;
}

CensusData orbifold_section_census(long genus, const std::vector<long>& orders) {
    if (genus < 1)
        throw DomainError(Err::UnsupportedOrbifold, "construction needs genus >= 1");
    if (orders.empty())
        throw DomainError(Err::UnsupportedOrbifold, "construction needs a cone point");
    for (long k : orders)
        if (k < 3)
            throw DomainError(Err::UnsupportedOrbifold,
                              "cone orders must be >= 3, got " + std::to_string(k));
    long n = static_cast<long>(orders.size());
    // Hyperbolicity 2 - 2g - sum(1 - 1/k) < 0; automatic here, kept exact.
    Qrat chi_orb = Qrat(2 - 2 * genus);
    for (long k : orders) chi_orb -= Qrat(k - 1, k);
    assert(chi_orb < 0);

    CensusData out;
    out.chi_handles = Zint(-4) * genus;
    out.chi_cones = Zint(1) - n;
    out.chi_connector = -4;
    out.curve_count = Zint(4) * genus + n + 3;
    Zint total = out.chi_handles + out.chi_cones + out.chi_connector;
    assert(total == -(Zint(4) * genus + n + 3));

    out.surface.euler = total;
    auto pad2 = [](long v) {
        std::string s = std::to_string(v);
        return s.size() < 2 ? "0" + s : s;
    };
    for (long i = 1; i <= 2 * genus; ++i) {
        out.surface.boundary.push_back(
            BoundaryEntry{"g" + pad2(i) + "+", -1, 1, CurveClass{-1, 0}});
        out.surface.boundary.push_back(
            BoundaryEntry{"g" + pad2(i) + "-", -1, 1, CurveClass{-1, 0}});
    }
    for (long j = 0; j <= n + 2; ++j)
        out.surface.boundary.push_back(
            BoundaryEntry{"b" + pad2(j), -1, 1, CurveClass{-1, 0}});
    std::sort(out.surface.boundary.begin(), out.surface.boundary.end(),
              [](const BoundaryEntry& x, const BoundaryEntry& y) { return x.orbit < y.orbit; });
    validate_surface(out.surface);
    assert(out.surface.circle_count() == out.curve_count);
    assert(out.surface.genus() == 1);
    return out;
}

AuditTable lefschetz_audit(const RLWord& w, long max_m) {
    if (!w.mixed()) throw DomainError(Err::NotMixed, "word " + w.letters());
    if (max_m < 1) throw std::invalid_argument("max_m >= 1 required");
    Mat2 wm = word_to_matrix(w);
    SurfaceData section = genus_one_section(w);

    AuditTable table{w, {}, section.circle_count(), {}, false};
    auto records = torus_geom::enumerate_periodic_orbits(w, max_m);

    bool bounds_ok = true;
    for (long m = 1; m <= max_m; ++m) {
        AuditRow row;
        row.m = m;
        row.lhs = mat_pow(wm, m).trace() - 2;
        row.interior_sum = 0;
        for (const auto& rec : records)
            if (!rec.boundary_orbit && m % rec.intersection == 0)
                row.interior_sum += rec.intersection;
        row.residual = row.lhs - row.interior_sum;
        if (row.residual < 0 || row.residual > table.boundary_circles) bounds_ok = false;
        table.rows.push_back(row);
    }

    // Fit per-circle periods: residual(m) = #{c : p_c | m}, p_c in
    // {1..max_m} or 0 for a circle silent in this range. Lexicographically
    // least assignment, exhaustive over the (max_m+1)^B grid.
    table.fit_ok = false;
    long circles_l = static_cast<long>(table.boundary_circles);
    if (bounds_ok && circles_l <= 8) {
        std::vector<long> p(static_cast<std::size_t>(circles_l), 0);
        auto reproduces = [&] {
            for (const auto& row : table.rows) {
                Zint sum = 0;
                for (long pc : p)
                    if (pc != 0 && row.m % pc == 0) sum += 1;
                if (sum != row.residual) return false;
            }
            return true;
        };
        while (true) {
            if (reproduces()) {
                table.fitted_periods = p;
                table.fit_ok = true;
                break;
            }
            std::size_t i = p.size();
            while (i > 0 && p[i - 1] == max_m) p[--i] = 0;
            if (i == 0) break;
            ++p[i - 1];
        }
    }
    return table;
}

}  // namespace suspflow::birkhoff
