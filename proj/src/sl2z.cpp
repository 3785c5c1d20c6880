#include "suspflow/sl2z.hpp"

#include <algorithm>
#include <cassert>

namespace suspflow::sl2z {

Mat2 word_to_matrix(const RLWord& w) {
    Mat2 m = mat2_identity();
    for (char ch : w.letters()) m = m * (ch == 'R' ? gen_r() : gen_l());
    return m;
}

namespace {

bool nonneg(const Mat2& m) { return m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0; }

// Quadratic surd (p + sqrt(D)) / q with D > 0 nonsquare, q != 0 and
// q | (D - p^2). Closed under z - n and 1/z, which is all the reduction
// loop needs. Comparisons go through isqrt(D), so everything is exact.
struct Surd {
    Zint p, q, D, s;  // s = isqrt(D)

    Zint floor() const {
        // p + sqrt(D) lies strictly between p+s and p+s+1 (D nonsquare).
        if (q > 0) return floor_div(p + s, q);
        return floor_div(-(p + s) - 1, -q);
    }
    void sub(const Zint& n) { p -= n * q; }
    void invert() {
        Zint q2 = (D - p * p) / q;
        assert(q2 != 0);
        p = -p;
        q = q2;
    }
};

}  // namespace

std::optional<RLWord> exact_word_of(const Mat2& m) {
    if (!nonneg(m) || m.det() != 1) return std::nullopt;
    std::string letters;
    Mat2 x = m;
    while (!(x == mat2_identity())) {
        if (x.a >= x.c && x.b >= x.d) {
            letters.push_back('R');
            x = Mat2{x.a - x.c, x.b - x.d, x.c, x.d};
        } else if (x.c >= x.a && x.d >= x.b) {
            letters.push_back('L');
            x = Mat2{x.a, x.b, x.c - x.a, x.d - x.b};
        } else {
            return std::nullopt;
        }
        if (!nonneg(x)) return std::nullopt;
    }
    if (letters.empty()) return std::nullopt;
    return RLWord(letters);
}

Factorization rl_factorize(const Mat2& m) {
    if (m.det() != 1)
        throw DomainError(Err::NotUnimodular, "rl_factorize needs determinant +1");
    Zint t = m.trace();
    if (t <= -3)
        throw DomainError(Err::NegativeTrace, "trace " + t.str() + "; factor -m instead");
    if (t < 3)
        throw DomainError(Err::NotHyperbolic, "trace " + t.str() + " is not hyperbolic");

    Mat2 cur = m;
    Mat2 g = mat2_identity();
    auto conjugate_by = [&](const Mat2& h) {
        cur = inverse_unimodular(h) * cur * h;
        g = g * h;
    };

    if (!nonneg(cur)) {
        // Attracting fixed point of z -> (az+b)/(cz+d); c != 0 since |t| > 2.
        Zint D = t * t - 4;
        Surd z{cur.a - cur.d, 2 * cur.c, D, isqrt(D)};
        Zint n0 = z.floor();
        if (n0 != 0) {
            conjugate_by(gen_r(n0));
            z.sub(n0);
        }
        // z in (0,1). Alternate L- and R-runs following the continued
        // fraction of z until the matrix lands in the positive monoid.
        for (int guard = 0;; ++guard) {
            if (guard > 100000)
                throw DomainError(Err::CertificateFailure, "factorization did not converge");
            if (nonneg(cur)) break;
            z.invert();  // 1/z > 1
            Zint n = z.floor();
            assert(n >= 1);
            z.sub(n);
            z.invert();  // z/(1 - n z) > 1
            conjugate_by(gen_l(n));
            if (nonneg(cur)) break;
            n = z.floor();
            assert(n >= 1);
            z.sub(n);
            conjugate_by(gen_r(n));
        }
    }

    std::optional<RLWord> word = exact_word_of(cur);
    if (!word)
        throw DomainError(Err::CertificateFailure, "positive conjugate failed to peel");
    if (!word->mixed())
        throw DomainError(Err::PowerOfOneGenerator,
                          "peeled a pure generator power from " + to_string(m));

    // Rotate to the canonical class representative; conjugating by the
    // rotated-out prefix keeps the witness exact.
    RLWord canon = word->canonical();
    std::size_t k = 0;
    while (!(word->rotated(k) == canon)) ++k;
    if (k > 0) g = g * word_to_matrix(RLWord(word->letters().substr(0, k)));

    Mat2 check = g * word_to_matrix(canon) * inverse_unimodular(g);
    if (!(check == m))
        throw DomainError(Err::CertificateFailure, "conjugator witness check failed");
    return Factorization{canon, g};
}

bool conjugacy_equal(const RLWord& w1, const RLWord& w2, Group group) {
    RLWord c1 = w1.canonical(), c2 = w2.canonical();
    if (c1 == c2) return true;
    return group == Group::GL2 && c1 == w2.swapped().canonical();
}

Mat2 ConjClass::representative() const {
    if (is_hyperbolic()) {
        const auto& h = hyperbolic();
        Mat2 w = word_to_matrix(h.word);
        return h.sign > 0 ? w : -w;
    }
    if (is_parabolic()) {
        const auto& p = parabolic();
        Mat2 r = gen_r(p.shear);
        return p.sign > 0 ? r : -r;
    }
    return elliptic().representative;
}

std::string ConjClass::key() const {
    if (is_hyperbolic()) {
        const auto& h = hyperbolic();
        return std::string("H:") + (h.sign > 0 ? "+" : "-") + ":" + h.word.letters();
    }
    if (is_parabolic()) {
        const auto& p = parabolic();
        return std::string("P:") + (p.sign > 0 ? "+" : "-") + ":" + p.shear.str();
    }
    return "E:" + elliptic().name;
}

namespace {

EllipticClass elliptic_by_trace(const Zint& t, const Zint& c) {
    assert(c != 0);
    if (t == 0)
        return c > 0 ? EllipticClass{"S", Mat2{0, -1, 1, 0}}
                     : EllipticClass{"S^-1", Mat2{0, 1, -1, 0}};
    if (t == 1)
        return c > 0 ? EllipticClass{"ST", Mat2{0, -1, 1, 1}}
                     : EllipticClass{"ST^-1", Mat2{1, 1, -1, 0}};
    return c > 0 ? EllipticClass{"ST^2", Mat2{-1, -1, 1, 0}}
                 : EllipticClass{"ST^4", Mat2{0, 1, -1, -1}};
}

}  // namespace

ConjClass classify_conjugacy(const Mat2& m) {
    if (m.det() != 1)
        throw DomainError(Err::NotUnimodular, "classification needs determinant +1");
    Zint t = m.trace();
    if (t >= 3) return ConjClass(HyperbolicClass{+1, rl_factorize(m).word});
    if (t <= -3) return ConjClass(HyperbolicClass{-1, rl_factorize(-m).word});
    if (t == 2 || t == -2) {
        int sign = t > 0 ? +1 : -1;
        Mat2 mm = sign > 0 ? m : -m;
        if (mm == mat2_identity())
            return ConjClass(sign > 0 ? EllipticClass{"I", mat2_identity()}
                                      : EllipticClass{"-I", -mat2_identity()});
        // mm = I + n * u u'^T with u primitive; n is the complete invariant.
        Mat2 nil{mm.a - 1, mm.b, mm.c, mm.d - 1};
        Zint content = boost::multiprecision::gcd(
            boost::multiprecision::gcd(abs(nil.a), abs(nil.b)), abs(nil.c));
        Zint shear = (nil.b != 0) ? Zint(sign_of(nil.b) * content)
                                  : Zint(-sign_of(nil.c) * content);
        return ConjClass(ParabolicClass{sign, shear});
    }
    return ConjClass(elliptic_by_trace(t, m.c));
}

Zint periodic_point_count(const Mat2& m, const Zint& n) {
    if (m.det() != 1)
        throw DomainError(Err::NotUnimodular, "torus automorphism needs determinant +1");
    if (n < 1) throw std::invalid_argument("periodic_point_count: n >= 1 required");
    Zint t = mat_pow(m, n).trace();
    if (t == 2)
        throw DomainError(Err::NotHyperbolicPower, "tr(m^n) = 2, fixed set is not finite");
    return abs(t - 2);
}

Smith2 smith_form(const Mat2& b) {
    if (b.det() == 0) throw std::invalid_argument("smith_form: singular matrix");
    Mat2 a = b;
    Mat2 f = mat2_identity();

    auto col_sub = [&](const Zint& q) {  // col1 -= q * col0
        a.b -= q * a.a;
        a.d -= q * a.c;
        f.b -= q * f.a;
        f.d -= q * f.c;
    };
    auto col_swap = [&] {
        std::swap(a.a, a.b);
        std::swap(a.c, a.d);
        std::swap(f.a, f.b);
        std::swap(f.c, f.d);
    };
    auto row_swap = [&] {
        std::swap(a.a, a.c);
        std::swap(a.b, a.d);
    };

    for (int pass = 0; pass < 64; ++pass) {
        while (a.c != 0) {  // row euclid, untracked
            if (a.a == 0) {
                row_swap();
                continue;
            }
            Zint q = a.c / a.a;
            a.c -= q * a.a;
            a.d -= q * a.b;
            if (a.c != 0) row_swap();
        }
        while (a.b != 0) {  // column euclid, tracked in f
            if (a.a == 0) {
                col_swap();
                continue;
            }
            Zint q = a.b / a.a;
            col_sub(q);
            if (a.b != 0) col_swap();
        }
        if (a.b == 0 && a.c == 0) {
            if (a.d % a.a == 0) break;
            a.b += a.d;  // row0 += row1 reintroduces d2 for the gcd pass
        }
    }
    assert(a.b == 0 && a.c == 0);
    if (a.a < 0) {
        a.a = -a.a;
        f.a = -f.a;
        f.c = -f.c;
    }
    if (a.d < 0) {
        a.d = -a.d;
        f.b = -f.b;
        f.d = -f.d;
    }
    assert(a.d % a.a == 0);
    return Smith2{a.a, a.d, f};
}

std::vector<TorusPointQ> fixed_point_lattice(const Mat2& m, const Zint& n) {
    if (m.det() != 1)
        throw DomainError(Err::NotUnimodular, "torus automorphism needs determinant +1");
    Mat2 an = mat_pow(m, n);
    if (an.trace() == 2)
        throw DomainError(Err::NotHyperbolicPower, "tr(m^n) = 2, fixed set is not finite");
    Mat2 bmat{an.a - 1, an.b, an.c, an.d - 1};
    Smith2 sn = smith_form(bmat);
    // Solutions of B x in Z^2 are x = col * (k1/d1, k2/d2) mod Z^2.
    Zint denom = sn.d2;
    Zint step = sn.d2 / sn.d1;
    std::vector<TorusPointQ> points;
    points.reserve(static_cast<std::size_t>(sn.d1 * sn.d2));
    for (Zint k1 = 0; k1 < sn.d1; ++k1) {
        for (Zint k2 = 0; k2 < sn.d2; ++k2) {
            Zint u = floor_mod(sn.col.a * k1 * step + sn.col.b * k2, denom);
            Zint v = floor_mod(sn.col.c * k1 * step + sn.col.d * k2, denom);
            points.push_back(TorusPointQ{Qrat(u, denom), Qrat(v, denom)});
        }
    }
    std::sort(points.begin(), points.end());
    assert(std::adjacent_find(points.begin(), points.end()) == points.end());
    assert(Zint(points.size()) == abs(an.trace() - 2));
    return points;
}

}  // namespace suspflow::sl2z
