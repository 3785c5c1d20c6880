#include <algorithm>
#include <set>

#include "doctest.h"
#include "suspflow/sl2z.hpp"
#include "test_util.hpp"

using namespace suspflow;
using namespace suspflow::sl2z;
using testutil::M;
using testutil::W;

TEST_CASE("word_to_matrix on generators and small words") {
    CHECK(word_to_matrix(W("RL")) == M("2,1;1,1"));
    CHECK(word_to_matrix(W("R")) == M("1,1;0,1"));
    CHECK(word_to_matrix(W("L")) == M("1,0;1,1"));
    CHECK(word_to_matrix(W("RRLL")) == M("5,2;2,1"));
    CHECK(word_to_matrix(W("rl")) == M("2,1;1,1"));  // case-insensitive parse
}

TEST_CASE("mixed words have determinant one and positive entries") {
    for (const auto& w : testutil::mixed_words_up_to(10)) {
        Mat2 m = word_to_matrix(w);
        CHECK(m.det() == 1);
        CHECK(m.a >= 1);
        CHECK(m.b >= 1);
        CHECK(m.c >= 1);
        CHECK(m.d >= 1);
    }
}

TEST_CASE("cyclic normal form") {
    CHECK(W("LRR").canonical() == W("RRL"));
    CHECK(W("RL").canonical() == W("RL"));
    CHECK(W("LRRLRR").canonical() == W("RRLRRL"));

    // Oracle: minimum over explicitly enumerated rotations.
    for (const auto& w : testutil::mixed_words_up_to(8)) {
        RLWord best = w;
        for (std::size_t k = 1; k < w.size(); ++k) best = std::min(best, w.rotated(k));
        CHECK(w.canonical() == best);
        CHECK(w.canonical().canonical() == w.canonical());  // idempotent
        CHECK(w.rotated(1).canonical() == w.canonical());   // rotation-invariant
    }
}

TEST_CASE("conjugacy_equal in SL2 and GL2 modes") {
    CHECK(conjugacy_equal(W("RRL"), W("LRR"), Group::SL2));
    CHECK(conjugacy_equal(W("RRL"), W("LLR"), Group::GL2));
    CHECK_FALSE(conjugacy_equal(W("RRL"), W("LLR"), Group::SL2));
}

TEST_CASE("rl_factorize on paper matrices") {
    auto fac = rl_factorize(M("2,1;1,1"));
    CHECK(fac.word == W("RL"));
    CHECK(fac.conjugator == mat2_identity());

    // The section-construction example matrix (3 8; 4 11) ~ (LR^2)^2.
    auto fac2 = rl_factorize(M("3,8;4,11"));
    CHECK(fac2.word == W("LRRLRR").canonical());
    CHECK(fac2.word == W("RRLRRL"));
    Mat2 check = fac2.conjugator * word_to_matrix(fac2.word) *
                 inverse_unimodular(fac2.conjugator);
    CHECK(check == M("3,8;4,11"));
}

TEST_CASE("rl_factorize error paths") {
    CHECK_THROWS_AS(rl_factorize(M("1,1;0,1")), DomainError);   // trace 2
    CHECK_THROWS_AS(rl_factorize(M("0,-1;1,0")), DomainError);  // elliptic
    CHECK_THROWS_AS(rl_factorize(M("-2,-1;-1,-1")), DomainError);  // trace -3
    CHECK_THROWS_AS(rl_factorize(M("1,1;1,1")), DomainError);   // det 0
    try {
        rl_factorize(M("-2,-1;-1,-1"));
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.code() == Err::NegativeTrace);
    }
}

TEST_CASE("factorization round trip with verified conjugator") {
    for (const auto& w : testutil::mixed_words_up_to(8)) {
        Mat2 m = word_to_matrix(w);
        auto fac = rl_factorize(m);
        CHECK(fac.word == w.canonical());
        Mat2 check = fac.conjugator * word_to_matrix(fac.word) *
                     inverse_unimodular(fac.conjugator);
        CHECK(check == m);
    }
}

TEST_CASE("rotation soundness") {
    for (const auto& w : testutil::mixed_words_up_to(7)) {
        Mat2 m0 = word_to_matrix(w);
        for (std::size_t k = 1; k < w.size(); ++k) {
            CHECK(rl_factorize(word_to_matrix(w.rotated(k))).word ==
                  rl_factorize(m0).word);
        }
    }
}

TEST_CASE("factorization of scrambled conjugates") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        RLWord w = testutil::random_mixed_word(rng, 8);
        Mat2 g = testutil::random_conjugator(rng);
        Mat2 m = g * word_to_matrix(w) * inverse_unimodular(g);
        auto fac = rl_factorize(m);
        CHECK(fac.word == w.canonical());
        Mat2 check = fac.conjugator * word_to_matrix(fac.word) *
                     inverse_unimodular(fac.conjugator);
        CHECK(check == m);
    }
}

TEST_CASE("classification of hyperbolic matrices") {
    ConjClass c = classify_conjugacy(M("2,1;1,1"));
    CHECK(c.is_hyperbolic());
    CHECK(c.hyperbolic().sign == 1);
    CHECK(c.hyperbolic().word == W("RL"));
    ConjClass cneg = classify_conjugacy(M("-2,-1;-1,-1"));
    CHECK(cneg.is_hyperbolic());
    CHECK(cneg.hyperbolic().sign == -1);
    CHECK(cneg.hyperbolic().word == W("RL"));
    CHECK_FALSE(c == cneg);
}

TEST_CASE("classification of parabolic matrices") {
    // R^n ~ L^-n but R^n and R^-n are distinct SL2(Z) classes.
    ConjClass r3 = classify_conjugacy(M("1,3;0,1"));
    ConjClass r3inv = classify_conjugacy(M("1,-3;0,1"));
    ConjClass l3 = classify_conjugacy(M("1,0;3,1"));
    CHECK(r3.is_parabolic());
    CHECK(r3.parabolic().shear == 3);
    CHECK(r3inv.parabolic().shear == -3);
    CHECK(l3 == r3inv);
    CHECK_FALSE(r3 == r3inv);

    CHECK(classify_conjugacy(M("1,0;1,1")) ==
          classify_conjugacy(inverse_unimodular(M("1,1;0,1"))));  // L ~ R^-1

    ConjClass neg = classify_conjugacy(M("-1,-5;0,-1"));
    CHECK(neg.parabolic().sign == -1);
    CHECK(neg.parabolic().shear == 5);
}

TEST_CASE("classification of elliptic matrices and the torsion list") {
    CHECK(classify_conjugacy(M("0,-1;1,0")).elliptic().name == "S");
    CHECK(classify_conjugacy(M("0,1;-1,0")).elliptic().name == "S^-1");
    CHECK(classify_conjugacy(M("1,0;0,1")).elliptic().name == "I");
    CHECK(classify_conjugacy(M("-1,0;0,-1")).elliptic().name == "-I");
    CHECK(classify_conjugacy(M("0,-1;1,1")).elliptic().name == "ST");
    CHECK(classify_conjugacy(M("1,1;-1,0")).elliptic().name == "ST^-1");
    CHECK(classify_conjugacy(M("-1,-1;1,0")).elliptic().name == "ST^2");
    CHECK(classify_conjugacy(M("0,1;-1,-1")).elliptic().name == "ST^4");

    // The eight torsion classes stay distinct and representative-faithful.
    std::set<std::string> keys;
    for (const char* s : {"0,-1;1,0", "0,1;-1,0", "1,0;0,1", "-1,0;0,-1", "0,-1;1,1",
                          "1,1;-1,0", "-1,-1;1,0", "0,1;-1,-1"}) {
        ConjClass c = classify_conjugacy(M(s));
        keys.insert(c.key());
        CHECK(classify_conjugacy(c.representative()) == c);
    }
    CHECK(keys.size() == 8);
}

TEST_CASE("classification is conjugation-invariant") {
    std::mt19937 rng(7);
    std::vector<Mat2> samples = {M("2,1;1,1"),  M("-3,-2;-1,-1"), M("1,3;0,1"),
                                 M("1,-3;0,1"), M("-1,2;0,-1"),   M("0,-1;1,0"),
                                 M("0,-1;1,1"), M("1,0;0,1"),     M("-1,-1;1,0")};
    for (const auto& w : testutil::mixed_words_up_to(5))
        samples.push_back(word_to_matrix(w));
    for (const Mat2& m : samples) {
        ConjClass base = classify_conjugacy(m);
        for (int trial = 0; trial < 20; ++trial) {
            Mat2 g = testutil::random_conjugator(rng);
            CHECK(classify_conjugacy(g * m * inverse_unimodular(g)) == base);
        }
    }
}

TEST_CASE("mat_pow") {
    CHECK(mat_pow(M("2,1;1,1"), 2) == M("5,3;3,2"));
    CHECK(mat_pow(M("1,1;0,1"), 5) == M("1,5;0,1"));
    CHECK(mat_pow(M("3,2;1,1"), 1) == M("3,2;1,1"));
}

TEST_CASE("periodic point counts") {
    CHECK(periodic_point_count(M("2,1;1,1"), 1) == 1);
    CHECK(periodic_point_count(M("3,2;1,1"), 1) == 2);  // t - 2 with t = 4
    CHECK(periodic_point_count(M("2,1;1,1"), 2) == 5);
    CHECK_THROWS_AS(periodic_point_count(M("1,1;0,1"), 1), DomainError);
    CHECK_THROWS_AS(periodic_point_count(M("1,1;1,2"), 0), std::invalid_argument);
}

TEST_CASE("fixed point lattice examples") {
    auto pts = fixed_point_lattice(M("3,2;1,1"), 1);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == TorusPointQ{0, 0});
    CHECK(pts[1] == TorusPointQ{Qrat(0), Qrat(1, 2)});

    auto single = fixed_point_lattice(M("2,1;1,1"), 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == TorusPointQ{0, 0});

    // tr = 10, so the fixed set has 8 points; cross-check the full grid.
    auto eight = fixed_point_lattice(M("8,5;3,2"), 1);
    REQUIRE(eight.size() == 8);
    auto oracle = testutil::brute_force_fixed_points(M("8,5;3,2"), 8);
    std::sort(oracle.begin(), oracle.end());
    CHECK(eight == oracle);
}

TEST_CASE("lattice size equals the trace count and points are fixed") {
    for (const auto& w : testutil::mixed_words_up_to(6)) {
        Mat2 m = word_to_matrix(w);
        for (Zint n = 1; n <= 4; ++n) {
            auto pts = fixed_point_lattice(m, n);
            CHECK(Zint(pts.size()) == periodic_point_count(m, n));
            Mat2 an = mat_pow(m, n);
            for (std::size_t i = 0; i < pts.size(); i += pts.size() > 8 ? 5 : 1) {
                const auto& p = pts[i];
                Qrat x = Qrat(an.a) * p.x + Qrat(an.b) * p.y;
                Qrat y = Qrat(an.c) * p.x + Qrat(an.d) * p.y;
                CHECK(mod_one(x) == p.x);
                CHECK(mod_one(y) == p.y);
            }
        }
    }
}

TEST_CASE("lattice against the exhaustive grid oracle") {
    for (const char* s : {"3,2;1,1", "8,5;3,2", "5,2;2,1", "4,3;1,1", "2,1;1,1"}) {
        Mat2 m = M(s);
        Zint den = abs(mat_pow(m, 1).trace() - 2);
        auto oracle = testutil::brute_force_fixed_points(m, den);
        std::sort(oracle.begin(), oracle.end());
        CHECK(fixed_point_lattice(m, 1) == oracle);
    }
}

TEST_CASE("smith form invariants") {
    for (const char* s : {"2,2;1,0", "7,5;3,1", "4,6;2,8", "-3,1;5,2", "2,0;0,4"}) {
        Mat2 b = M(s);
        auto sn = smith_form(b);
        CHECK(sn.d1 > 0);
        CHECK(sn.d2 % sn.d1 == 0);
        CHECK(sn.d1 * sn.d2 == abs(b.det()));
        // Every advertised solution really solves B x in Z^2.
        Zint step = sn.d2 / sn.d1;
        for (Zint k1 = 0; k1 < sn.d1; ++k1) {
            for (Zint k2 = 0; k2 < sn.d2; ++k2) {
                Zint u = sn.col.a * k1 * step + sn.col.b * k2;
                Zint v = sn.col.c * k1 * step + sn.col.d * k2;
                CHECK((b.a * u + b.b * v) % sn.d2 == 0);
                CHECK((b.c * u + b.d * v) % sn.d2 == 0);
            }
        }
    }
}

TEST_CASE("matrix and point text formats") {
    CHECK(to_string(M(" 2 , 1 ; 1 , 1 ")) == "2,1;1,1");
    CHECK_THROWS_AS(parse_mat2("2,1;1"), ParseError);
    CHECK_THROWS_AS(RLWord::parse("RXL"), ParseError);
    TorusPointQ p = parse_torus_point("1/6,1/2");
    CHECK(to_string(p) == "1/6,1/2");
    CHECK(to_string(parse_torus_point("7/6,-1/2")) == "1/6,1/2");  // reduced mod 1
    CHECK(to_string(TorusPointQ{0, 0}) == "0,0");
}
