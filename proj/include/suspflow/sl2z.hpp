// Exact SL2(Z) word calculus: RL factorization of hyperbolic classes,
// conjugacy normal forms and periodic points of torus automorphisms.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "suspflow/errors.hpp"
#include "suspflow/mat2.hpp"
#include "suspflow/rlword.hpp"
#include "suspflow/torus_point.hpp"

namespace suspflow::sl2z {

// Ordered product of generator matrices; mixed words give positive entries.
Mat2 word_to_matrix(const RLWord& w);

struct Factorization {
    RLWord word;      // canonical mixed word
    Mat2 conjugator;  // g with g * word_to_matrix(word) * g^-1 == input
};

// Requires det = +1 and trace >= 3. Conjugates the input into the positive
// monoid (guided by the continued-fraction expansion of the attracting
// fixed point), peels the positive matrix into its letters, and rotates to
// the canonical form. The conjugator witness is verified before returning.
Factorization rl_factorize(const Mat2& m);

// Letter peeling without conjugation: the exact word W with
// word_to_matrix(W) == m entrywise, if m is a nonnegative word product.
std::optional<RLWord> exact_word_of(const Mat2& m);

enum class Group { SL2, GL2 };

// SL2: equal cyclic classes. GL2: also identifies letter-swapped classes.
bool conjugacy_equal(const RLWord& w1, const RLWord& w2, Group group);

struct HyperbolicClass {
    int sign;     // sign of the trace
    RLWord word;  // canonical mixed word for sign * m
    friend bool operator==(const HyperbolicClass&, const HyperbolicClass&) = default;
};

struct ParabolicClass {
    // sign * m is conjugate to R^shear; shear ranges over all of Z since
    // R^n and R^-n are not SL2(Z)-conjugate. shear != 0 (shear 0 is +-I).
    int sign;
    Zint shear;
    friend bool operator==(const ParabolicClass&, const ParabolicClass&) = default;
};

struct EllipticClass {
    // One of the eight torsion classes: +-I, S, S^-1, ST, (ST)^-1,
    // (ST)^2, (ST)^4 where S = (0 -1; 1 0) and T = R.
    std::string name;
    Mat2 representative;
    friend bool operator==(const EllipticClass& a, const EllipticClass& b) {
        return a.name == b.name;
    }
};

// Complete SL2(Z) conjugacy invariant.
class ConjClass {
  public:
    using Variant = std::variant<HyperbolicClass, ParabolicClass, EllipticClass>;

    explicit ConjClass(Variant v) : v_(std::move(v)) {}

    bool is_hyperbolic() const { return std::holds_alternative<HyperbolicClass>(v_); }
    bool is_parabolic() const { return std::holds_alternative<ParabolicClass>(v_); }
    bool is_elliptic() const { return std::holds_alternative<EllipticClass>(v_); }
    const HyperbolicClass& hyperbolic() const { return std::get<HyperbolicClass>(v_); }
    const ParabolicClass& parabolic() const { return std::get<ParabolicClass>(v_); }
    const EllipticClass& elliptic() const { return std::get<EllipticClass>(v_); }

    Mat2 representative() const;
    std::string key() const;  // stable token, e.g. "H:+:RRL", "P:+:-3", "E:S"

    friend bool operator==(const ConjClass& x, const ConjClass& y) {
        return x.key() == y.key();
    }
    friend bool operator<(const ConjClass& x, const ConjClass& y) {
        return x.key() < y.key();
    }

  private:
    Variant v_;
};

// Two matrices classify equal iff they are conjugate in SL2(Z).
ConjClass classify_conjugacy(const Mat2& m);

// Number of fixed points of m^n on T^2, i.e. |det(m^n - I)| = |tr(m^n) - 2|.
Zint periodic_point_count(const Mat2& m, const Zint& n);

// Smith normal form of a nonsingular 2x2 integer matrix:
// B = U diag(d1, d2) V^-1 ... we expose diag entries (d1 | d2, both > 0)
// and the column transform F with B*F = (row ops)^-1 * diag.
struct Smith2 {
    Zint d1, d2;
    Mat2 col;  // solutions of B x in Z^2 are x = col * (k1/d1, k2/d2)
};
Smith2 smith_form(const Mat2& b);

// Complete fixed-point set of m^n on T^2, sorted; requires det(m) = +1
// and tr(m^n) != 2.
std::vector<TorusPointQ> fixed_point_lattice(const Mat2& m, const Zint& n);

}  // namespace suspflow::sl2z
