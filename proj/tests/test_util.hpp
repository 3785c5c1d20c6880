#pragma once

#include <random>
#include <vector>

#include "suspflow/mat2.hpp"
#include "suspflow/rlword.hpp"
#include "suspflow/sl2z.hpp"
#include "suspflow/torus_point.hpp"

namespace suspflow::testutil {

inline RLWord W(const std::string& s) { return RLWord::parse(s); }

inline Mat2 M(const std::string& s) { return parse_mat2(s); }

inline std::vector<RLWord> mixed_words_up_to(std::size_t max_len) {
    std::vector<RLWord> out;
    for (std::size_t k = 2; k <= max_len; ++k)
        for (const auto& w : all_mixed_words(k)) out.push_back(w);
    return out;
}

// Independent fixed-point oracle: exhaustive scan of the full
// denominator-d grid, no Smith decomposition involved.
inline std::vector<TorusPointQ> brute_force_fixed_points(const Mat2& a, const Zint& den) {
    std::vector<TorusPointQ> pts;
    for (Zint i = 0; i < den; ++i) {
        for (Zint j = 0; j < den; ++j) {
            // (a - I) * (i/den, j/den) integral?
            Zint x = (a.a - 1) * i + a.b * j;
            Zint y = a.c * i + (a.d - 1) * j;
            if (x % den == 0 && y % den == 0)
                pts.push_back(TorusPointQ{Qrat(i, den), Qrat(j, den)});
        }
    }
    return pts;
}

// Random mixed word of length in [2, max_len].
inline RLWord random_mixed_word(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(2, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    for (;;) {
        std::size_t n = len_dist(rng);
        std::string s;
        for (std::size_t i = 0; i < n; ++i) s.push_back(bit(rng) ? 'L' : 'R');
        RLWord w(s);
        if (w.mixed()) return w;
    }
}

// Random SL2(Z) conjugator: a short product of generator powers.
inline Mat2 random_conjugator(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 5), exp(-2, 2), pick(0, 1);
    Mat2 g = mat2_identity();
    int terms = count(rng);
    for (int i = 0; i < terms; ++i) {
        Zint e = exp(rng);
        g = g * (pick(rng) ? gen_r(e) : gen_l(e));
    }
    return g;
}

}  // namespace suspflow::testutil
