// 2x2 integer matrices over arbitrary-precision integers.
#pragma once

#include <array>
#include <string>

#include "suspflow/numbers.hpp"

namespace suspflow {

using Vec2 = std::array<Zint, 2>;

struct Mat2 {
    Zint a{1}, b{0}, c{0}, d{1};  // row-major (a b; c d)

    Zint det() const { return a * d - b * c; }
    Zint trace() const { return a + d; }
    bool is_unimodular() const {
        Zint dd = det();
        return dd == 1 || dd == -1;
    }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x);
Vec2 operator*(const Mat2& m, const Vec2& v);

inline Mat2 mat2_identity() { return Mat2{}; }

// Inverse of a determinant +-1 matrix; exact.
Mat2 inverse_unimodular(const Mat2& m);

// n >= 0; repeated squaring.
Mat2 mat_pow(const Mat2& m, const Zint& n);

// Generators R = (1 1; 0 1), L = (1 0; 1 1) and their n-th powers.
inline Mat2 gen_r(const Zint& n = 1) { return Mat2{1, n, 0, 1}; }
inline Mat2 gen_l(const Zint& n = 1) { return Mat2{1, 0, n, 1}; }

// "a,b;c,d", whitespace tolerated.
Mat2 parse_mat2(const std::string& text);
std::string to_string(const Mat2& m);

}  // namespace suspflow
