#include "suspflow/mat2.hpp"

#include <cctype>
#include <sstream>

#include "suspflow/errors.hpp"
#include "suspflow/torus_point.hpp"

namespace suspflow {

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator-(const Mat2& x) { return Mat2{-x.a, -x.b, -x.c, -x.d}; }

Vec2 operator*(const Mat2& m, const Vec2& v) {
    return Vec2{m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]};
}

Mat2 inverse_unimodular(const Mat2& m) {
    Zint dd = m.det();
    if (dd == 1) return Mat2{m.d, -m.b, -m.c, m.a};
    if (dd == -1) return Mat2{-m.d, m.b, m.c, -m.a};
    throw DomainError(Err::NotUnimodular, "determinant " + dd.str() + " is not +-1");
}

Mat2 mat_pow(const Mat2& m, const Zint& n) {
    if (n < 0) throw std::invalid_argument("mat_pow: negative exponent");
    Mat2 result = mat2_identity();
    Mat2 base = m;
    Zint k = n;
    while (k > 0) {
        if ((k & 1) != 0) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

namespace {

Zint parse_int_token(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw ParseError("expected integer in '" + s + "'");
    return Zint(s.substr(start, pos - start));
}

}  // namespace

Mat2 parse_mat2(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    std::size_t pos = 0;
    auto expect = [&](char ch) {
        if (pos >= s.size() || s[pos] != ch)
            throw ParseError("matrix must be 'a,b;c,d', got '" + text + "'");
        ++pos;
    };
    Mat2 m;
    m.a = parse_int_token(s, pos);
    expect(',');
    m.b = parse_int_token(s, pos);
    expect(';');
    m.c = parse_int_token(s, pos);
    expect(',');
    m.d = parse_int_token(s, pos);
    if (pos != s.size()) throw ParseError("trailing input in matrix '" + text + "'");
    return m;
}

std::string to_string(const Mat2& m) {
    std::ostringstream out;
    out << m.a << "," << m.b << ";" << m.c << "," << m.d;
    return out.str();
}

std::string rat_to_string(const Qrat& q) {
    std::ostringstream out;
    out << znum(q);
    if (zden(q) != 1) out << "/" << zden(q);
    return out.str();
}

Qrat parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    std::size_t pos = 0;
    Zint num = parse_int_token(s, pos);
    Zint den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = parse_int_token(s, pos);
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    }
    if (pos != s.size()) throw ParseError("trailing input in rational '" + text + "'");
    return Qrat(num, den);
}

std::string to_string(const TorusPointQ& p) {
    return rat_to_string(p.x) + "," + rat_to_string(p.y);
}

TorusPointQ parse_torus_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("torus point must be 'p/q,r/s', got '" + text + "'");
    return TorusPointQ::reduce(parse_rational(text.substr(0, comma)),
                               parse_rational(text.substr(comma + 1)));
}

}  // namespace suspflow
