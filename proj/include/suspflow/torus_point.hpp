#pragma once

#include <compare>
#include <string>

#include "suspflow/numbers.hpp"

namespace suspflow {

// Exact rational point of T^2 = Q^2/Z^2, stored canonically in [0,1)^2.
struct TorusPointQ {
    Qrat x{0}, y{0};

    static TorusPointQ reduce(const Qrat& x, const Qrat& y) {
        return TorusPointQ{mod_one(x), mod_one(y)};
    }

    friend bool operator==(const TorusPointQ&, const TorusPointQ&) = default;
    std::strong_ordering operator<=>(const TorusPointQ& o) const {
        if (x != o.x) return x < o.x ? std::strong_ordering::less : std::strong_ordering::greater;
        if (y != o.y) return y < o.y ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

// "p/q,r/s"; integer coordinates may omit the denominator.
std::string to_string(const TorusPointQ& p);
TorusPointQ parse_torus_point(const std::string& text);

}  // namespace suspflow
