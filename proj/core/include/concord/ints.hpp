#ifndef CONCORD_INTS_HPP
#define CONCORD_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace concord {

// Exact integer type used by all lattice arithmetic. No floating point
// appears anywhere in the algebra layer.
using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int int_lcm(const Int& a, const Int& b)
{
    if (a == 0 || b == 0) return 0;
    return a / int_gcd(a, b) * b;
}

// Representative of x mod m in [0, m).
inline Int mod_floor(const Int& x, const Int& m)
{
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

inline std::int64_t to_i64(const Int& x) { return static_cast<std::int64_t>(x); }

} // namespace concord

#endif
