#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpa {

// Exact integer used for all group/algebra arithmetic.
using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CarrierMismatch : Error {
    using Error::Error;
};
struct DegreeMismatch : Error {
    using Error::Error;
};
struct LoadError : Error {
    using Error::Error;
};
struct UnsupportedCarrier : Error {
    using Error::Error;
};

// a(a-1)/2 as a polynomial, valid for any integer (binom(-1,2) = 1).
inline Int binom2(const Int& a)
{
    return a * (a - 1) / 2;
}

// Representative of a mod m in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m)
{
    Int r = a % m;
    if (r < 0)
        r += m;
    return r;
}

inline bool is_even(const Int& a)
{
    return a % 2 == 0;
}

// (-1)^e
inline int neg_one_pow(const Int& e)
{
    return is_even(e) ? 1 : -1;
}

inline std::string to_string(const Int& a)
{
    return a.str();
}

inline Vec vec_add(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_neg(const Vec& a)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

inline Vec vec_scale(const Int& k, const Vec& a)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = k * a[i];
    return r;
}

inline bool vec_is_zero(const Vec& a)
{
    for (auto& x : a)
        if (x != 0)
            return false;
    return true;
}

}  // namespace qpa
