#pragma once

#include <cstdint>
#include <string>

#include "qpa/ints.hpp"

namespace qpa {

// Exact element of Z[sqrt2, 1/2]: (a + b*sqrt2) / 2^e, e >= 0, normalized so
// that e == 0 or a, b are not both even. Pin-group coefficients stay tiny
// (unit norm), so 64-bit numerators are ample; normalize() guards the bound.
struct Dyadic {
    int64_t a = 0, b = 0;
    int e = 0;

    Dyadic() = default;
    Dyadic(int64_t a_, int64_t b_, int e_) : a(a_), b(b_), e(e_) { normalize(); }

    static Dyadic one() { return Dyadic(1, 0, 0); }
    static Dyadic minus_one() { return Dyadic(-1, 0, 0); }
    static Dyadic inv_sqrt2() { return Dyadic(0, 1, 1); }  // sqrt2 / 2

    bool is_zero() const { return a == 0 && b == 0; }

    void normalize()
    {
        if (a == 0 && b == 0) {
            e = 0;
            return;
        }
        while (e > 0 && a % 2 == 0 && b % 2 == 0) {
            a /= 2;
            b /= 2;
            --e;
        }
        if (e > 48)
            throw Error("dyadic exponent out of range");
    }

    bool operator==(const Dyadic& o) const { return a == o.a && b == o.b && e == o.e; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    Dyadic operator-() const
    {
        Dyadic r;
        r.a = -a;
        r.b = -b;
        r.e = e;
        return r;
    }

    Dyadic operator+(const Dyadic& o) const
    {
        Dyadic r;
        int ee = e > o.e ? e : o.e;
        r.a = (a << (ee - e)) + (o.a << (ee - o.e));
        r.b = (b << (ee - e)) + (o.b << (ee - o.e));
        r.e = ee;
        r.normalize();
        return r;
    }

    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }

    Dyadic operator*(const Dyadic& o) const
    {
        Dyadic r;
        r.a = a * o.a + 2 * b * o.b;
        r.b = a * o.b + b * o.a;
        r.e = e + o.e;
        r.normalize();
        return r;
    }

    // multiply by 1/sqrt2: (a + b sqrt2)/sqrt2 = (2b + a sqrt2)/2
    Dyadic div_sqrt2() const
    {
        Dyadic r;
        r.a = 2 * b;
        r.b = a;
        r.e = e + 1;
        r.normalize();
        return r;
    }

    std::string str() const
    {
        std::string s = "(" + std::to_string(a) + "+" + std::to_string(b) + "*r2)/2^" + std::to_string(e);
        return s;
    }
};

}  // namespace qpa
