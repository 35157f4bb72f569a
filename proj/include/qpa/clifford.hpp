#pragma once

#include <cstdint>
#include <vector>

#include "qpa/dyadic.hpp"
#include "qpa/perm.hpp"

namespace qpa {

// Reference model for the symmetric track groups: the Clifford algebra of
// R^n with e_i^2 = +1, elements stored densely over basis masks. The
// generator t_i maps to (e_i - e_{i+1})/sqrt2 in the positive pin group.
struct PinElem {
    int n = 0;
    std::vector<Dyadic> c;  // indexed by subset bitmask

    explicit PinElem(int n_) : n(n_), c(size_t{1} << n_) {}

    static PinElem scalar(int n, const Dyadic& v)
    {
        PinElem r(n);
        r.c[0] = v;
        return r;
    }

    static PinElem one(int n) { return scalar(n, Dyadic::one()); }

    // t_i with 0-based i: (e_i - e_{i+1})/sqrt2
    static PinElem generator(int n, int i)
    {
        PinElem r(n);
        r.c[size_t{1} << i] = Dyadic::inv_sqrt2();
        r.c[size_t{1} << (i + 1)] = -Dyadic::inv_sqrt2();
        return r;
    }

    bool operator==(const PinElem& o) const { return n == o.n && c == o.c; }

    PinElem operator-() const
    {
        PinElem r(n);
        for (size_t i = 0; i < c.size(); ++i)
            r.c[i] = -c[i];
        return r;
    }
};

// sign of e_S * e_T = sign * e_{S xor T}: each t in T moves left past the
// elements of S greater than t.
inline int clifford_sign(uint32_t s, uint32_t t)
{
    int parity = 0;
    uint32_t rest = t;
    while (rest) {
        int bit = __builtin_ctz(rest);
        rest &= rest - 1;
        uint32_t above = s >> (bit + 1);
        parity ^= __builtin_popcount(above) & 1;
    }
    return parity ? -1 : 1;
}

// Lazily built sign table for one degree.
struct CliffordSigns {
    int n;
    std::vector<int8_t> tbl;  // (1<<n) x (1<<n)

    explicit CliffordSigns(int n_) : n(n_)
    {
        size_t m = size_t{1} << n;
        tbl.resize(m * m);
        for (uint32_t s = 0; s < m; ++s)
            for (uint32_t t = 0; t < m; ++t)
                tbl[(size_t{s} << n) | t] = static_cast<int8_t>(clifford_sign(s, t));
    }

    int sign(uint32_t s, uint32_t t) const { return tbl[(size_t{s} << n) | t]; }
};

inline PinElem pin_mul(const PinElem& x, const PinElem& y, const CliffordSigns& sg)
{
    PinElem r(x.n);
    size_t m = x.c.size();
    for (size_t s = 0; s < m; ++s) {
        const Dyadic& xs = x.c[s];
        if (xs.is_zero())
            continue;
        for (size_t t = 0; t < m; ++t) {
            const Dyadic& yt = y.c[t];
            if (yt.is_zero())
                continue;
            Dyadic v = xs * yt;
            if (sg.sign(static_cast<uint32_t>(s), static_cast<uint32_t>(t)) < 0)
                v = -v;
            size_t u = s ^ t;
            r.c[u] = r.c[u] + v;
        }
    }
    return r;
}

// Multiply on the right by generator t_i (two terms only).
inline PinElem pin_mul_gen(const PinElem& x, int i, const CliffordSigns& sg)
{
    PinElem r(x.n);
    size_t m = x.c.size();
    uint32_t g0 = uint32_t{1} << i, g1 = uint32_t{1} << (i + 1);
    for (size_t s = 0; s < m; ++s) {
        const Dyadic& xs = x.c[s];
        if (xs.is_zero())
            continue;
        Dyadic v = xs.div_sqrt2();
        Dyadic v0 = sg.sign(static_cast<uint32_t>(s), g0) < 0 ? -v : v;
        Dyadic v1 = sg.sign(static_cast<uint32_t>(s), g1) < 0 ? v : -v;
        r.c[s ^ g0] = r.c[s ^ g0] + v0;
        r.c[s ^ g1] = r.c[s ^ g1] + v1;
    }
    return r;
}

// Evaluate a generator word (0-based letters) in the model.
inline PinElem pin_eval_word(int n, const std::vector<int>& word, const CliffordSigns& sg)
{
    PinElem r = PinElem::one(n);
    for (int i : word)
        r = pin_mul_gen(r, i, sg);
    return r;
}

}  // namespace qpa
