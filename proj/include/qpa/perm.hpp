#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qpa/ints.hpp"

namespace qpa {

// Permutation of {0,...,n-1} in one-line notation: img[i] = pi(i).
// Degree 0 (empty permutation) is allowed.
struct Perm {
    std::vector<uint8_t> img;

    Perm() = default;
    explicit Perm(std::vector<uint8_t> v) : img(std::move(v)) {}

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[static_cast<size_t>(i)]; }
    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator!=(const Perm& o) const { return !(*this == o); }
    bool operator<(const Perm& o) const { return img < o.img; }

    static Perm identity(int n)
    {
        std::vector<uint8_t> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), uint8_t{0});
        return Perm{std::move(v)};
    }

    // Adjacent transposition (i, i+1), 0-based, 0 <= i <= n-2.
    static Perm adjacent(int n, int i)
    {
        Perm p = identity(n);
        std::swap(p.img[static_cast<size_t>(i)], p.img[static_cast<size_t>(i) + 1]);
        return p;
    }

    bool is_identity() const
    {
        for (int i = 0; i < degree(); ++i)
            if (img[static_cast<size_t>(i)] != i)
                return false;
        return true;
    }
};

// Function composition: (a*b)(i) = a(b(i)).
inline Perm perm_mul(const Perm& a, const Perm& b)
{
    Perm r;
    r.img.resize(a.img.size());
    for (size_t i = 0; i < a.img.size(); ++i)
        r.img[i] = a.img[b.img[i]];
    return r;
}

inline Perm perm_inv(const Perm& a)
{
    Perm r;
    r.img.resize(a.img.size());
    for (size_t i = 0; i < a.img.size(); ++i)
        r.img[a.img[i]] = static_cast<uint8_t>(i);
    return r;
}

inline int inversions(const Perm& a)
{
    int n = a.degree(), c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a(i) > a(j))
                ++c;
    return c;
}

// sign(pi) = (-1)^{inversions}
inline int perm_sign(const Perm& a)
{
    return (inversions(a) % 2 == 0) ? 1 : -1;
}

// Block permutation sigma x tau on n+m letters: first n by sigma, last m by tau.
inline Perm perm_cross(const Perm& s, const Perm& t)
{
    int n = s.degree(), m = t.degree();
    Perm r;
    r.img.resize(static_cast<size_t>(n + m));
    for (int i = 0; i < n; ++i)
        r.img[static_cast<size_t>(i)] = static_cast<uint8_t>(s(i));
    for (int i = 0; i < m; ++i)
        r.img[static_cast<size_t>(n + i)] = static_cast<uint8_t>(n + t(i));
    return r;
}

// tau_{n,m}: exchanges the first block of n with the last block of m.
// As a function: x < n -> x + m, x >= n -> x - n.
inline Perm perm_tau(int n, int m)
{
    Perm r;
    r.img.resize(static_cast<size_t>(n + m));
    for (int i = 0; i < n; ++i)
        r.img[static_cast<size_t>(i)] = static_cast<uint8_t>(i + m);
    for (int i = 0; i < m; ++i)
        r.img[static_cast<size_t>(n + i)] = static_cast<uint8_t>(i);
    return r;
}

// Lexicographic rank of the one-line word among all n! permutations.
inline int64_t perm_rank(const Perm& a)
{
    int n = a.degree();
    int64_t rank = 0, fact = 1;
    // factorial number system, right to left
    std::vector<int64_t> digits(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int j = i + 1; j < n; ++j)
            if (a(j) < a(i))
                ++d;
        digits[static_cast<size_t>(i)] = d;
    }
    for (int i = n - 1; i >= 0; --i) {
        rank += digits[static_cast<size_t>(i)] * fact;
        fact *= (n - i);
    }
    return rank;
}

inline Perm perm_unrank(int n, int64_t rank)
{
    std::vector<uint8_t> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), uint8_t{0});
    std::vector<int64_t> fact(static_cast<size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i)
        fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i) - 1] * i;
    Perm r;
    r.img.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int64_t f = fact[static_cast<size_t>(n - 1 - i)];
        int64_t d = rank / f;
        rank %= f;
        r.img[static_cast<size_t>(i)] = pool[static_cast<size_t>(d)];
        pool.erase(pool.begin() + d);
    }
    return r;
}

inline int64_t factorial64(int n)
{
    int64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Lexicographically smallest reduced word for pi: at each step take the
// smallest left descent i (value i placed after value i+1) and strip it.
// The word multiplies out left to right under perm_mul.
inline std::vector<int> lex_reduced_word(Perm p)
{
    std::vector<int> w;
    int n = p.degree();
    Perm inv = perm_inv(p);
    while (true) {
        int pick = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (inv(i) > inv(i + 1)) {
                pick = i;
                break;
            }
        }
        if (pick < 0)
            break;
        w.push_back(pick);
        // p <- s_pick * p: swap values pick, pick+1
        std::swap(inv.img[static_cast<size_t>(pick)], inv.img[static_cast<size_t>(pick) + 1]);
    }
    return w;
}

inline std::string perm_to_string(const Perm& p)
{
    std::string s = "[";
    for (int i = 0; i < p.degree(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(p(i) + 1);
    }
    s += ']';
    return s;
}

}  // namespace qpa
