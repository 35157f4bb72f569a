#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qpa/ints.hpp"

namespace qpa {

struct Mat {
    int rows = 0, cols = 0;
    Vec a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat eye(int n)
    {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    Vec col(int c) const
    {
        Vec v(static_cast<size_t>(rows));
        for (int r = 0; r < rows; ++r)
            v[static_cast<size_t>(r)] = at(r, c);
        return v;
    }

    Vec apply(const Vec& x) const
    {
        Vec y(static_cast<size_t>(rows), Int(0));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (at(r, c) != 0)
                    y[static_cast<size_t>(r)] += at(r, c) * x[static_cast<size_t>(c)];
        return y;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline Mat mat_mul(const Mat& a, const Mat& b)
{
    Mat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& v = a.at(i, k);
            if (v == 0)
                continue;
            for (int j = 0; j < b.cols; ++j)
                if (b.at(k, j) != 0)
                    r.at(i, j) += v * b.at(k, j);
        }
    return r;
}

// Smith normal form s = u * m * v with u, v unimodular; u_inv tracks u^{-1}.
// Diagonal entries are nonnegative and d_i | d_{i+1}.
struct Snf {
    Mat s, u, u_inv, v;
    int rank = 0;

    Vec diag() const
    {
        int n = std::min(s.rows, s.cols);
        Vec d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            d[static_cast<size_t>(i)] = s.at(i, i);
        return d;
    }
};

inline Snf smith(const Mat& m)
{
    Snf f;
    f.s = m;
    f.u = Mat::eye(m.rows);
    f.u_inv = Mat::eye(m.rows);
    f.v = Mat::eye(m.cols);
    Mat& s = f.s;

    auto swap_rows = [&](int r1, int r2) {
        if (r1 == r2)
            return;
        for (int c = 0; c < s.cols; ++c)
            std::swap(s.at(r1, c), s.at(r2, c));
        for (int c = 0; c < f.u.cols; ++c)
            std::swap(f.u.at(r1, c), f.u.at(r2, c));
        for (int r = 0; r < f.u_inv.rows; ++r)
            std::swap(f.u_inv.at(r, r1), f.u_inv.at(r, r2));
    };
    auto swap_cols = [&](int c1, int c2) {
        if (c1 == c2)
            return;
        for (int r = 0; r < s.rows; ++r)
            std::swap(s.at(r, c1), s.at(r, c2));
        for (int r = 0; r < f.v.rows; ++r)
            std::swap(f.v.at(r, c1), f.v.at(r, c2));
    };
    // row r2 += k * row r1
    auto add_row = [&](int r1, int r2, const Int& k) {
        if (k == 0)
            return;
        for (int c = 0; c < s.cols; ++c)
            s.at(r2, c) += k * s.at(r1, c);
        for (int c = 0; c < f.u.cols; ++c)
            f.u.at(r2, c) += k * f.u.at(r1, c);
        for (int r = 0; r < f.u_inv.rows; ++r)
            f.u_inv.at(r, r1) -= k * f.u_inv.at(r, r2);
    };
    // col c2 += k * col c1
    auto add_col = [&](int c1, int c2, const Int& k) {
        if (k == 0)
            return;
        for (int r = 0; r < s.rows; ++r)
            s.at(r, c2) += k * s.at(r, c1);
        for (int r = 0; r < f.v.rows; ++r)
            f.v.at(r, c2) += k * f.v.at(r, c1);
    };
    auto negate_row = [&](int r) {
        for (int c = 0; c < s.cols; ++c)
            s.at(r, c) = -s.at(r, c);
        for (int c = 0; c < f.u.cols; ++c)
            f.u.at(r, c) = -f.u.at(r, c);
        for (int rr = 0; rr < f.u_inv.rows; ++rr)
            f.u_inv.at(rr, r) = -f.u_inv.at(rr, r);
    };

    int nmin = std::min(s.rows, s.cols);
    int t = 0;
    while (t < nmin) {
        // locate minimal nonzero absolute value in the trailing submatrix
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < s.rows; ++r)
            for (int c = t; c < s.cols; ++c) {
                if (s.at(r, c) == 0)
                    continue;
                Int v = abs(s.at(r, c));
                if (pr < 0 || v < best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0)
            break;  // trailing submatrix is zero
        swap_rows(t, pr);
        swap_cols(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < s.rows; ++r) {
                if (s.at(r, t) == 0)
                    continue;
                Int q = s.at(r, t) / s.at(t, t);
                add_row(t, r, -q);
                if (s.at(r, t) != 0) {
                    // remainder became the new, smaller pivot
                    swap_rows(t, r);
                    clean = false;
                }
            }
            for (int c = t + 1; c < s.cols; ++c) {
                if (s.at(t, c) == 0)
                    continue;
                Int q = s.at(t, c) / s.at(t, t);
                add_col(t, c, -q);
                if (s.at(t, c) != 0) {
                    swap_cols(t, c);
                    clean = false;
                }
            }
        }
        // enforce divisibility of the remaining entries by the pivot
        bool divisible = true;
        for (int r = t + 1; r < s.rows && divisible; ++r)
            for (int c = t + 1; c < s.cols && divisible; ++c)
                if (s.at(r, c) % s.at(t, t) != 0) {
                    add_row(r, t, 1);
                    divisible = false;
                }
        if (!divisible)
            continue;  // re-run pivot clearing at the same t
        if (s.at(t, t) < 0)
            negate_row(t);
        ++t;
    }
    f.rank = 0;
    for (int i = 0; i < nmin; ++i)
        if (s.at(i, i) != 0)
            ++f.rank;
    return f;
}

// Particular solution of m * x = b over the integers, if one exists.
inline std::optional<Vec> solve(const Snf& f, const Vec& b)
{
    Vec c = f.u.apply(b);
    Vec y(static_cast<size_t>(f.s.cols), Int(0));
    int nmin = std::min(f.s.rows, f.s.cols);
    for (int i = 0; i < f.s.rows; ++i) {
        const Int& d = (i < nmin) ? f.s.at(i, i) : Int(0);
        if (d == 0) {
            if (c[static_cast<size_t>(i)] != 0)
                return std::nullopt;
        } else {
            if (c[static_cast<size_t>(i)] % d != 0)
                return std::nullopt;
            y[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] / d;
        }
    }
    return f.v.apply(y);
}

inline std::optional<Vec> solve(const Mat& m, const Vec& b)
{
    return solve(smith(m), b);
}

// Basis of the integer kernel of m: columns of v past the rank.
inline Mat kernel_basis(const Snf& f)
{
    int k = f.s.cols - f.rank;
    Mat b(f.s.cols, k);
    for (int j = 0; j < k; ++j)
        for (int r = 0; r < f.s.cols; ++r)
            b.at(r, j) = f.v.at(r, f.rank + j);
    return b;
}

// Basis of the column lattice of m (independent columns spanning it):
// d_i * (u_inv column i) for the nonzero diagonal entries.
inline Mat lattice_basis(const Mat& m)
{
    Snf f = smith(m);
    Mat b(m.rows, f.rank);
    for (int j = 0; j < f.rank; ++j)
        for (int r = 0; r < m.rows; ++r)
            b.at(r, j) = f.s.at(j, j) * f.u_inv.at(r, j);
    return b;
}

inline Mat hcat(const Mat& a, const Mat& b)
{
    Mat r(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j)
            r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j)
            r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

}  // namespace qpa
