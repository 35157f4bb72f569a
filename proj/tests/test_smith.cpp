#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qpa/abelian.hpp"

using namespace qpa;

static Mat from_rows(int r, int c, std::vector<long> v)
{
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = Int(v[static_cast<size_t>(i * c + j)]);
    return m;
}

TEST_CASE("smith normal form on known matrices")
{
    Snf f = smith(from_rows(2, 2, {2, 0, 0, 3}));
    REQUIRE(f.diag() == Vec({Int(1), Int(6)}));

    Snf g = smith(from_rows(2, 2, {2, 4, 6, 8}));
    REQUIRE(g.diag() == Vec({Int(2), Int(4)}));

    // transforms are consistent: s = u m v, u u_inv = 1
    Mat m = from_rows(2, 3, {4, -2, 6, 2, 2, 2});
    Snf h = smith(m);
    REQUIRE(mat_mul(mat_mul(h.u, m), h.v) == h.s);
    REQUIRE(mat_mul(h.u, h.u_inv) == Mat::eye(2));
    for (int i = 0; i + 1 < 2; ++i)
        if (h.s.at(i, i) != 0 && h.s.at(i + 1, i + 1) != 0)
            REQUIRE(h.s.at(i + 1, i + 1) % h.s.at(i, i) == 0);
}

TEST_CASE("smith transforms on random matrices")
{
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        Mat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                m.at(i, j) = Int(static_cast<long>(rng() % 21) - 10);
        Snf f = smith(m);
        REQUIRE(mat_mul(mat_mul(f.u, m), f.v) == f.s);
        REQUIRE(mat_mul(f.u, f.u_inv) == Mat::eye(r));
        Vec d = f.diag();
        for (size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] != 0 && d[i + 1] != 0)
                REQUIRE(d[i + 1] % d[i] == 0);
    }
}

TEST_CASE("integer solve and kernel")
{
    REQUIRE(solve(from_rows(1, 1, {6}), Vec{Int(12)}).value() == Vec{Int(2)});
    REQUIRE_FALSE(solve(from_rows(1, 1, {2}), Vec{Int(3)}).has_value());

    Mat m = from_rows(1, 2, {1, -1});
    Mat k = kernel_basis(smith(m));
    REQUIRE(k.cols == 1);
    REQUIRE(k.at(0, 0) == k.at(1, 0));
    REQUIRE(k.at(0, 0) != 0);
}

TEST_CASE("quotient presentations")
{
    AbGroup z2free(Vec{Int(0), Int(0)}, {"a", "b"});
    Quotient q(z2free, from_rows(2, 2, {2, 0, 0, 3}));
    REQUIRE(q.factors == Vec{Int(6)});
    // class arithmetic round-trips
    Vec cls = q.class_of({Int(1), Int(1)});
    REQUIRE(q.class_of(q.rep_of(cls)) == cls);
    REQUIRE(q.is_zero({Int(2), Int(3)}));
    REQUIRE_FALSE(q.is_zero({Int(1), Int(0)}));

    // Z/4 modulo <2> is Z/2
    AbGroup z4(Vec{Int(4)}, {"g"});
    Quotient q2(z4, from_rows(1, 1, {2}));
    REQUIRE(q2.factors == Vec{Int(2)});
}

TEST_CASE("kernel presentation with section")
{
    // d(p) = z, d(q) = 0 between free groups: kernel is Z generated by q
    AbGroup c1(Vec{Int(0), Int(0)}, {"p", "q"});
    AbGroup c0(Vec{Int(0)}, {"z"});
    KernelPresentation k(c1, c0, from_rows(1, 2, {1, 0}));
    REQUIRE(k.q.factors == Vec{Int(0)});
    Vec cls = k.class_of({Int(0), Int(5)});
    REQUIRE(cls.size() == 1);
    REQUIRE((cls[0] == 5 || cls[0] == -5));
    REQUIRE(k.class_of(k.rep_of(cls)) == cls);
    REQUIRE_THROWS(k.class_of({Int(1), Int(0)}));

    // kernel of reduction Z -> Z/2 is 2Z, still free of rank one
    AbGroup z(Vec{Int(0)}, {"x"});
    AbGroup z2(Vec{Int(2)}, {"y"});
    KernelPresentation k2(z, z2, from_rows(1, 1, {1}));
    REQUIRE(k2.q.factors == Vec{Int(0)});
    REQUIRE(k2.class_of({Int(4)}).size() == 1);
    REQUIRE_THROWS(k2.class_of({Int(1)}));

    // subgroup membership
    AbGroup amb(Vec{Int(0), Int(0)}, {"u", "v"});
    Mat gen = from_rows(2, 1, {2, 4});
    REQUIRE(subgroup_member(amb, gen, {Int(4), Int(8)}));
    REQUIRE_FALSE(subgroup_member(amb, gen, {Int(2), Int(3)}));
}
