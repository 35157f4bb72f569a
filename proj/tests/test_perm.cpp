#include <catch2/catch_amalgamated.hpp>

#include "qpa/perm.hpp"

using namespace qpa;

TEST_CASE("composition and inverse")
{
    Perm a{{1, 2, 0}};  // 1->2, 2->3, 3->1 in 1-based terms
    Perm b = perm_inv(a);
    REQUIRE(perm_mul(a, b) == Perm::identity(3));
    REQUIRE(perm_mul(b, a) == Perm::identity(3));
    REQUIRE(perm_sign(a) == 1);
    REQUIRE(perm_sign(Perm::adjacent(4, 1)) == -1);
}

TEST_CASE("rank and unrank are inverse bijections")
{
    for (int n = 0; n <= 5; ++n) {
        int64_t f = factorial64(n);
        for (int64_t r = 0; r < f; ++r) {
            Perm p = perm_unrank(n, r);
            REQUIRE(perm_rank(p) == r);
        }
        // lex order
        for (int64_t r = 0; r + 1 < f; ++r)
            REQUIRE(perm_unrank(n, r) < perm_unrank(n, r + 1));
    }
}

TEST_CASE("reduced words evaluate back to the permutation")
{
    for (int n = 0; n <= 5; ++n) {
        for (int64_t r = 0; r < factorial64(n); ++r) {
            Perm p = perm_unrank(n, r);
            auto w = lex_reduced_word(p);
            REQUIRE(static_cast<int>(w.size()) == inversions(p));
            Perm q = Perm::identity(n);
            for (int i : w)
                q = perm_mul(q, Perm::adjacent(n, i));
            REQUIRE(q == p);
        }
    }
}

TEST_CASE("block cross and shuffle permutation")
{
    // 1_2 x (1 2) in S_4 is the transposition (3 4)
    Perm t = perm_cross(Perm::identity(2), Perm::adjacent(2, 0));
    REQUIRE(t == Perm::adjacent(4, 2));

    Perm tau = perm_tau(2, 1);
    REQUIRE(tau.img == std::vector<uint8_t>({1, 2, 0}));

    // tau_{n,m}(s x t) = (t x s) tau_{n,m}, exhaustively for n+m <= 6
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; n + m <= 6; ++m) {
            Perm tnm = perm_tau(n, m);
            for (int64_t i = 0; i < factorial64(n); ++i)
                for (int64_t j = 0; j < factorial64(m); ++j) {
                    Perm s = perm_unrank(n, i), u = perm_unrank(m, j);
                    REQUIRE(perm_mul(tnm, perm_cross(s, u)) == perm_mul(perm_cross(u, s), tnm));
                }
        }
}
