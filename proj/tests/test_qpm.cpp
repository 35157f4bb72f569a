#include <catch2/catch_amalgamated.hpp>

#include "qpa/qpm.hpp"

using namespace qpa;

// Degree-zero part of the integral model: C0 = Z, C1 = Z/2, Cee = Z,
// d = 0, H(n) = n(n-1)/2, P = reduction mod 2.
static Qpm zsigma_qpm()
{
    Qpm m;
    m.c0 = AbGroup({Int(0)}, {"1"});
    m.c1 = AbGroup({Int(2)}, {"s"});
    m.cee = AbGroup({Int(0)}, {"e"});
    m.bnd = Mat(1, 1);
    m.pmat = Mat(1, 1);
    m.pmat.at(0, 0) = 1;
    m.hgen = Mat(1, 1);  // H(1) = 0
    m.hpair = {Vec{Int(1)}};
    m.validate_well_defined("zsigma");
    return m;
}

static Qpm broken_qpm()
{
    Qpm m;
    m.c0 = AbGroup({Int(2)}, {"x"});
    m.c1 = AbGroup({Int(2)}, {"s"});
    m.cee = AbGroup({Int(2)}, {"a"});
    m.bnd = Mat(1, 1);
    m.bnd.at(0, 0) = 1;
    m.pmat = Mat(1, 1);
    m.pmat.at(0, 0) = 1;
    m.hgen = Mat(1, 1);
    m.hgen.at(0, 0) = 1;
    m.hpair = {Vec{Int(0)}};
    return m;
}

TEST_CASE("crossed effect and derived maps on the integral model")
{
    Qpm m = zsigma_qpm();
    // (2|3)_H = H(5) - H(3) - H(2) = 10 - 3 - 1 = 6
    REQUIRE(m.crossed({Int(2)}, {Int(3)}) == Vec{Int(6)});
    REQUIRE(m.hval({Int(5)}) == Vec{Int(10)});
    REQUIRE(m.crossed({Int(7)}, m.c0.zero()) == Vec{Int(0)});
    // T(a) = -a since dP = 0
    REQUIRE(m.tmap({Int(5)}) == Vec{Int(-5)});
    // Delta(n) = n
    for (long n = -10; n <= 10; ++n)
        REQUIRE(m.delta({Int(n)}) == Vec{Int(n)});
}

TEST_CASE("qpm axioms on the integral model over a wide window")
{
    Bound b;
    b.window = 50;
    b.budget = 40000;
    Suite s = check_qpm_axioms(zsigma_qpm(), b);
    for (auto& l : s.laws) {
        INFO(l.id);
        REQUIRE(l.status == LawStatus::Pass);
    }
}

TEST_CASE("broken instance fails M1 with witness a = 1")
{
    Suite s = check_qpm_axioms(broken_qpm(), Bound{});
    const LawReport* m1 = s.find("M1");
    REQUIRE(m1 != nullptr);
    REQUIRE(m1->status == LawStatus::Fail);
    REQUIRE(m1->witness.has_value());
    REQUIRE(m1->witness->inputs.at(0).second == "a");  // the generator itself
}

TEST_CASE("all-zero instance passes")
{
    Qpm z = Qpm::zero();
    REQUIRE(check_qpm_axioms(z, Bound{}).all_pass());
}

TEST_CASE("homology of the integral model is (Z, Z/2)")
{
    Qpm m = zsigma_qpm();
    QpmHomology h(m);
    REQUIRE(h.h0_group.factors == Vec{Int(0)});
    REQUIRE(h.h1_group.factors == Vec{Int(2)});
    // k-invariant: 1.eta = 1, 2.eta = 0, and (2x).eta = 0 always
    REQUIRE(k_invariant(m, h, {Int(1)}) == Vec{Int(1)});
    REQUIRE(k_invariant(m, h, {Int(2)}) == Vec{Int(0)});
    for (long x = -8; x <= 8; ++x)
        REQUIRE(k_invariant(m, h, {Int(2 * x)}) == Vec{Int(0)});
}

TEST_CASE("homology of a free two-generator kernel")
{
    // degree 3 of the bracket example: d(p) = z, d(q) = 0
    Qpm m;
    m.c0 = AbGroup({Int(0)}, {"z"});
    m.c1 = AbGroup({Int(0), Int(0)}, {"p", "q"});
    m.cee = AbGroup({}, {});
    m.bnd = Mat(1, 2);
    m.bnd.at(0, 0) = 1;
    m.pmat = Mat(2, 0);
    m.hgen = Mat(0, 1);
    m.hpair = {Vec{}};
    QpmHomology h(m);
    REQUIRE(h.h0_group.factors.empty());     // coker = 0
    REQUIRE(h.h1_group.factors == Vec{Int(0)});  // ker = Z generated by q
    Vec rep = h.h1.rep_of({Int(1)});
    REQUIRE(rep[0] == 0);
    REQUIRE((rep[1] == 1 || rep[1] == -1));
}

TEST_CASE("homology when the boundary is an isomorphism")
{
    Qpm m;
    m.c0 = AbGroup({Int(5)}, {"x"});
    m.c1 = AbGroup({Int(5)}, {"s"});
    m.cee = AbGroup({}, {});
    m.bnd = Mat(1, 1);
    m.bnd.at(0, 0) = 2;  // invertible mod 5
    m.pmat = Mat(1, 0);
    m.hgen = Mat(0, 1);
    m.hpair = {Vec{}};
    QpmHomology h(m);
    REQUIRE(h.h0_group.factors.empty());
    REQUIRE(h.h1_group.factors.empty());
}

TEST_CASE("morphism checking and quasi-isomorphisms")
{
    Qpm m = zsigma_qpm();

    QpmMorphism id{&m, &m, Mat::eye(1), Mat::eye(1), Mat::eye(1)};
    REQUIRE(check_morphism(id, Bound{}).all_pass());
    REQUIRE(is_quasi_iso(id));

    QpmMorphism zero{&m, &m, Mat(1, 1), Mat(1, 1), Mat(1, 1)};
    REQUIRE(check_morphism(zero, Bound{}).all_pass());
    REQUIRE_FALSE(is_quasi_iso(zero));

    // f0 = multiplication by 2, fee = by 4, f1 = 0: the H square fails
    Mat f0(1, 1), f1(1, 1), fee(1, 1);
    f0.at(0, 0) = 2;
    fee.at(0, 0) = 4;
    QpmMorphism bad{&m, &m, f0, f1, fee};
    Suite s = check_morphism(bad, Bound{});
    REQUIRE(s.find("F1")->status == LawStatus::Pass);
    REQUIRE(s.find("F2")->status == LawStatus::Pass);
    REQUIRE(s.find("F3")->status == LawStatus::Fail);
    REQUIRE(s.find("F3")->witness.has_value());
}

TEST_CASE("well-definedness gate: H(n) = n(n-1)/2 is rejected on Z/4")
{
    Qpm m;
    m.c0 = AbGroup({Int(4)}, {"x"});
    m.c1 = AbGroup({Int(2)}, {"s"});
    m.cee = AbGroup({Int(4)}, {"a"});
    m.bnd = Mat(1, 1);
    m.pmat = Mat(1, 1);
    m.pmat.at(0, 0) = 1;
    m.hgen = Mat(1, 1);  // H(g) = 0, pairing 1: H(n) = binom(n,2)
    m.hpair = {Vec{Int(1)}};
    REQUIRE_THROWS_AS(m.validate_well_defined("z4"), LoadError);
}
