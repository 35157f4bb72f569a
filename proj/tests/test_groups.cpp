#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "qpa/groups.hpp"

using namespace qpa;

TEST_CASE("abelian carrier arithmetic")
{
    auto z4 = GroupCarrier::abelian(AbGroup({Int(4)}, {"g"}));
    GroupElement a{z4, {Int(3)}, 0}, b{z4, {Int(2)}, 0};
    REQUIRE(group_add(a, b).coords == Vec{Int(1)});

    auto z = GroupCarrier::abelian(AbGroup({Int(0)}, {"g"}));
    GroupElement x{z, {Int(2)}, 0};
    REQUIRE(group_add(x, group_neg(x)) == group_zero(z));

    auto zz2 = GroupCarrier::abelian(AbGroup({Int(0), Int(2)}, {"a", "b"}));
    GroupElement u{zz2, {Int(1), Int(1)}, 0};
    REQUIRE(group_add(u, u).coords == Vec({Int(2), Int(0)}));

    REQUIRE(group_commutator(a, b) == group_zero(z4));
    REQUIRE_THROWS_AS(group_add(a, x), CarrierMismatch);
}

TEST_CASE("dihedral commutators are the central rotation")
{
    auto d8 = dihedral8();
    // brute-force oracle over the table: collect all commutator values
    auto el = group_elements(d8, 0);
    std::set<int> comm;
    for (auto& a : el)
        for (auto& b : el)
            comm.insert(group_commutator(a, b).idx);
    // exactly {1, r^2}: the identity and the order-2 central rotation
    REQUIRE(comm == std::set<int>({0, 2}));
    // r, s do not commute and [r, s] is the central rotation r^2
    GroupElement r{d8, {}, 1}, s{d8, {}, 4};
    REQUIRE_FALSE(group_add(r, s) == group_add(s, r));
    REQUIRE(group_commutator(r, s).idx == 2);
    // [a, 0] = 0
    REQUIRE(group_commutator(r, group_zero(d8)) == group_zero(d8));
}

TEST_CASE("class-2 checker")
{
    auto z6 = GroupCarrier::abelian(AbGroup({Int(6)}, {"g"}));
    REQUIRE(check_class2(z6, 0).all_pass());

    REQUIRE(check_class2(dihedral8(), 0).all_pass());

    Suite s4 = check_class2(symmetric_table(4), 0);
    REQUIRE_FALSE(s4.all_pass());
    const LawReport* g4 = s4.find("G4");
    REQUIRE(g4 != nullptr);
    REQUIRE(g4->status == LawStatus::Fail);
    REQUIRE(g4->witness.has_value());
}
