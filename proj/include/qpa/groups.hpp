#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qpa/abelian.hpp"
#include "qpa/perm.hpp"
#include "qpa/report.hpp"

namespace qpa {

// Finite group given by its multiplication table. Only used for carriers of
// nilpotency class checks; the instance file format stays abelian.
struct FiniteTable {
    int n = 0;
    std::vector<int> mul;  // n x n, row-major
    std::vector<int> inv;
    int id = 0;
    std::vector<std::string> names;

    int at(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }
};

enum class CarrierKind { Abelian, Table };

class GroupCarrier {
public:
    CarrierKind kind;
    AbGroup ab;
    FiniteTable tbl;

    static std::shared_ptr<const GroupCarrier> abelian(AbGroup g)
    {
        auto c = std::make_shared<GroupCarrier>();
        c->kind = CarrierKind::Abelian;
        c->ab = std::move(g);
        return c;
    }

    static std::shared_ptr<const GroupCarrier> table(FiniteTable t)
    {
        auto c = std::make_shared<GroupCarrier>();
        c->kind = CarrierKind::Table;
        c->tbl = std::move(t);
        return c;
    }
};

using CarrierPtr = std::shared_ptr<const GroupCarrier>;

struct GroupElement {
    CarrierPtr carrier;
    Vec coords;  // abelian
    int idx = 0; // table

    bool operator==(const GroupElement& o) const
    {
        if (carrier != o.carrier)
            return false;
        return carrier->kind == CarrierKind::Abelian ? coords == o.coords : idx == o.idx;
    }
};

inline void require_same_carrier(const GroupElement& a, const GroupElement& b)
{
    if (a.carrier != b.carrier)
        throw CarrierMismatch("elements of distinct carriers");
}

inline GroupElement group_zero(const CarrierPtr& c)
{
    if (c->kind == CarrierKind::Abelian)
        return GroupElement{c, c->ab.zero(), 0};
    return GroupElement{c, {}, c->tbl.id};
}

inline GroupElement group_add(const GroupElement& a, const GroupElement& b)
{
    require_same_carrier(a, b);
    if (a.carrier->kind == CarrierKind::Abelian)
        return GroupElement{a.carrier, a.carrier->ab.add(a.coords, b.coords), 0};
    return GroupElement{a.carrier, {}, a.carrier->tbl.at(a.idx, b.idx)};
}

inline GroupElement group_neg(const GroupElement& a)
{
    if (a.carrier->kind == CarrierKind::Abelian)
        return GroupElement{a.carrier, a.carrier->ab.neg(a.coords), 0};
    return GroupElement{a.carrier, {}, a.carrier->tbl.inv[static_cast<size_t>(a.idx)]};
}

// [a, b] = -a - b + a + b
inline GroupElement group_commutator(const GroupElement& a, const GroupElement& b)
{
    require_same_carrier(a, b);
    GroupElement r = group_add(group_neg(a), group_neg(b));
    r = group_add(r, a);
    return group_add(r, b);
}

inline std::vector<GroupElement> group_elements(const CarrierPtr& c, long window)
{
    std::vector<GroupElement> out;
    if (c->kind == CarrierKind::Abelian) {
        for (auto& v : c->ab.elements(window))
            out.push_back(GroupElement{c, v, 0});
    } else {
        for (int i = 0; i < c->tbl.n; ++i)
            out.push_back(GroupElement{c, {}, i});
    }
    return out;
}

inline std::string group_show(const GroupElement& a)
{
    if (a.carrier->kind == CarrierKind::Abelian)
        return a.carrier->ab.show(a.coords);
    auto& nm = a.carrier->tbl.names;
    return nm.empty() ? ("g" + std::to_string(a.idx)) : nm[static_cast<size_t>(a.idx)];
}

// Group laws plus class-2 structure: commutators central and bilinear.
inline Suite check_class2(const CarrierPtr& c, long bound)
{
    auto el = group_elements(c, bound);
    auto wit = [&](std::initializer_list<const GroupElement*> xs, const GroupElement& l, const GroupElement& r) {
        Witness w;
        int k = 0;
        for (auto* x : xs)
            w.inputs.emplace_back("x" + std::to_string(++k), group_show(*x));
        w.lhs = group_show(l);
        w.rhs = group_show(r);
        return w;
    };
    LawCheck g1("G1", "associativity"), g2("G2", "two-sided zero"), g3("G3", "two-sided negatives"),
        g4("G4", "commutators are central"), g5("G5", "commutator is bilinear");
    GroupElement z = group_zero(c);
    for (auto& a : el) {
        g2.tuple(group_add(a, z) == a && group_add(z, a) == a, [&] { return wit({&a}, a, a); });
        g3.tuple(group_add(a, group_neg(a)) == z && group_add(group_neg(a), a) == z,
                 [&] { return wit({&a}, a, z); });
    }
    // evenly spaced subsample for the cubic part of large windows
    std::vector<GroupElement> el3 = el;
    const size_t cap = 24;
    if (el3.size() > cap) {
        std::vector<GroupElement> thin;
        for (size_t k = 0; k < cap; ++k)
            thin.push_back(el3[k * (el3.size() - 1) / (cap - 1)]);
        el3 = std::move(thin);
    }
    for (auto& a : el3)
        for (auto& b : el3)
            for (auto& d : el3) {
                GroupElement l = group_add(group_add(a, b), d), r = group_add(a, group_add(b, d));
                if (!g1.tuple(l == r, [&] { return wit({&a, &b, &d}, l, r); }))
                    break;
                // centrality: [d, [a,b]] = 0
                GroupElement com = group_commutator(a, b);
                GroupElement cc = group_commutator(d, com);
                g4.tuple(cc == z, [&] { return wit({&a, &b, &d}, cc, z); });
                // bilinearity: [a+b, d] = [a,d] + [b,d] and symmetrically
                GroupElement bl = group_commutator(group_add(a, b), d);
                GroupElement br = group_add(group_commutator(a, d), group_commutator(b, d));
                GroupElement bl2 = group_commutator(a, group_add(b, d));
                GroupElement br2 = group_add(group_commutator(a, b), group_commutator(a, d));
                g5.tuple(bl == br && bl2 == br2, [&] { return wit({&a, &b, &d}, bl, br); });
            }
    Suite s;
    s.laws = {g1.done(), g2.done(), g3.done(), g4.done(), g5.done()};
    return s;
}

// Dihedral group of order 8 as a table: r rotation, s reflection.
inline CarrierPtr dihedral8()
{
    FiniteTable t;
    t.n = 8;
    t.names = {"1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
    auto idx = [](int rot, int ref) { return (ref ? 4 : 0) + rot; };
    t.mul.assign(64, 0);
    for (int i = 0; i < 4; ++i)
        for (int fi = 0; fi < 2; ++fi)
            for (int j = 0; j < 4; ++j)
                for (int fj = 0; fj < 2; ++fj) {
                    // (r^i s^fi)(r^j s^fj) = r^{i + (fi ? -j : j)} s^{fi^fj}
                    int rot = ((i + (fi ? 4 - j : j)) % 4);
                    t.mul[static_cast<size_t>(idx(i, fi)) * 8 + idx(j, fj)] = idx(rot, fi ^ fj);
                }
    t.id = 0;
    t.inv.assign(8, 0);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            if (t.at(a, b) == 0)
                t.inv[static_cast<size_t>(a)] = b;
    return GroupCarrier::table(std::move(t));
}

// The symmetric group on n letters as a table (small n only).
inline CarrierPtr symmetric_table(int n)
{
    FiniteTable t;
    t.n = static_cast<int>(factorial64(n));
    t.mul.assign(static_cast<size_t>(t.n) * t.n, 0);
    t.inv.assign(static_cast<size_t>(t.n), 0);
    for (int a = 0; a < t.n; ++a) {
        Perm pa = perm_unrank(n, a);
        t.inv[static_cast<size_t>(a)] = static_cast<int>(perm_rank(perm_inv(pa)));
        for (int b = 0; b < t.n; ++b)
            t.mul[static_cast<size_t>(a) * t.n + b] =
                static_cast<int>(perm_rank(perm_mul(pa, perm_unrank(n, b))));
        t.names.push_back(perm_to_string(pa));
    }
    t.id = 0;
    return GroupCarrier::table(std::move(t));
}

}  // namespace qpa
