#pragma once

#include "qpa/algebra.hpp"
#include "qpa/enumerate.hpp"

namespace qpa {

namespace detail {

struct DegPair {
    int n, m;
};
struct DegTriple {
    int n, m, k;
};

inline std::vector<DegPair> deg_pairs(const ModuleView& v)
{
    std::vector<DegPair> out;
    for (int n = 0; n <= v.DL; ++n)
        for (int m = 0; m <= v.alg->D && n + m <= v.DL; ++m)
            out.push_back({n, m});
    return out;
}

inline std::vector<DegTriple> deg_triples(const ModuleView& v)
{
    std::vector<DegTriple> out;
    for (int n = 0; n <= v.DL; ++n)
        for (int m = 0; m <= v.alg->D; ++m)
            for (int k = 0; k <= v.alg->D && n + m + k <= v.DL; ++k)
                out.push_back({n, m, k});
    return out;
}

inline Bound split_budget(const Bound& b, size_t ncombos)
{
    Bound r = b;
    r.budget = std::max<long long>(125, b.budget / static_cast<long long>(ncombos ? ncombos : 1));
    return r;
}

inline Witness elem_witness(const ModuleView& v, std::initializer_list<std::pair<const char*, const Elem*>> in,
                            const Elem& lhs, const Elem& rhs)
{
    Witness w;
    for (auto& [k, e] : in)
        w.inputs.emplace_back(std::string(k) + "@" + std::to_string(e->deg), v.lshow(*e));
    w.lhs = v.lshow(lhs);
    w.rhs = v.lshow(rhs);
    return w;
}

inline Witness elem_witness2(const ModuleView& v, std::initializer_list<std::pair<const char*, const Elem*>> left_in,
                             std::initializer_list<std::pair<const char*, const Elem*>> alg_in, const Elem& lhs,
                             const Elem& rhs)
{
    Witness w;
    for (auto& [k, e] : left_in)
        w.inputs.emplace_back(std::string(k) + "@" + std::to_string(e->deg), v.lshow(*e));
    for (auto& [k, e] : alg_in)
        w.inputs.emplace_back(std::string(k) + "@" + std::to_string(e->deg), v.alg->show(*e));
    w.lhs = v.lshow(lhs);
    w.rhs = v.lshow(rhs);
    return w;
}

}  // namespace detail

// Associativity, right linearity, left distributivity with corrections,
// boundary compatibility, the P/H compatibility axioms, the derived sign
// rules of Lemma menos, and the unit laws. For a module view the leftmost
// slot of every product ranges over the module.
inline Suite module_axiom_suite(const ModuleView& v, const Bound& bound)
{
    using detail::elem_witness;
    using detail::elem_witness2;
    const GradedQpa& B = *v.alg;
    Suite out;
    auto pairs = detail::deg_pairs(v);
    auto triples = detail::deg_triples(v);

    {
        LawCheck law("A1", "associativity of the four multiplications");
        Bound pb = detail::split_budget(bound, triples.size() * 5);
        for (auto [n, m, k] : triples) {
            struct Combo {
                Level l1, l2, l3;
            };
            for (Combo cb : {Combo{Level::L0, Level::L0, Level::L0}, Combo{Level::L0, Level::L0, Level::L1},
                             Combo{Level::L0, Level::L1, Level::L0}, Combo{Level::L1, Level::L0, Level::L0},
                             Combo{Level::Lee, Level::Lee, Level::Lee}}) {
                const AbGroup& g1 = v.lcarrier(n, cb.l1);
                const AbGroup& g2 = B.carrier(m, cb.l2);
                const AbGroup& g3 = B.carrier(k, cb.l3);
                for_tuples(tuple_space({&g1, &g2, &g3}, pb), [&](auto& t) {
                    Elem a{n, cb.l1, *t[0]}, b{m, cb.l2, *t[1]}, c{k, cb.l3, *t[2]};
                    Elem bc = qpa_mul(B, b, c);
                    Elem lhs = v.mul(v.mul(a, b), c);
                    Elem rhs = v.mul(a, bc);
                    return law.tuple(v.leq(lhs, rhs), [&] {
                        return elem_witness2(v, {{"a", &a}}, {{"b", &b}, {"c", &c}}, lhs, rhs);
                    });
                });
            }
        }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("A2", "(rl) multiplications are right linear");
        Bound pb = detail::split_budget(bound, pairs.size() * 4);
        for (auto [n, m] : pairs) {
            struct Row {
                Level ll, lr;
            };
            for (Row row : {Row{Level::L0, Level::L0}, Row{Level::L0, Level::L1}, Row{Level::L1, Level::L0},
                            Row{Level::Lee, Level::Lee}}) {
                const AbGroup& gl = v.lcarrier(n, row.ll);
                const AbGroup& gr = B.carrier(m, row.lr);
                for_tuples(tuple_space({&gl, &gr, &gr}, pb), [&](auto& t) {
                    Elem a{n, row.ll, *t[0]}, b{m, row.lr, *t[1]}, c{m, row.lr, *t[2]};
                    Elem lhs = v.mul(a, B.add(b, c));
                    Elem rhs = v.ladd(v.mul(a, b), v.mul(a, c));
                    return law.tuple(v.leq(lhs, rhs), [&] {
                        return elem_witness2(v, {{"a", &a}}, {{"b", &b}, {"c", &c}}, lhs, rhs);
                    });
                });
            }
        }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("A3", "(ldl) left distributivity with quadratic correction");
        Bound pb = detail::split_budget(bound, pairs.size() * 4);
        for (auto [n, m] : pairs) {
            const Qpm& Ln = v.left(n);
            const Qpm& Bm = B.level(m);
            // (x1+x2).y = x1 y + x2 y + dP((x2|x1)_H . H(y))
            for_tuples(tuple_space({&Ln.c0, &Ln.c0, &Bm.c0}, pb), [&](auto& t) {
                Elem x1{n, Level::L0, *t[0]}, x2{n, Level::L0, *t[1]}, y{m, Level::L0, *t[2]};
                Elem lhs = v.mul(v.ladd(x1, x2), y);
                Vec corr = v.mulee_vec(n, m, Ln.crossed(x2.c, x1.c), Bm.hval(y.c));
                const Qpm& T = v.left(n + m);
                Elem rhs = v.ladd(v.ladd(v.mul(x1, y), v.mul(x2, y)),
                                  Elem{n + m, Level::L0, T.del(T.pval(corr))});
                return law.tuple(v.leq(lhs, rhs), [&] {
                    return elem_witness2(v, {{"x1", &x1}, {"x2", &x2}}, {{"y", &y}}, lhs, rhs);
                });
            });
            // (x1+x2).s = x1 s + x2 s + P((x2|x1)_H . H d(s))
            for_tuples(tuple_space({&Ln.c0, &Ln.c0, &Bm.c1}, pb), [&](auto& t) {
                Elem x1{n, Level::L0, *t[0]}, x2{n, Level::L0, *t[1]}, s{m, Level::L1, *t[2]};
                Elem lhs = v.mul(v.ladd(x1, x2), s);
                Vec corr = v.mulee_vec(n, m, Ln.crossed(x2.c, x1.c), Bm.hval(Bm.del(s.c)));
                const Qpm& T = v.left(n + m);
                Elem rhs = v.ladd(v.ladd(v.mul(x1, s), v.mul(x2, s)), Elem{n + m, Level::L1, T.pval(corr)});
                return law.tuple(v.leq(lhs, rhs), [&] {
                    return elem_witness2(v, {{"x1", &x1}, {"x2", &x2}}, {{"s", &s}}, lhs, rhs);
                });
            });
            // (s1+s2).y = s1 y + s2 y + P((ds2|ds1)_H . H(y))
            for_tuples(tuple_space({&Ln.c1, &Ln.c1, &Bm.c0}, pb), [&](auto& t) {
                Elem s1{n, Level::L1, *t[0]}, s2{n, Level::L1, *t[1]}, y{m, Level::L0, *t[2]};
                Elem lhs = v.mul(v.ladd(s1, s2), y);
                Vec corr = v.mulee_vec(n, m, Ln.crossed(Ln.del(s2.c), Ln.del(s1.c)), Bm.hval(y.c));
                const Qpm& T = v.left(n + m);
                Elem rhs = v.ladd(v.ladd(v.mul(s1, y), v.mul(s2, y)), Elem{n + m, Level::L1, T.pval(corr)});
                return law.tuple(v.leq(lhs, rhs), [&] {
                    return elem_witness2(v, {{"s1", &s1}, {"s2", &s2}}, {{"y", &y}}, lhs, rhs);
                });
            });
            // (a1+a2).b = a1 b + a2 b
            for_tuples(tuple_space({&Ln.cee, &Ln.cee, &Bm.cee}, pb), [&](auto& t) {
                Elem a1{n, Level::Lee, *t[0]}, a2{n, Level::Lee, *t[1]}, b{m, Level::Lee, *t[2]};
                Elem lhs = v.mul(v.ladd(a1, a2), b);
                Elem rhs = v.ladd(v.mul(a1, b), v.mul(a2, b));
                return law.tuple(v.leq(lhs, rhs), [&] {
                    return elem_witness2(v, {{"a1", &a1}, {"a2", &a2}}, {{"b", &b}}, lhs, rhs);
                });
            });
        }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("A4", "(dm) boundary compatible with the multiplications");
        Bound pb = detail::split_budget(bound, pairs.size() * 3);
        for (auto [n, m] : pairs) {
            const Qpm& Ln = v.left(n);
            const Qpm& Bm = B.level(m);
            for_tuples(tuple_space({&Ln.c0, &Bm.c1}, pb), [&](auto& t) {
                Elem x{n, Level::L0, *t[0]}, s{m, Level::L1, *t[1]};
                Elem lhs = v.lbmap(v.mul(x, s));
                Elem rhs = v.mul(x, B.bmap(s));
                return law.tuple(v.leq(lhs, rhs),
                                 [&] { return elem_witness2(v, {{"x", &x}}, {{"s", &s}}, lhs, rhs); });
            });
            for_tuples(tuple_space({&Ln.c1, &Bm.c0}, pb), [&](auto& t) {
                Elem s{n, Level::L1, *t[0]}, y{m, Level::L0, *t[1]};
                Elem lhs = v.lbmap(v.mul(s, y));
                Elem rhs = v.mul(v.lbmap(s), y);
                return law.tuple(v.leq(lhs, rhs),
                                 [&] { return elem_witness2(v, {{"s", &s}}, {{"y", &y}}, lhs, rhs); });
            });
            for_tuples(tuple_space({&Ln.c1, &Bm.c1}, pb), [&](auto& t) {
                Elem s1{n, Level::L1, *t[0]}, s2{m, Level::L1, *t[1]};
                Elem lhs = v.mul(v.lbmap(s1), s2);
                Elem rhs = v.mul(s1, B.bmap(s2));
                return law.tuple(v.leq(lhs, rhs),
                                 [&] { return elem_witness2(v, {{"s1", &s1}}, {{"s2", &s2}}, lhs, rhs); });
            });
        }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("A5", "(pml) P((x|x)_H . a) = x . P(a)");
        Bound pb = detail::split_budget(bound, pairs.size());
        for (auto [n, m] : pairs) {
            const Qpm& Ln = v.left(n);
            const Qpm& Bm = B.level(m);
            for_tuples(tuple_space({&Ln.c0, &Bm.cee}, pb), [&](auto& t) {
                Elem x{n, Level::L0, *t[0]}, a{m, Level::Lee, *t[1]};
                const Qpm& T = v.left(n + m);
                Elem lhs{n + m, Level::L1, T.pval(v.mulee_vec(n, m, Ln.crossed(x.c, x.c), a.c))};
                Elem rhs = v.mul(x, B.pmap(a));
                return law.tuple(v.leq(lhs, rhs),
                                 [&] { return elem_witness2(v, {{"x", &x}}, {{"a", &a}}, lhs, rhs); });
            });
        }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("A6", "(pmr) P(a . Delta(x)) = P(a) . x");
        Bound pb = detail::split_budget(bound, pairs.size());
        for (auto [n, m] : pairs) {
            const Qpm& Ln = v.left(n);
            const Qpm& Bm = B.level(m);
            for_tuples(tuple_space({&Ln.cee, &Bm.c0}, pb), [&](auto& t) {
                Elem a{n, Level::Lee, *t[0]}, x{m, Level::L0, *t[1]};
                const Qpm& T = v.left(n + m);
                Elem lhs{n + m, Level::L1, T.pval(v.mulee_vec(n, m, a.c, Bm.delta(x.c)))};
                Elem rhs = v.mul(v.lpmap(a), x);
                return law.tuple(v.leq(lhs, rhs),
                                 [&] { return elem_witness2(v, {{"a", &a}}, {{"x", &x}}, lhs, rhs); });
            });
        }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("A7", "(hm) H(x . y) = (x|x)_H . H(y) + H(x) . Delta(y)");
        Bound pb = detail::split_budget(bound, pairs.size());
        for (auto [n, m] : pairs) {
            const Qpm& Ln = v.left(n);
            const Qpm& Bm = B.level(m);
            for_tuples(tuple_space({&Ln.c0, &Bm.c0}, pb), [&](auto& t) {
                Elem x{n, Level::L0, *t[0]}, y{m, Level::L0, *t[1]};
                Elem lhs = v.lhmap(v.mul(x, y));
                Vec r1 = v.mulee_vec(n, m, Ln.crossed(x.c, x.c), Bm.hval(y.c));
                Vec r2 = v.mulee_vec(n, m, Ln.hval(x.c), Bm.delta(y.c));
                Elem rhs = v.lelem(n + m, Level::Lee, vec_add(r1, r2));
                return law.tuple(v.leq(lhs, rhs),
                                 [&] { return elem_witness2(v, {{"x", &x}}, {{"y", &y}}, lhs, rhs); });
            });
        }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("A8", "(hdpm) H dP of an ee-product");
        Bound pb = detail::split_budget(bound, pairs.size());
        for (auto [n, m] : pairs) {
            const Qpm& Ln = v.left(n);
            const Qpm& Bm = B.level(m);
            auto hdp_l = [&](const Qpm& q, const Vec& a) { return q.hval(q.del(q.pval(a))); };
            for_tuples(tuple_space({&Ln.cee, &Bm.cee}, pb), [&](auto& t) {
                Elem a{n, Level::Lee, *t[0]}, b{m, Level::Lee, *t[1]};
                const Qpm& T = v.left(n + m);
                Elem lhs{n + m, Level::Lee, hdp_l(T, v.mulee_vec(n, m, a.c, b.c))};
                Vec r1 = v.mulee_vec(n, m, hdp_l(Ln, a.c), b.c);
                Vec r2 = v.mulee_vec(n, m, a.c, hdp_l(Bm, b.c));
                Vec r3 = v.mulee_vec(n, m, hdp_l(Ln, a.c), hdp_l(Bm, b.c));
                Elem rhs = v.lelem(n + m, Level::Lee, vec_add(vec_add(r1, r2), vec_neg(r3)));
                return law.tuple(v.leq(lhs, rhs),
                                 [&] { return elem_witness2(v, {{"a", &a}}, {{"b", &b}}, lhs, rhs); });
            });
        }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("A9", "(cem) (x1 x2 | x3 x4)_H = (x1|x3)_H . (x2|x4)_H");
        Bound pb = detail::split_budget(bound, pairs.size());
        for (auto [n, m] : pairs) {
            const Qpm& Ln = v.left(n);
            const Qpm& Bm = B.level(m);
            for_tuples(tuple_space({&Ln.c0, &Bm.c0, &Ln.c0, &Bm.c0}, pb), [&](auto& t) {
                Elem x1{n, Level::L0, *t[0]}, x2{m, Level::L0, *t[1]}, x3{n, Level::L0, *t[2]},
                    x4{m, Level::L0, *t[3]};
                Elem lhs = v.lcrossed(v.mul(x1, x2), v.mul(x3, x4));
                Elem rhs = v.lelem(n + m, Level::Lee,
                                   v.mulee_vec(n, m, Ln.crossed(x1.c, x3.c), Bm.crossed(x2.c, x4.c)));
                return law.tuple(v.leq(lhs, rhs), [&] {
                    return elem_witness2(v, {{"x1", &x1}, {"x3", &x3}}, {{"x2", &x2}, {"x4", &x4}}, lhs, rhs);
                });
            });
        }
        out.laws.push_back(law.done());
    }
    {
        LawCheck l1("L1", "(menos.1) 0 . y = 0"), l2("L2", "(menos.2) (-x) . y"), l3("L3", "(menos.3) (-x) . s");
        Bound pb = detail::split_budget(bound, pairs.size() * 2);
        for (auto [n, m] : pairs) {
            const Qpm& Ln = v.left(n);
            const Qpm& Bm = B.level(m);
            for_tuples(tuple_space({&Ln.c0, &Bm.c0}, pb), [&](auto& t) {
                Elem x{n, Level::L0, *t[0]}, y{m, Level::L0, *t[1]};
                Elem z = v.mul(v.lzero(n, Level::L0), y);
                l1.tuple(v.lis_zero(z), [&] { return elem_witness2(v, {{"x", &x}}, {{"y", &y}}, z, z); });
                Elem lhs = v.mul(v.lneg(x), y);
                const Qpm& T = v.left(n + m);
                Vec corr = v.mulee_vec(n, m, Ln.crossed(x.c, x.c), Bm.hval(y.c));
                Elem rhs = v.ladd(v.lneg(v.mul(x, y)), Elem{n + m, Level::L0, T.del(T.pval(corr))});
                return l2.tuple(v.leq(lhs, rhs),
                                [&] { return elem_witness2(v, {{"x", &x}}, {{"y", &y}}, lhs, rhs); });
            });
            for_tuples(tuple_space({&Ln.c0, &Bm.c1}, pb), [&](auto& t) {
                Elem x{n, Level::L0, *t[0]}, s{m, Level::L1, *t[1]};
                Elem lhs = v.mul(v.lneg(x), s);
                const Qpm& T = v.left(n + m);
                Vec corr = v.mulee_vec(n, m, Ln.crossed(x.c, x.c), Bm.hval(Bm.del(s.c)));
                Elem rhs = v.ladd(v.lneg(v.mul(x, s)), Elem{n + m, Level::L1, T.pval(corr)});
                return l3.tuple(v.leq(lhs, rhs),
                                [&] { return elem_witness2(v, {{"x", &x}}, {{"s", &s}}, lhs, rhs); });
            });
        }
        out.laws.push_back(l1.done());
        out.laws.push_back(l2.done());
        out.laws.push_back(l3.done());
    }
    {
        LawCheck u1("U1", "1 is a two-sided unit on levels 0 and 1");
        LawCheck u2("U2", "(1|1)_H is the ee unit");
        LawCheck u3("U3", "H(1) = 0");
        Elem one = B.unit_elem();
        Elem eeu = B.ee_unit();
        Bound pb = detail::split_budget(bound, v.DL + 1);
        for (int n = 0; n <= v.DL; ++n) {
            const Qpm& Ln = v.left(n);
            for_tuples(tuple_space({&Ln.c0}, pb), [&](auto& t) {
                Elem x{n, Level::L0, *t[0]};
                return u1.tuple(v.leq(v.mul(x, one), x),
                                [&] { return elem_witness(v, {{"x", &x}}, v.mul(x, one), x); });
            });
            for_tuples(tuple_space({&Ln.c1}, pb), [&](auto& t) {
                Elem s{n, Level::L1, *t[0]};
                return u1.tuple(v.leq(v.mul(s, one), s),
                                [&] { return elem_witness(v, {{"s", &s}}, v.mul(s, one), s); });
            });
            for_tuples(tuple_space({&Ln.cee}, pb), [&](auto& t) {
                Elem a{n, Level::Lee, *t[0]};
                return u2.tuple(v.leq(v.mul(a, eeu), a),
                                [&] { return elem_witness(v, {{"a", &a}}, v.mul(a, eeu), a); });
            });
            if (v.regular) {
                const Qpm& Bn = B.level(n);
                ModuleView self = ModuleView::of_algebra(B);
                for_tuples(tuple_space({&Bn.c0}, pb), [&](auto& t) {
                    Elem x{n, Level::L0, *t[0]};
                    return u1.tuple(B.eq(self.mul(one, x), x),
                                    [&] { return elem_witness(v, {{"x", &x}}, self.mul(one, x), x); });
                });
                for_tuples(tuple_space({&Bn.c1}, pb), [&](auto& t) {
                    Elem s{n, Level::L1, *t[0]};
                    return u1.tuple(B.eq(self.mul(one, s), s),
                                    [&] { return elem_witness(v, {{"s", &s}}, self.mul(one, s), s); });
                });
                for_tuples(tuple_space({&Bn.cee}, pb), [&](auto& t) {
                    Elem a{n, Level::Lee, *t[0]};
                    return u2.tuple(B.eq(self.mul(eeu, a), a),
                                    [&] { return elem_witness(v, {{"a", &a}}, self.mul(eeu, a), a); });
                });
            }
        }
        if (v.regular)
            u3.tuple(B.is_zero(B.hmap(one)), [&] {
                Witness w;
                w.lhs = B.show(B.hmap(one));
                w.rhs = "0";
                return w;
            });
        out.laws.push_back(u1.done());
        out.laws.push_back(u2.done());
        if (v.regular)
            out.laws.push_back(u3.done());
    }
    return out;
}

inline Suite check_qpa_axioms(const GradedQpa& b, const Bound& bound)
{
    return module_axiom_suite(ModuleView::of_algebra(b), bound);
}

}  // namespace qpa
