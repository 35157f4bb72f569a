#pragma once

#include "qpa/massey.hpp"

namespace qpa {

struct TodaBound {
    long class_window = 3;     // window for free h0 coordinates
    long long budget = 60000;  // tuple cap per law
};

// Class-level helpers. Sections are the deterministic representatives of
// homology classes; well-definedness of the induced operations is what
// h0_ring / h1_bimodule verify.
struct ClassOps {
    const ModuleView* v;
    const Homologies *hl, *ha;

    const AbGroup& h0l(int n) const { return hl->at(n).h0_group; }
    const AbGroup& h0a(int n) const { return ha->at(n).h0_group; }
    const AbGroup& h1l(int n) const { return hl->at(n).h1_group; }

    // left-structure class times algebra class
    Vec cls_mul(int p, const Vec& a, int q, const Vec& b) const
    {
        Elem abar = v->lelem(p, Level::L0, hl->at(p).h0.rep_of(a));
        Elem bbar = v->alg->elem(q, Level::L0, ha->at(q).h0.rep_of(b));
        return hl->at(p + q).h0.class_of(v->mul(abar, bbar).c);
    }
    // algebra class product
    Vec acls_mul(int p, const Vec& a, int q, const Vec& b) const
    {
        Elem abar = v->alg->elem(p, Level::L0, ha->at(p).h0.rep_of(a));
        Elem bbar = v->alg->elem(q, Level::L0, ha->at(q).h0.rep_of(b));
        return ha->at(p + q).h0.class_of(qpa_mul(*v->alg, abar, bbar).c);
    }
    // h1-left class acted by an algebra class from the right
    Vec act_right(int d, const Vec& kappa, int q, const Vec& b) const
    {
        Elem krep{d, Level::L1, hl->at(d).h1.rep_of(kappa)};
        Elem bbar = v->alg->elem(q, Level::L0, ha->at(q).h0.rep_of(b));
        return hl->at(d + q).h1.class_of(v->mul(krep, bbar).c);
    }
    // left class acting on an algebra h1 class
    Vec act_left(int p, const Vec& a, int d, const Vec& kappa) const
    {
        Elem abar = v->lelem(p, Level::L0, hl->at(p).h0.rep_of(a));
        Elem krep{d, Level::L1, ha->at(d).h1.rep_of(kappa)};
        return hl->at(p + d).h1.class_of(v->mul(abar, krep).c);
    }
    // k-invariant of the left structure: a . eta = P(a|a)_H
    Vec eta(int p, const Vec& a) const
    {
        const Qpm& L = v->left(p);
        Vec rep = hl->at(p).h0.rep_of(a);
        return hl->at(p).h1.class_of(L.pval(L.crossed(rep, rep)));
    }

    std::optional<MasseyResult> try_bracket(int p, const Vec& a, int q, const Vec& b, int r, const Vec& c) const
    {
        if (!vec_is_zero(cls_mul(p, a, q, b)) || !vec_is_zero(acls_mul(q, b, r, c)))
            return std::nullopt;
        return massey_product(*v, *hl, *ha, p, a, q, b, r, c);
    }

    bool coset_contains(const MasseyResult& r, const Vec& cls) const
    {
        return in_coset(h1l(r.degree), r, cls);
    }

    // A subset B: one common element plus indeterminacy containment
    bool coset_included(const MasseyResult& sub, const MasseyResult& sup) const
    {
        if (!coset_contains(sup, sub.rep))
            return false;
        const AbGroup& g = h1l(sub.degree);
        Mat supg = gens_matrix(g.rank(), sup.indet_gens);
        for (auto& gen : sub.indet_gens)
            if (!subgroup_member(g, supg, gen))
                return false;
        return true;
    }

    MasseyResult coset_sum(const MasseyResult& a, const MasseyResult& b) const
    {
        MasseyResult r;
        r.degree = a.degree;
        const AbGroup& g = h1l(a.degree);
        r.rep = g.add(a.rep, b.rep);
        r.indet_gens = a.indet_gens;
        r.indet_gens.insert(r.indet_gens.end(), b.indet_gens.begin(), b.indet_gens.end());
        if (g.finite()) {
            auto span = subgroup_span(g, r.indet_gens);
            std::vector<Vec> cs;
            for (auto& s : span)
                cs.push_back(g.add(r.rep, s));
            std::sort(cs.begin(), cs.end());
            r.coset = std::move(cs);
        }
        return r;
    }

    MasseyResult coset_scale(const Int& k, const MasseyResult& a) const
    {
        MasseyResult r = a;
        const AbGroup& g = h1l(a.degree);
        r.rep = g.scale(k, a.rep);
        if (r.coset) {
            std::vector<Vec> cs;
            for (auto& x : *r.coset)
                cs.push_back(g.scale(k, x));
            std::sort(cs.begin(), cs.end());
            cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
            r.coset = std::move(cs);
        }
        return r;
    }
};

namespace detail {

inline Witness cls_witness(std::initializer_list<std::pair<std::string, std::string>> in, const std::string& l,
                           const std::string& r)
{
    Witness w;
    w.inputs.assign(in.begin(), in.end());
    w.lhs = l;
    w.rhs = r;
    return w;
}

inline std::string cls_str(const AbGroup& g, const Vec& v)
{
    return g.show(v);
}

}  // namespace detail

// The Toda relations (T1)-(T5) for an algebra or module view, plus (T6) for
// algebras. Brackets are enumerated over h0 classes within the window.
inline Suite check_toda_laws(const ModuleView& v, const Homologies& hl, const Homologies& ha,
                             const TodaBound& tb)
{
    ClassOps ops{&v, &hl, &ha};
    Suite out;
    const int DL = v.DL, DA = v.alg->D;

    auto classes_l = [&](int d) { return ops.h0l(d).elements(tb.class_window); };
    auto classes_a = [&](int d) { return ops.h0a(d).elements(tb.class_window); };

    {
        LawCheck law("T1", "(T1) 0 in <a,b,c> when an entry is zero");
        long long budget = tb.budget;
        for (int p = 0; p <= DL && budget > 0; ++p)
            for (int q = 0; q <= DA && p + q <= DL && budget > 0; ++q)
                for (int r = 0; r <= DA && p + q + r <= DL && budget > 0; ++r)
                    for (auto& a : classes_l(p))
                        for (auto& b : classes_a(q))
                            for (auto& c : classes_a(r)) {
                                if (!vec_is_zero(a) && !vec_is_zero(b) && !vec_is_zero(c))
                                    continue;
                                if (--budget < 0)
                                    break;
                                auto br = ops.try_bracket(p, a, q, b, r, c);
                                if (!br) {
                                    law.skip();
                                    continue;
                                }
                                law.tuple(ops.coset_contains(*br, ops.h1l(br->degree).zero()), [&] {
                                    return detail::cls_witness({{"a", ops.h0l(p).show(a)},
                                                                {"b", ops.h0a(q).show(b)},
                                                                {"c", ops.h0a(r).show(c)}},
                                                               ops.h1l(br->degree).show(br->rep), "coset containing 0");
                                });
                            }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("T2", "(T2) linearity: equality in the middle, inclusion outside");
        long long budget = tb.budget;
        for (int p = 0; p <= DL && budget > 0; ++p)
            for (int q = 0; q <= DA && p + q <= DL && budget > 0; ++q)
                for (int r = 0; r <= DA && p + q + r <= DL && budget > 0; ++r)
                    for (auto& a : classes_l(p))
                        for (auto& b : classes_a(q))
                            for (auto& b2 : classes_a(q))
                                for (auto& c : classes_a(r)) {
                                    if (--budget < 0)
                                        break;
                                    auto brA = ops.try_bracket(p, a, q, b, r, c);
                                    auto brB = ops.try_bracket(p, a, q, b2, r, c);
                                    if (!brA || !brB) {
                                        law.skip();
                                        continue;
                                    }
                                    Vec bsum = ops.h0a(q).add(b, b2);
                                    auto brS = ops.try_bracket(p, a, q, bsum, r, c);
                                    if (!brS) {
                                        law.skip();
                                        continue;
                                    }
                                    MasseyResult rhs = ops.coset_sum(*brA, *brB);
                                    bool ok = ops.coset_included(*brS, rhs) && ops.coset_included(rhs, *brS);
                                    if (ok && brS->coset && rhs.coset)
                                        ok = *brS->coset == *rhs.coset;
                                    law.tuple(ok, [&] {
                                        return detail::cls_witness({{"a", ops.h0l(p).show(a)},
                                                                    {"b", ops.h0a(q).show(b)},
                                                                    {"b'", ops.h0a(q).show(b2)},
                                                                    {"c", ops.h0a(r).show(c)}},
                                                                   ops.h1l(brS->degree).show(brS->rep),
                                                                   ops.h1l(rhs.degree).show(rhs.rep));
                                    });
                                }
        // outer variables: inclusion
        budget = tb.budget;
        for (int p = 0; p <= DL && budget > 0; ++p)
            for (int q = 0; q <= DA && p + q <= DL && budget > 0; ++q)
                for (int r = 0; r <= DA && p + q + r <= DL && budget > 0; ++r)
                    for (auto& a : classes_l(p))
                        for (auto& a2 : classes_l(p))
                            for (auto& b : classes_a(q))
                                for (auto& c : classes_a(r)) {
                                    if (--budget < 0)
                                        break;
                                    auto brA = ops.try_bracket(p, a, q, b, r, c);
                                    auto brB = ops.try_bracket(p, a2, q, b, r, c);
                                    if (!brA || !brB) {
                                        law.skip();
                                        continue;
                                    }
                                    Vec asum = ops.h0l(p).add(a, a2);
                                    auto brS = ops.try_bracket(p, asum, q, b, r, c);
                                    if (!brS) {
                                        law.skip();
                                        continue;
                                    }
                                    law.tuple(ops.coset_included(*brS, ops.coset_sum(*brA, *brB)), [&] {
                                        return detail::cls_witness({{"a", ops.h0l(p).show(a)},
                                                                    {"a'", ops.h0l(p).show(a2)},
                                                                    {"b", ops.h0a(q).show(b)},
                                                                    {"c", ops.h0a(r).show(c)}},
                                                                   "sum bracket", "not included");
                                    });
                                }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("T3", "(T3) a<b,c,d> in <ab,c,d>; <a,b,c>d in <a,b,cd>");
        long long budget = tb.budget;
        for (int p = 0; p <= DL && budget > 0; ++p)
            for (int q = 0; q <= DA && p + q <= DL && budget > 0; ++q)
                for (int r = 0; r <= DA && p + q + r <= DL && budget > 0; ++r)
                    for (int s = 0; s <= DA && p + q + r + s <= DL && budget > 0; ++s)
                        for (auto& a : classes_l(p))
                            for (auto& b : classes_a(q))
                                for (auto& c : classes_a(r))
                                    for (auto& d : classes_a(s)) {
                                        if (--budget < 0)
                                            break;
                                        // a<b,c,d> in <ab,c,d>: brackets in the algebra then acted by a
                                        if (!vec_is_zero(ops.acls_mul(q, b, r, c)) ||
                                            !vec_is_zero(ops.acls_mul(r, c, s, d))) {
                                            law.skip();
                                        } else {
                                            ModuleView selfv = ModuleView::of_algebra(*v.alg);
                                            MasseyResult bcd = massey_product(selfv, *ha, *ha, q, b, r, c, s, d);
                                            Vec ab = ops.cls_mul(p, a, q, b);
                                            auto big = ops.try_bracket(p + q, ab, r, c, s, d);
                                            if (!big) {
                                                law.skip();
                                            } else {
                                                // act a on the whole coset
                                                MasseyResult acted;
                                                acted.degree = big->degree;
                                                acted.rep = ops.act_left(p, a, bcd.degree, bcd.rep);
                                                for (auto& g : bcd.indet_gens)
                                                    acted.indet_gens.push_back(ops.act_left(p, a, bcd.degree, g));
                                                law.tuple(ops.coset_included(acted, *big), [&] {
                                                    return detail::cls_witness({{"a", ops.h0l(p).show(a)},
                                                                                {"b", ops.h0a(q).show(b)},
                                                                                {"c", ops.h0a(r).show(c)},
                                                                                {"d", ops.h0a(s).show(d)}},
                                                                               "a<b,c,d>", "<ab,c,d>");
                                                });
                                            }
                                        }
                                        // <a,b,c>d in <a,b,cd>
                                        auto abc = ops.try_bracket(p, a, q, b, r, c);
                                        Vec cd = ops.acls_mul(r, c, s, d);
                                        auto abcd = ops.try_bracket(p, a, q, b, r + s, cd);
                                        if (!abc || !abcd) {
                                            law.skip();
                                            continue;
                                        }
                                        MasseyResult acted;
                                        acted.degree = abcd->degree;
                                        acted.rep = ops.act_right(abc->degree, abc->rep, s, d);
                                        for (auto& g : abc->indet_gens)
                                            acted.indet_gens.push_back(ops.act_right(abc->degree, g, s, d));
                                        law.tuple(ops.coset_included(acted, *abcd), [&] {
                                            return detail::cls_witness({{"a", ops.h0l(p).show(a)},
                                                                        {"b", ops.h0a(q).show(b)},
                                                                        {"c", ops.h0a(r).show(c)},
                                                                        {"d", ops.h0a(s).show(d)}},
                                                                       "<a,b,c>d", "<a,b,cd>");
                                        });
                                    }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("T4", "(T4) <ab,c,d> in <a,bc,d> contains <a,b,cd>");
        long long budget = tb.budget;
        for (int p = 0; p <= DL && budget > 0; ++p)
            for (int q = 0; q <= DA && p + q <= DL && budget > 0; ++q)
                for (int r = 0; r <= DA && p + q + r <= DL && budget > 0; ++r)
                    for (int s = 0; s <= DA && p + q + r + s <= DL && budget > 0; ++s)
                        for (auto& a : classes_l(p))
                            for (auto& b : classes_a(q))
                                for (auto& c : classes_a(r))
                                    for (auto& d : classes_a(s)) {
                                        if (--budget < 0)
                                            break;
                                        Vec ab = ops.cls_mul(p, a, q, b);
                                        Vec bc = ops.acls_mul(q, b, r, c);
                                        Vec cd = ops.acls_mul(r, c, s, d);
                                        auto left = ops.try_bracket(p + q, ab, r, c, s, d);
                                        auto mid = ops.try_bracket(p, a, q + r, bc, s, d);
                                        auto right = ops.try_bracket(p, a, q, b, r + s, cd);
                                        bool checked = false, ok = true;
                                        if (left && mid) {
                                            ok = ok && ops.coset_included(*left, *mid);
                                            checked = true;
                                        }
                                        if (right && mid) {
                                            ok = ok && ops.coset_included(*right, *mid);
                                            checked = true;
                                        }
                                        if (!checked) {
                                            law.skip();
                                            continue;
                                        }
                                        law.tuple(ok, [&] {
                                            return detail::cls_witness({{"a", ops.h0l(p).show(a)},
                                                                        {"b", ops.h0a(q).show(b)},
                                                                        {"c", ops.h0a(r).show(c)},
                                                                        {"d", ops.h0a(s).show(d)}},
                                                                       "<ab,c,d> / <a,b,cd>", "<a,bc,d>");
                                        });
                                    }
        out.laws.push_back(law.done());
    }
    {
        LawCheck law("T5", "(T5) 0 in <a,b,c>d + a<b,c,d>");
        long long budget = tb.budget;
        for (int p = 0; p <= DL && budget > 0; ++p)
            for (int q = 0; q <= DA && p + q <= DL && budget > 0; ++q)
                for (int r = 0; r <= DA && p + q + r <= DL && budget > 0; ++r)
                    for (int s = 0; s <= DA && p + q + r + s <= DL && budget > 0; ++s)
                        for (auto& a : classes_l(p))
                            for (auto& b : classes_a(q))
                                for (auto& c : classes_a(r))
                                    for (auto& d : classes_a(s)) {
                                        if (--budget < 0)
                                            break;
                                        auto abc = ops.try_bracket(p, a, q, b, r, c);
                                        if (!abc || !vec_is_zero(ops.acls_mul(r, c, s, d))) {
                                            law.skip();
                                            continue;
                                        }
                                        ModuleView selfv = ModuleView::of_algebra(*v.alg);
                                        MasseyResult bcd = massey_product(selfv, *ha, *ha, q, b, r, c, s, d);
                                        // coset-level containment of zero
                                        MasseyResult total;
                                        total.degree = p + q + r + s;
                                        const AbGroup& g = ops.h1l(total.degree);
                                        total.rep = g.add(ops.act_right(abc->degree, abc->rep, s, d),
                                                          ops.act_left(p, a, bcd.degree, bcd.rep));
                                        for (auto& gg : abc->indet_gens)
                                            total.indet_gens.push_back(ops.act_right(abc->degree, gg, s, d));
                                        for (auto& gg : bcd.indet_gens)
                                            total.indet_gens.push_back(ops.act_left(p, a, bcd.degree, gg));
                                        bool ok = ops.coset_contains(total, g.zero());

                                        // the proof's identity from shared lifts, exact in C1
                                        const GradedQpa& B = *v.alg;
                                        Elem abar = v.lelem(p, Level::L0, hl.at(p).h0.rep_of(a));
                                        Elem bbar = B.elem(q, Level::L0, ha.at(q).h0.rep_of(b));
                                        Elem cbar = B.elem(r, Level::L0, ha.at(r).h0.rep_of(c));
                                        Elem dbar = B.elem(s, Level::L0, ha.at(s).h0.rep_of(d));
                                        auto abl = boundary_preimage(v.left(p + q), v.mul(abar, bbar).c);
                                        auto bcl = boundary_preimage(B.level(q + r), qpa_mul(B, bbar, cbar).c);
                                        auto cdl = boundary_preimage(B.level(r + s), qpa_mul(B, cbar, dbar).c);
                                        if (abl && bcl && cdl) {
                                            Elem ab_l{p + q, Level::L1, *abl};
                                            Elem bc_l{q + r, Level::L1, *bcl};
                                            Elem cd_l{r + s, Level::L1, *cdl};
                                            Elem u = v.ladd(v.lneg(v.mul(ab_l, cbar)), v.mul(abar, bc_l));
                                            Elem w = B.add(B.neg(qpa_mul(B, bc_l, dbar)), qpa_mul(B, bbar, cd_l));
                                            Elem totale = v.ladd(v.mul(u, dbar), v.mul(abar, w));
                                            ok = ok && v.lis_zero(totale);
                                        }
                                        law.tuple(ok, [&] {
                                            return detail::cls_witness({{"a", ops.h0l(p).show(a)},
                                                                        {"b", ops.h0a(q).show(b)},
                                                                        {"c", ops.h0a(r).show(c)},
                                                                        {"d", ops.h0a(s).show(d)}},
                                                                       "<a,b,c>d + a<b,c,d>", "0");
                                        });
                                    }
        out.laws.push_back(law.done());
    }
    if (v.regular) {
        LawCheck law("T6", "(T6) a.eta in <2, a, 2>");
        // the class of 2 = twice the class of the unit
        Vec unitcls = ha.at(0).h0.class_of(v.alg->unit);
        Vec two = ops.h0a(0).scale(2, unitcls);
        bool nontrivial = false;
        for (int p = 0; p <= DL; ++p)
            for (auto& a : classes_l(p)) {
                if (!vec_is_zero(ops.h0l(p).scale(2, a)))
                    continue;  // bracket undefined unless 2a = 0
                auto br = ops.try_bracket(0, two, p, a, 0, two);
                if (!br) {
                    law.skip();
                    continue;
                }
                if (!vec_is_zero(a))
                    nontrivial = true;
                law.tuple(ops.coset_contains(*br, ops.eta(p, a)), [&] {
                    return detail::cls_witness({{"a", ops.h0l(p).show(a)}},
                                               ops.h1l(br->degree).show(ops.eta(p, a)), "<2,a,2>");
                });
            }
        LawReport r = law.done();
        if (r.status == LawStatus::Pass && !nontrivial)
            r.status = LawStatus::Vacuous;
        out.laws.push_back(r);
    }
    return out;
}

inline Suite check_toda_laws(const GradedQpa& b, const Homologies& h, const TodaBound& tb)
{
    return check_toda_laws(ModuleView::of_algebra(b), h, h, tb);
}

}  // namespace qpa
