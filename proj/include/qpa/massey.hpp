#pragma once

#include <algorithm>
#include <optional>
#include <set>

#include "qpa/algebra_laws.hpp"

namespace qpa {

struct BracketUndefined : Error {
    using Error::Error;
};

// Per-degree homology of a level list, built once.
struct Homologies {
    std::vector<QpmHomology> h;

    static Homologies of(const std::vector<Qpm>& lv)
    {
        Homologies r;
        r.h.reserve(lv.size());
        for (auto& q : lv)
            r.h.emplace_back(q);
        return r;
    }

    const QpmHomology& at(int n) const
    {
        static const QpmHomology zero_h(zero_qpm());
        if (n < 0 || n >= static_cast<int>(h.size()))
            return zero_h;
        return h[static_cast<size_t>(n)];
    }
};

// Solve del(s) = x in the level-d left structure; x must be a boundary.
inline std::optional<Vec> boundary_preimage(const Qpm& q, const Vec& x)
{
    Mat m = hcat(q.bnd, q.c0.relations());
    auto sol = solve(m, q.c0.normal(x));
    if (!sol)
        return std::nullopt;
    Vec s(static_cast<size_t>(q.c1.rank()));
    for (int i = 0; i < q.c1.rank(); ++i)
        s[static_cast<size_t>(i)] = (*sol)[static_cast<size_t>(i)];
    return q.c1.normal(s);
}

// A bracket value: one representative class in h1, generators of the
// indeterminacy subgroup, the full coset when h1 is finite, and the lift
// choices that produced the representative.
struct MasseyResult {
    int degree = 0;
    Vec rep;
    std::vector<Vec> indet_gens;
    std::optional<std::vector<Vec>> coset;
    std::vector<std::pair<std::string, std::string>> lifts;
};

// All elements of the subgroup generated by gens inside a finite group.
inline std::vector<Vec> subgroup_span(const AbGroup& g, const std::vector<Vec>& gens)
{
    std::set<Vec> seen;
    seen.insert(g.zero());
    std::vector<Vec> queue{g.zero()};
    while (!queue.empty()) {
        Vec cur = queue.back();
        queue.pop_back();
        for (auto& gen : gens) {
            Vec nxt = g.add(cur, gen);
            if (seen.insert(nxt).second)
                queue.push_back(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

inline Mat gens_matrix(int rank, const std::vector<Vec>& gens)
{
    Mat m(rank, static_cast<int>(gens.size()));
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < rank; ++i)
            m.at(i, j) = gens[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return m;
}

// cls in rep + <gens> ?
inline bool in_coset(const AbGroup& h1grp, const MasseyResult& r, const Vec& cls)
{
    return subgroup_member(h1grp, gens_matrix(h1grp.rank(), r.indet_gens), h1grp.add(cls, h1grp.neg(r.rep)));
}

// Massey product <a, b, c> of h0 classes: a from the left structure, b and c
// from the algebra. Defined when ab = 0 and bc = 0; the value is
// -lift(ab).c + a.lift(bc) in h1 of degree p+q+r.
inline MasseyResult massey_product(const ModuleView& v, const Homologies& hl, const Homologies& ha, int p,
                                   const Vec& a, int q, const Vec& b, int r, const Vec& c)
{
    const GradedQpa& B = *v.alg;
    Elem abar = v.lelem(p, Level::L0, hl.at(p).h0.rep_of(a));
    Elem bbar = B.elem(q, Level::L0, ha.at(q).h0.rep_of(b));
    Elem cbar = B.elem(r, Level::L0, ha.at(r).h0.rep_of(c));

    Elem ab = v.mul(abar, bbar);
    if (p + q <= v.DL && !hl.at(p + q).h0.is_zero(ab.c))
        throw BracketUndefined("a*b != 0 in h0");
    Elem bc = qpa_mul(B, bbar, cbar);
    if (q + r <= B.D && !ha.at(q + r).h0.is_zero(bc.c))
        throw BracketUndefined("b*c != 0 in h0");

    auto ablift_c = boundary_preimage(v.left(p + q), ab.c);
    auto bclift_c = boundary_preimage(B.level(q + r), bc.c);
    if (!ablift_c || !bclift_c)
        throw Error("boundary preimage not found; instance inconsistent");
    Elem ablift{p + q, Level::L1, *ablift_c};
    Elem bclift{q + r, Level::L1, *bclift_c};

    Elem valelem = v.ladd(v.lneg(v.mul(ablift, cbar)), v.mul(abar, bclift));
    if (!v.lis_zero(v.lbmap(valelem)))
        throw Error("bracket value escaped the kernel; instance inconsistent");

    const QpmHomology& H = hl.at(p + q + r);
    MasseyResult res;
    res.degree = p + q + r;
    res.rep = H.h1.class_of(valelem.c);
    res.lifts = {{"abar", v.lshow(abar)},   {"bbar", B.show(bbar)},     {"cbar", B.show(cbar)},
                 {"ab_lift", v.lshow(ablift)}, {"bc_lift", B.show(bclift)}};

    // indeterminacy: (h1 left)_{p+q} . c + a . (h1 B)_{q+r}
    const QpmHomology& Hpq = hl.at(p + q);
    for (int j = 0; j < Hpq.h1_group.rank(); ++j) {
        Vec e(static_cast<size_t>(Hpq.h1_group.rank()), Int(0));
        e[static_cast<size_t>(j)] = 1;
        Elem krep{p + q, Level::L1, Hpq.h1.rep_of(e)};
        Vec cls = H.h1.class_of(v.mul(krep, cbar).c);
        if (!vec_is_zero(cls))
            res.indet_gens.push_back(cls);
    }
    const QpmHomology& Hqr = ha.at(q + r);
    for (int j = 0; j < Hqr.h1_group.rank(); ++j) {
        Vec e(static_cast<size_t>(Hqr.h1_group.rank()), Int(0));
        e[static_cast<size_t>(j)] = 1;
        Elem krep{q + r, Level::L1, Hqr.h1.rep_of(e)};
        Vec cls = H.h1.class_of(v.mul(abar, krep).c);
        if (!vec_is_zero(cls))
            res.indet_gens.push_back(cls);
    }
    if (H.h1_group.finite()) {
        auto span = subgroup_span(H.h1_group, res.indet_gens);
        std::vector<Vec> coset;
        coset.reserve(span.size());
        for (auto& s : span)
            coset.push_back(H.h1_group.add(res.rep, s));
        std::sort(coset.begin(), coset.end());
        res.coset = std::move(coset);
    }
    return res;
}

inline MasseyResult massey_product(const GradedQpa& b, const Homologies& h, int p, const Vec& a, int q,
                                   const Vec& bb, int r, const Vec& c)
{
    return massey_product(ModuleView::of_algebra(b), h, h, p, a, q, bb, r, c);
}

// All representatives in the left structure of an h0 class (finite sets
// only: the image of the boundary must be enumerable).
inline std::vector<Vec> all_reps(const Qpm& q, const QpmHomology& h, const Vec& cls)
{
    Vec rep = h.h0.rep_of(cls);
    bool bnd_zero = true;
    for (auto& e : q.bnd.a)
        if (e != 0)
            bnd_zero = false;
    std::set<Vec> out;
    if (bnd_zero || q.c1.rank() == 0) {
        out.insert(q.c0.normal(rep));
    } else if (q.c1.finite()) {
        for (auto& s : q.c1.elements(0))
            out.insert(q.c0.add(rep, q.del(s)));
    } else {
        throw Error("oracle needs finite lift sets: infinite boundary image");
    }
    return {out.begin(), out.end()};
}

// All boundary preimages of x (finite sets only).
inline std::vector<Vec> all_preimages(const Qpm& q, const QpmHomology& h, const Vec& x)
{
    auto p0 = boundary_preimage(q, x);
    if (!p0)
        throw Error("boundary preimage not found");
    std::set<Vec> out;
    if (h.h1_group.finite()) {
        for (auto& z : h.h1_group.elements(0))
            out.insert(q.c1.add(*p0, q.c1.normal(h.h1.rep_of(z))));
    } else {
        throw Error("oracle needs finite lift sets: infinite kernel");
    }
    return {out.begin(), out.end()};
}

// Independent oracle: enumerate every choice of representatives and lifts
// and collect the values. On finite instances this is the whole bracket.
inline std::vector<Vec> massey_oracle(const ModuleView& v, const Homologies& hl, const Homologies& ha, int p,
                                      const Vec& a, int q, const Vec& b, int r, const Vec& c)
{
    const GradedQpa& B = *v.alg;
    const QpmHomology& H = hl.at(p + q + r);
    std::set<Vec> vals;
    for (auto& ac : all_reps(v.left(p), hl.at(p), a))
        for (auto& bc : all_reps(B.level(q), ha.at(q), b))
            for (auto& cc : all_reps(B.level(r), ha.at(r), c)) {
                Elem abar{p, Level::L0, ac}, bbar{q, Level::L0, bc}, cbar{r, Level::L0, cc};
                Elem ab = v.mul(abar, bbar);
                Elem bcprod = qpa_mul(B, bbar, cbar);
                for (auto& abl : all_preimages(v.left(p + q), hl.at(p + q), ab.c))
                    for (auto& bcl : all_preimages(B.level(q + r), ha.at(q + r), bcprod.c)) {
                        Elem ablift{p + q, Level::L1, abl}, bclift{q + r, Level::L1, bcl};
                        Elem val = v.ladd(v.lneg(v.mul(ablift, cbar)), v.mul(abar, bclift));
                        vals.insert(H.h1.class_of(val.c));
                    }
            }
    return {vals.begin(), vals.end()};
}

inline std::vector<Vec> massey_oracle(const GradedQpa& b, const Homologies& h, int p, const Vec& a, int q,
                                      const Vec& bb, int r, const Vec& c)
{
    return massey_oracle(ModuleView::of_algebra(b), h, h, p, a, q, bb, r, c);
}

}  // namespace qpa
