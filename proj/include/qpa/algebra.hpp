#pragma once

#include <array>
#include <string>
#include <vector>

#include "qpa/qpm.hpp"

namespace qpa {

enum class Level : uint8_t { L0, L1, Lee };

inline const char* level_name(Level l)
{
    switch (l) {
        case Level::L0: return "0";
        case Level::L1: return "1";
        default: return "ee";
    }
}

// Homogeneous element of a graded structure: degree, level, coordinates in
// the carrier of that spot. Degrees above the truncation are the zero module.
struct Elem {
    int deg = 0;
    Level lv = Level::L0;
    Vec c;
};

// Values of one multiplication on generator pairs. Absent table = zero map.
struct GenTable {
    std::vector<std::vector<Vec>> t;  // t[i][j] = target coords
};

// kind 0: 0.0->0, 1: 0.1->1, 2: 1.0->1, 3: ee.ee->ee
struct Tables {
    std::array<std::vector<std::vector<GenTable>>, 4> k;

    void resize(int dl, int da)
    {
        for (auto& g : k)
            g.assign(static_cast<size_t>(dl) + 1,
                     std::vector<GenTable>(static_cast<size_t>(da) + 1));
    }

    const GenTable* get(int kind, int n, int m) const
    {
        auto& g = k[static_cast<size_t>(kind)];
        if (n < 0 || m < 0 || n >= static_cast<int>(g.size()) ||
            m >= static_cast<int>(g[static_cast<size_t>(n)].size()))
            return nullptr;
        const GenTable& tb = g[static_cast<size_t>(n)][static_cast<size_t>(m)];
        return tb.t.empty() ? nullptr : &tb;
    }

    GenTable& slot(int kind, int n, int m) { return k[static_cast<size_t>(kind)][static_cast<size_t>(n)][static_cast<size_t>(m)]; }
};

inline const Qpm& zero_qpm()
{
    static const Qpm z = Qpm::zero();
    return z;
}

// N-graded quadratic pair algebra, truncated at degree D (products landing
// above D are zero).
struct GradedQpa {
    std::string name;
    int D = 0;
    std::vector<Qpm> lv;  // size D + 1
    Tables tab;
    Vec unit;  // coords in lv[0].c0

    const Qpm& level(int n) const { return (n >= 0 && n <= D) ? lv[static_cast<size_t>(n)] : zero_qpm(); }

    const AbGroup& carrier(int deg, Level l) const
    {
        const Qpm& q = level(deg);
        return l == Level::L0 ? q.c0 : l == Level::L1 ? q.c1 : q.cee;
    }

    Elem zero(int deg, Level l) const { return Elem{deg, l, carrier(deg, l).zero()}; }
    Elem elem(int deg, Level l, Vec c) const { return Elem{deg, l, carrier(deg, l).normal(std::move(c))}; }
    Elem add(const Elem& a, const Elem& b) const { return elem(a.deg, a.lv, vec_add(a.c, b.c)); }
    Elem neg(const Elem& a) const { return elem(a.deg, a.lv, vec_neg(a.c)); }
    Elem scale(const Int& k, const Elem& a) const { return elem(a.deg, a.lv, vec_scale(k, a.c)); }
    bool eq(const Elem& a, const Elem& b) const
    {
        return a.deg == b.deg && a.lv == b.lv && carrier(a.deg, a.lv).eq(a.c, b.c);
    }
    bool is_zero(const Elem& a) const { return carrier(a.deg, a.lv).is_zero(a.c); }

    Elem unit_elem() const { return elem(0, Level::L0, unit); }
    Elem ee_unit() const { return elem(0, Level::Lee, lv[0].crossed(unit, unit)); }

    Elem bmap(const Elem& s) const { return Elem{s.deg, Level::L0, level(s.deg).del(s.c)}; }
    Elem pmap(const Elem& a) const { return Elem{a.deg, Level::L1, level(a.deg).pval(a.c)}; }
    Elem hmap(const Elem& x) const { return Elem{x.deg, Level::Lee, level(x.deg).hval(x.c)}; }
    Elem crossed(const Elem& x, const Elem& y) const
    {
        return Elem{x.deg, Level::Lee, level(x.deg).crossed(x.c, y.c)};
    }
    Elem tmap(const Elem& a) const { return Elem{a.deg, Level::Lee, level(a.deg).tmap(a.c)}; }
    Elem delta(const Elem& x) const { return Elem{x.deg, Level::Lee, level(x.deg).delta(x.c)}; }

    std::string show(const Elem& a) const { return carrier(a.deg, a.lv).show(a.c); }
};

// A right module over a graded quadratic pair algebra: its own graded
// quadratic pair module plus the four action tables (module on the left).
struct QpaModule {
    std::string name;
    const GradedQpa* base = nullptr;
    int D = 0;
    std::vector<Qpm> lv;
    Tables tab;
};

// Uniform access to "left structure x algebra -> left structure" products:
// the algebra over itself or an honest right module.
struct ModuleView {
    const GradedQpa* alg = nullptr;
    const std::vector<Qpm>* left_lv = nullptr;
    const Tables* tab = nullptr;
    int DL = 0;
    bool regular = false;
    std::string name;

    static ModuleView of_algebra(const GradedQpa& b)
    {
        return ModuleView{&b, &b.lv, &b.tab, b.D, true, b.name};
    }
    static ModuleView of_module(const QpaModule& m)
    {
        return ModuleView{m.base, &m.lv, &m.tab, m.D, false, m.name};
    }

    const Qpm& left(int n) const
    {
        return (n >= 0 && n <= DL) ? (*left_lv)[static_cast<size_t>(n)] : zero_qpm();
    }
    const AbGroup& lcarrier(int deg, Level l) const
    {
        const Qpm& q = left(deg);
        return l == Level::L0 ? q.c0 : l == Level::L1 ? q.c1 : q.cee;
    }
    Elem lzero(int deg, Level l) const { return Elem{deg, l, lcarrier(deg, l).zero()}; }
    Elem lelem(int deg, Level l, Vec c) const { return Elem{deg, l, lcarrier(deg, l).normal(std::move(c))}; }
    Elem ladd(const Elem& a, const Elem& b) const { return lelem(a.deg, a.lv, vec_add(a.c, b.c)); }
    Elem lneg(const Elem& a) const { return lelem(a.deg, a.lv, vec_neg(a.c)); }
    Elem lscale(const Int& k, const Elem& a) const { return lelem(a.deg, a.lv, vec_scale(k, a.c)); }
    bool leq(const Elem& a, const Elem& b) const
    {
        return a.deg == b.deg && a.lv == b.lv && lcarrier(a.deg, a.lv).eq(a.c, b.c);
    }
    bool lis_zero(const Elem& a) const { return lcarrier(a.deg, a.lv).is_zero(a.c); }
    Elem lbmap(const Elem& s) const { return Elem{s.deg, Level::L0, left(s.deg).del(s.c)}; }
    Elem lpmap(const Elem& a) const { return Elem{a.deg, Level::L1, left(a.deg).pval(a.c)}; }
    Elem lhmap(const Elem& x) const { return Elem{x.deg, Level::Lee, left(x.deg).hval(x.c)}; }
    Elem lcrossed(const Elem& x, const Elem& y) const
    {
        return Elem{x.deg, Level::Lee, left(x.deg).crossed(x.c, y.c)};
    }
    std::string lshow(const Elem& a) const { return lcarrier(a.deg, a.lv).show(a.c); }

    // ee product: left_ee x alg_ee -> left_ee, bilinear
    Vec mulee_vec(int n, int m, const Vec& a, const Vec& b) const
    {
        const AbGroup& tgt = left(n + m).cee;
        if (n + m > DL)
            return tgt.zero();
        Vec r = tgt.zero();
        const GenTable* tb = tab->get(3, n, m);
        if (!tb)
            return r;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0)
                    r = vec_add(r, vec_scale(a[i] * b[j], tb->t[i][j]));
        }
        return tgt.normal(r);
    }

    // ordered-sum correction of the left distributivity law for level-0 x
    Vec corr0(int n, const Vec& x) const
    {
        const Qpm& L = left(n);
        Vec r = L.cee.zero();
        for (int i = 0; i < L.c0.rank(); ++i) {
            const Int& xi = x[static_cast<size_t>(i)];
            if (xi == 0)
                continue;
            r = vec_add(r, vec_scale(binom2(xi), L.pair_at(i, i)));
            for (int j = i + 1; j < L.c0.rank(); ++j)
                if (x[static_cast<size_t>(j)] != 0)
                    r = vec_add(r, vec_scale(xi * x[static_cast<size_t>(j)], L.pair_at(j, i)));
        }
        return L.cee.normal(r);
    }

    // same with boundaries of level-1 s
    Vec corr1(int n, const Vec& s) const
    {
        const Qpm& L = left(n);
        Vec r = L.cee.zero();
        std::vector<Vec> d(static_cast<size_t>(L.c1.rank()));
        for (int k = 0; k < L.c1.rank(); ++k)
            d[static_cast<size_t>(k)] = L.bnd.col(k);
        for (int k = 0; k < L.c1.rank(); ++k) {
            const Int& sk = s[static_cast<size_t>(k)];
            if (sk == 0)
                continue;
            r = vec_add(r, vec_scale(binom2(sk), L.crossed(d[static_cast<size_t>(k)], d[static_cast<size_t>(k)])));
            for (int l = k + 1; l < L.c1.rank(); ++l)
                if (s[static_cast<size_t>(l)] != 0)
                    r = vec_add(r, vec_scale(sk * s[static_cast<size_t>(l)],
                                             L.crossed(d[static_cast<size_t>(l)], d[static_cast<size_t>(k)])));
        }
        return L.cee.normal(r);
    }

    Elem mul(const Elem& a, const Elem& b) const
    {
        int n = a.deg, m = b.deg;
        if (a.lv == Level::L0 && b.lv == Level::L0) {
            Elem r = lzero(n + m, Level::L0);
            if (n + m > DL)
                return r;
            const GenTable* tb = tab->get(0, n, m);
            const Qpm& T = left(n + m);
            Vec c = corr0(n, a.c);
            for (int j = 0; j < alg->level(m).c0.rank(); ++j) {
                const Int& yj = b.c[static_cast<size_t>(j)];
                if (yj == 0)
                    continue;
                Vec g = T.c0.zero();
                if (tb)
                    for (size_t i = 0; i < a.c.size(); ++i)
                        if (a.c[i] != 0)
                            g = vec_add(g, vec_scale(a.c[i], tb->t[i][static_cast<size_t>(j)]));
                Vec ee = mulee_vec(n, m, c, alg->level(m).hgen.col(j));
                g = vec_add(g, T.del(T.pval(ee)));
                r.c = vec_add(r.c, vec_scale(yj, g));
            }
            r.c = T.c0.normal(r.c);
            return r;
        }
        if (a.lv == Level::L0 && b.lv == Level::L1) {
            Elem r = lzero(n + m, Level::L1);
            if (n + m > DL)
                return r;
            const GenTable* tb = tab->get(1, n, m);
            const Qpm& T = left(n + m);
            const Qpm& Bm = alg->level(m);
            Vec c = corr0(n, a.c);
            for (int kgen = 0; kgen < Bm.c1.rank(); ++kgen) {
                const Int& sk = b.c[static_cast<size_t>(kgen)];
                if (sk == 0)
                    continue;
                Vec g = T.c1.zero();
                if (tb)
                    for (size_t i = 0; i < a.c.size(); ++i)
                        if (a.c[i] != 0)
                            g = vec_add(g, vec_scale(a.c[i], tb->t[i][static_cast<size_t>(kgen)]));
                Vec hd = Bm.hval(Bm.bnd.col(kgen));
                g = vec_add(g, T.pval(mulee_vec(n, m, c, hd)));
                r.c = vec_add(r.c, vec_scale(sk, g));
            }
            r.c = T.c1.normal(r.c);
            return r;
        }
        if (a.lv == Level::L1 && b.lv == Level::L0) {
            Elem r = lzero(n + m, Level::L1);
            if (n + m > DL)
                return r;
            const GenTable* tb = tab->get(2, n, m);
            const Qpm& T = left(n + m);
            Vec c = corr1(n, a.c);
            for (int j = 0; j < alg->level(m).c0.rank(); ++j) {
                const Int& yj = b.c[static_cast<size_t>(j)];
                if (yj == 0)
                    continue;
                Vec g = T.c1.zero();
                if (tb)
                    for (size_t kk = 0; kk < a.c.size(); ++kk)
                        if (a.c[kk] != 0)
                            g = vec_add(g, vec_scale(a.c[kk], tb->t[kk][static_cast<size_t>(j)]));
                g = vec_add(g, T.pval(mulee_vec(n, m, c, alg->level(m).hgen.col(j))));
                r.c = vec_add(r.c, vec_scale(yj, g));
            }
            r.c = T.c1.normal(r.c);
            return r;
        }
        if (a.lv == Level::Lee && b.lv == Level::Lee)
            return lelem(n + m, Level::Lee, mulee_vec(n, m, a.c, b.c));
        throw Error("undefined multiplication of levels " + std::string(level_name(a.lv)) + "." +
                    level_name(b.lv));
    }
};

inline void require_level(const Elem& e, Level l, const char* what)
{
    if (e.lv != l)
        throw Error(std::string("expected level ") + level_name(l) + " for " + what);
}

// Algebra products, dispatching through the self view.
inline Elem qpa_mul(const GradedQpa& b, const Elem& x, const Elem& y)
{
    return ModuleView::of_algebra(b).mul(x, y);
}

}  // namespace qpa
