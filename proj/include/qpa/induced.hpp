#pragma once

#include "qpa/massey.hpp"

namespace qpa {

// The graded ring h0 B with its multiplication table on class generators,
// and the verification that the induced product is well defined (products
// against boundary-perturbed representatives agree).
struct InducedRing {
    std::vector<AbGroup> groups;                 // per degree
    std::vector<std::vector<GenTable>> prod;     // class-gen x class-gen -> class coords
    Suite checks;
};

inline InducedRing h0_ring(const GradedQpa& B, const Homologies& h, const Bound& bound)
{
    InducedRing r;
    for (int n = 0; n <= B.D; ++n)
        r.groups.push_back(h.at(n).h0_group);
    r.prod.assign(static_cast<size_t>(B.D) + 1, std::vector<GenTable>(static_cast<size_t>(B.D) + 1));
    LawCheck law("H0W", "induced product on h0 is well defined");
    for (int n = 0; n <= B.D; ++n)
        for (int m = 0; n + m <= B.D; ++m) {
            const QpmHomology &hn = h.at(n), &hm = h.at(m), &ht = h.at(n + m);
            GenTable& tb = r.prod[static_cast<size_t>(n)][static_cast<size_t>(m)];
            tb.t.assign(static_cast<size_t>(hn.h0_group.rank()),
                        std::vector<Vec>(static_cast<size_t>(hm.h0_group.rank())));
            for (int i = 0; i < hn.h0_group.rank(); ++i)
                for (int j = 0; j < hm.h0_group.rank(); ++j) {
                    Vec ei(static_cast<size_t>(hn.h0_group.rank()), Int(0)), ej(static_cast<size_t>(hm.h0_group.rank()), Int(0));
                    ei[static_cast<size_t>(i)] = 1;
                    ej[static_cast<size_t>(j)] = 1;
                    Elem a = B.elem(n, Level::L0, hn.h0.rep_of(ei));
                    Elem b = B.elem(m, Level::L0, hm.h0.rep_of(ej));
                    Vec base = ht.h0.class_of(qpa_mul(B, a, b).c);
                    tb.t[static_cast<size_t>(i)][static_cast<size_t>(j)] = base;
                    // perturb either representative by boundaries
                    Bound pb = bound;
                    pb.budget = 64;
                    for_tuples(tuple_space({&B.level(n).c1, &B.level(m).c1}, pb), [&](auto& t) {
                        Elem a2 = B.add(a, B.bmap(Elem{n, Level::L1, *t[0]}));
                        Elem b2 = B.add(b, B.bmap(Elem{m, Level::L1, *t[1]}));
                        Vec got = ht.h0.class_of(qpa_mul(B, a2, b2).c);
                        return law.tuple(got == base, [&] {
                            Witness w;
                            w.inputs = {{"deg", std::to_string(n) + "," + std::to_string(m)},
                                        {"a", B.show(a2)}, {"b", B.show(b2)}};
                            w.lhs = ht.h0_group.show(got);
                            w.rhs = ht.h0_group.show(base);
                            return w;
                        });
                    });
                }
        }
    r.checks.laws.push_back(law.done());
    return r;
}

// h1 B as an h0 B-bimodule: both actions on class generators, checked to be
// independent of the representative of the acting class.
struct InducedBimodule {
    std::vector<AbGroup> groups;                  // h1 per degree
    std::vector<std::vector<GenTable>> left;      // h0-gen x h1-gen
    std::vector<std::vector<GenTable>> right;     // h1-gen x h0-gen
    Suite checks;
};

inline InducedBimodule h1_bimodule(const GradedQpa& B, const Homologies& h, const Bound& bound)
{
    InducedBimodule r;
    for (int n = 0; n <= B.D; ++n)
        r.groups.push_back(h.at(n).h1_group);
    r.left.assign(static_cast<size_t>(B.D) + 1, std::vector<GenTable>(static_cast<size_t>(B.D) + 1));
    r.right = r.left;
    LawCheck law("H1W", "induced actions on h1 are well defined");
    for (int n = 0; n <= B.D; ++n)
        for (int m = 0; n + m <= B.D; ++m) {
            const QpmHomology &hn = h.at(n), &hm = h.at(m), &ht = h.at(n + m);
            GenTable& lt = r.left[static_cast<size_t>(n)][static_cast<size_t>(m)];
            lt.t.assign(static_cast<size_t>(hn.h0_group.rank()),
                        std::vector<Vec>(static_cast<size_t>(hm.h1_group.rank())));
            GenTable& rt = r.right[static_cast<size_t>(n)][static_cast<size_t>(m)];
            rt.t.assign(static_cast<size_t>(hn.h1_group.rank()),
                        std::vector<Vec>(static_cast<size_t>(hm.h0_group.rank())));
            for (int i = 0; i < hn.h0_group.rank(); ++i)
                for (int j = 0; j < hm.h1_group.rank(); ++j) {
                    Vec ei(static_cast<size_t>(hn.h0_group.rank()), Int(0)), ej(static_cast<size_t>(hm.h1_group.rank()), Int(0));
                    ei[static_cast<size_t>(i)] = 1;
                    ej[static_cast<size_t>(j)] = 1;
                    Elem a = B.elem(n, Level::L0, hn.h0.rep_of(ei));
                    Elem k = B.elem(m, Level::L1, hm.h1.rep_of(ej));
                    Vec base = ht.h1.class_of(qpa_mul(B, a, k).c);
                    lt.t[static_cast<size_t>(i)][static_cast<size_t>(j)] = base;
                    Bound pb = bound;
                    pb.budget = 64;
                    for_tuples(tuple_space({&B.level(n).c1}, pb), [&](auto& t) {
                        Elem a2 = B.add(a, B.bmap(Elem{n, Level::L1, *t[0]}));
                        Vec got = ht.h1.class_of(qpa_mul(B, a2, k).c);
                        return law.tuple(got == base, [&] {
                            Witness w;
                            w.inputs = {{"deg", std::to_string(n) + "," + std::to_string(m)}, {"a", B.show(a2)}};
                            w.lhs = ht.h1_group.show(got);
                            w.rhs = ht.h1_group.show(base);
                            return w;
                        });
                    });
                }
            for (int i = 0; i < hn.h1_group.rank(); ++i)
                for (int j = 0; j < hm.h0_group.rank(); ++j) {
                    Vec ei(static_cast<size_t>(hn.h1_group.rank()), Int(0)), ej(static_cast<size_t>(hm.h0_group.rank()), Int(0));
                    ei[static_cast<size_t>(i)] = 1;
                    ej[static_cast<size_t>(j)] = 1;
                    Elem k = B.elem(n, Level::L1, hn.h1.rep_of(ei));
                    Elem b = B.elem(m, Level::L0, hm.h0.rep_of(ej));
                    Vec base = ht.h1.class_of(qpa_mul(B, k, b).c);
                    rt.t[static_cast<size_t>(i)][static_cast<size_t>(j)] = base;
                    Bound pb = bound;
                    pb.budget = 64;
                    for_tuples(tuple_space({&B.level(m).c1}, pb), [&](auto& t) {
                        Elem b2 = B.add(b, B.bmap(Elem{m, Level::L1, *t[0]}));
                        Vec got = ht.h1.class_of(qpa_mul(B, k, b2).c);
                        return law.tuple(got == base, [&] {
                            Witness w;
                            w.inputs = {{"deg", std::to_string(n) + "," + std::to_string(m)}, {"b", B.show(b2)}};
                            w.lhs = ht.h1_group.show(got);
                            w.rhs = ht.h1_group.show(base);
                            return w;
                        });
                    });
                }
        }
    r.checks.laws.push_back(law.done());
    return r;
}

// The k-invariant is an h0-bimodule homomorphism: (ab).eta = a(b.eta) and
// (a.eta)b = (ab).eta over class pairs in the window.
inline Suite k_invariant_bimodule_check(const GradedQpa& B, const Homologies& h, const TodaBound& tb)
{
    ModuleView v = ModuleView::of_algebra(B);
    ClassOps ops{&v, &h, &h};
    LawCheck k1("K1", "(ab).eta = a.(b.eta)"), k2("K2", "(a.eta).b = (ab).eta");
    for (int n = 0; n <= B.D; ++n)
        for (int m = 0; n + m <= B.D; ++m)
            for (auto& a : h.at(n).h0_group.elements(tb.class_window))
                for (auto& b : h.at(m).h0_group.elements(tb.class_window)) {
                    Vec ab = ops.acls_mul(n, a, m, b);
                    Vec lhs1 = ops.eta(n + m, ab);
                    Vec rhs1 = ops.act_left(n, a, m, ops.eta(m, b));
                    k1.tuple(lhs1 == rhs1, [&] {
                        Witness w;
                        w.inputs = {{"a", h.at(n).h0_group.show(a)}, {"b", h.at(m).h0_group.show(b)}};
                        w.lhs = h.at(n + m).h1_group.show(lhs1);
                        w.rhs = h.at(n + m).h1_group.show(rhs1);
                        return w;
                    });
                    Vec rhs2 = ops.act_right(n, ops.eta(n, a), m, b);
                    k2.tuple(lhs1 == rhs2, [&] {
                        Witness w;
                        w.inputs = {{"a", h.at(n).h0_group.show(a)}, {"b", h.at(m).h0_group.show(b)}};
                        w.lhs = h.at(n + m).h1_group.show(lhs1);
                        w.rhs = h.at(n + m).h1_group.show(rhs2);
                        return w;
                    });
                }
    Suite s;
    s.laws = {k1.done(), k2.done()};
    return s;
}

// Does every h0 class have a representative killed by H? Exact whenever the
// representative sets are enumerable; the zero quadratic map short-circuits.
struct PropertyH {
    std::vector<bool> holds;    // per degree
    std::vector<bool> exact;    // enumeration was complete
    std::vector<std::string> witness;  // class without ker-H representative
};

inline PropertyH property_H_check(const GradedQpa& B, const Homologies& h, const TodaBound& tb)
{
    PropertyH out;
    for (int n = 0; n <= B.D; ++n) {
        const Qpm& q = B.level(n);
        bool h_zero = true;
        for (auto& e : q.hgen.a)
            if (e != 0)
                h_zero = false;
        for (auto& pv : q.hpair)
            for (auto& e : pv)
                if (e != 0)
                    h_zero = false;
        if (h_zero) {
            out.holds.push_back(true);
            out.exact.push_back(true);
            out.witness.emplace_back();
            continue;
        }
        bool ok = true, exact = true;
        std::string wit;
        for (auto& cls : h.at(n).h0_group.elements(tb.class_window)) {
            bool found = false;
            try {
                for (auto& rep : all_reps(q, h.at(n), cls))
                    if (q.cee.is_zero(q.hval(rep))) {
                        found = true;
                        break;
                    }
            } catch (const Error&) {
                exact = false;  // infinite representative set: sample boundaries
                Vec rep = h.at(n).h0.rep_of(cls);
                Bound pb;
                pb.budget = 512;
                for_tuples(tuple_space({&q.c1}, pb), [&](auto& t) {
                    Vec cand = q.c0.add(rep, q.del(*t[0]));
                    if (q.cee.is_zero(q.hval(cand))) {
                        found = true;
                        return false;
                    }
                    return true;
                });
            }
            if (!found) {
                ok = false;
                wit = h.at(n).h0_group.show(cls);
                break;
            }
        }
        out.holds.push_back(ok);
        out.exact.push_back(exact);
        out.witness.push_back(wit);
    }
    return out;
}

}  // namespace qpa
