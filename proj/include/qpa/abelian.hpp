#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpa/smith.hpp"

namespace qpa {

// Finitely generated abelian group presented as Z^rank / <factor_i * e_i>.
// factor 0 means a free Z summand. Factors need not form a divisor chain;
// they are the presentation the instance declares, not the canonical one.
struct AbGroup {
    Vec factors;
    std::vector<std::string> gens;

    AbGroup() = default;
    AbGroup(Vec f, std::vector<std::string> g) : factors(std::move(f)), gens(std::move(g)) {}

    int rank() const { return static_cast<int>(factors.size()); }

    bool finite() const
    {
        for (auto& d : factors)
            if (d == 0)
                return false;
        return true;
    }

    Int order() const
    {
        Int o = 1;
        for (auto& d : factors)
            o *= d;
        return o;
    }

    Vec normal(Vec x) const
    {
        for (int i = 0; i < rank(); ++i)
            if (factors[static_cast<size_t>(i)] != 0)
                x[static_cast<size_t>(i)] = mod_floor(x[static_cast<size_t>(i)], factors[static_cast<size_t>(i)]);
        return x;
    }

    Vec zero() const { return Vec(static_cast<size_t>(rank()), Int(0)); }
    Vec add(const Vec& a, const Vec& b) const { return normal(vec_add(a, b)); }
    Vec neg(const Vec& a) const { return normal(vec_neg(a)); }
    Vec scale(const Int& k, const Vec& a) const { return normal(vec_scale(k, a)); }
    bool is_zero(const Vec& a) const { return vec_is_zero(normal(a)); }
    bool eq(const Vec& a, const Vec& b) const { return normal(a) == normal(b); }

    // Relation matrix diag(factors) with zero factors dropped.
    Mat relations() const
    {
        int k = 0;
        for (auto& d : factors)
            if (d != 0)
                ++k;
        Mat r(rank(), k);
        int j = 0;
        for (int i = 0; i < rank(); ++i)
            if (factors[static_cast<size_t>(i)] != 0)
                r.at(i, j++) = factors[static_cast<size_t>(i)];
        return r;
    }

    // All elements when finite, otherwise free coordinates range over
    // [-window, window]. Deterministic order.
    std::vector<Vec> elements(long window) const
    {
        std::vector<std::vector<Int>> axes;
        for (auto& d : factors) {
            std::vector<Int> ax;
            if (d != 0)
                for (Int v = 0; v < d; ++v)
                    ax.push_back(v);
            else
                for (long v = -window; v <= window; ++v)
                    ax.push_back(Int(v));
            axes.push_back(std::move(ax));
        }
        std::vector<Vec> out;
        Vec cur(static_cast<size_t>(rank()));
        std::vector<size_t> idx(static_cast<size_t>(rank()), 0);
        while (true) {
            for (int i = 0; i < rank(); ++i)
                cur[static_cast<size_t>(i)] = axes[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
            out.push_back(cur);
            int i = rank() - 1;
            while (i >= 0 && ++idx[static_cast<size_t>(i)] == axes[static_cast<size_t>(i)].size()) {
                idx[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0)
                break;
        }
        return out;
    }

    std::string show(const Vec& x0) const
    {
        Vec x = normal(x0);
        std::string s;
        for (int i = 0; i < rank(); ++i) {
            const Int& c = x[static_cast<size_t>(i)];
            if (c == 0)
                continue;
            std::string name = gens.empty() ? ("e" + std::to_string(i + 1)) : gens[static_cast<size_t>(i)];
            if (!s.empty())
                s += c > 0 ? "+" : "";
            if (c == 1)
                s += name;
            else if (c == -1)
                s += "-" + name;
            else
                s += to_string(c) + name;
        }
        return s.empty() ? "0" : s;
    }
};

inline std::string group_name(const Vec& invariant_factors)
{
    std::string s;
    for (auto& d : invariant_factors) {
        if (!s.empty())
            s += " + ";
        s += (d == 0) ? "Z" : ("Z/" + to_string(d));
    }
    return s.empty() ? "0" : s;
}

// Is x in the subgroup of g generated by the columns of gen?
inline bool subgroup_member(const AbGroup& g, const Mat& gen, const Vec& x)
{
    Mat m = hcat(gen, g.relations());
    return solve(m, g.normal(x)).has_value();
}

// Quotient of an ambient presented group by extra relation columns.
// Classes live in sum Z/d_i (+) Z^f coordinates derived from the SNF.
struct Quotient {
    int ambient_rank = 0;
    Snf f;             // SNF of [extra | ambient relations]
    Vec diag_full;     // diagonal padded with zeros up to ambient_rank
    std::vector<int> keep;  // SNF rows with d != 1: the class coordinates
    Vec factors;            // their moduli (0 = free)

    Quotient() = default;

    Quotient(const AbGroup& ambient, const Mat& extra)
    {
        ambient_rank = ambient.rank();
        Mat m = hcat(extra, ambient.relations());
        f = smith(m);
        diag_full.assign(static_cast<size_t>(ambient_rank), Int(0));
        int nmin = std::min(f.s.rows, f.s.cols);
        for (int i = 0; i < nmin; ++i)
            diag_full[static_cast<size_t>(i)] = f.s.at(i, i);
        for (int i = 0; i < ambient_rank; ++i) {
            if (diag_full[static_cast<size_t>(i)] != 1) {
                keep.push_back(i);
                factors.push_back(diag_full[static_cast<size_t>(i)]);
            }
        }
    }

    int rank() const { return static_cast<int>(keep.size()); }

    AbGroup group(const std::string& prefix = "c") const
    {
        std::vector<std::string> names;
        for (int i = 0; i < rank(); ++i)
            names.push_back(prefix + std::to_string(i + 1));
        return AbGroup(factors, names);
    }

    // Class coordinates of an ambient element.
    Vec class_of(const Vec& x) const
    {
        Vec y = f.u.apply(x);
        Vec cls(static_cast<size_t>(rank()));
        for (int i = 0; i < rank(); ++i) {
            const Int& d = factors[static_cast<size_t>(i)];
            Int v = y[static_cast<size_t>(keep[static_cast<size_t>(i)])];
            cls[static_cast<size_t>(i)] = (d == 0) ? v : mod_floor(v, d);
        }
        return cls;
    }

    bool is_zero(const Vec& x) const { return vec_is_zero(class_of(x)); }

    // Canonical ambient representative of a class.
    Vec rep_of(const Vec& cls) const
    {
        Vec y(static_cast<size_t>(ambient_rank), Int(0));
        for (int i = 0; i < rank(); ++i)
            y[static_cast<size_t>(keep[static_cast<size_t>(i)])] = cls[static_cast<size_t>(i)];
        return f.u_inv.apply(y);
    }
};

// The kernel of an integer matrix map between presented abelian groups,
// as a presented group with section. dom: C1, cod: C0, map columns = images
// of dom generators.
struct KernelPresentation {
    Mat basis;    // ambient dom coords; columns span {s : map(s) in L(cod relations)}
    Snf basis_f;  // SNF of basis, for expressing kernel elements in it
    Quotient q;   // Z^k / (dom relations written in basis coordinates)

    KernelPresentation() = default;

    KernelPresentation(const AbGroup& dom, const AbGroup& cod, const Mat& map)
    {
        Mat rc = cod.relations();
        Mat m = hcat(map, rc);
        Mat K = kernel_basis(smith(m));
        // project kernel columns to the dom block
        Mat gen(dom.rank(), K.cols);
        for (int j = 0; j < K.cols; ++j)
            for (int r = 0; r < dom.rank(); ++r)
                gen.at(r, j) = K.at(r, j);
        basis = lattice_basis(gen);
        basis_f = smith(basis);
        // dom relation columns lie in the lattice; express them in the basis
        Mat rd = dom.relations();
        Mat rel(basis.cols, rd.cols);
        for (int j = 0; j < rd.cols; ++j) {
            auto z = solve(basis_f, rd.col(j));
            if (!z)
                throw Error("kernel presentation: relation outside kernel lattice");
            for (int r = 0; r < basis.cols; ++r)
                rel.at(r, j) = (*z)[static_cast<size_t>(r)];
        }
        AbGroup free_k(Vec(static_cast<size_t>(basis.cols), Int(0)), {});
        q = Quotient(free_k, rel);
    }

    int rank() const { return q.rank(); }
    AbGroup group(const std::string& prefix = "k") const { return q.group(prefix); }

    // Class of a kernel element (throws if s is not in the kernel lattice).
    Vec class_of(const Vec& s) const
    {
        auto z = solve(basis_f, s);
        if (!z)
            throw Error("element not in kernel");
        return q.class_of(*z);
    }

    bool is_zero(const Vec& s) const { return vec_is_zero(class_of(s)); }

    // Ambient dom representative of a class.
    Vec rep_of(const Vec& cls) const { return basis.apply(q.rep_of(cls)); }
};

}  // namespace qpa
