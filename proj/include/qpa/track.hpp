#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qpa/clifford.hpp"
#include "qpa/perm.hpp"
#include "qpa/report.hpp"

namespace qpa {

// Element of the symmetric track group on n letters: underlying permutation
// plus a sign bit relative to the canonical section. The section sends pi to
// the product of generators along its lexicographically smallest reduced
// word, evaluated in the pin-group reference model; omega is the scalar -1.
struct TrackElem {
    int n = 0;
    Perm p;
    int bit = 0;

    bool operator==(const TrackElem& o) const { return n == o.n && bit == o.bit && p == o.p; }
    bool operator!=(const TrackElem& o) const { return !(*this == o); }
    bool operator<(const TrackElem& o) const
    {
        if (n != o.n)
            return n < o.n;
        if (!(p == o.p))
            return p < o.p;
        return bit < o.bit;
    }
};

constexpr int TRACK_MAX_DEGREE = 12;   // perm ranks fit in int64
constexpr int TRACK_TABLE_DEGREE = 7;  // generator cocycle tables up to here

// Per-degree cocycle data, built once from the reference model, then frozen.
class TrackContext {
public:
    explicit TrackContext(int n) : n_(n), signs_(n), fact_(factorial64(n))
    {
        if (n > TRACK_MAX_DEGREE)
            throw DegreeMismatch("track degree above supported bound");
        if (n_ <= TRACK_TABLE_DEGREE && n_ >= 2)
            build_tables();
    }

    int degree() const { return n_; }
    int64_t order() const { return 2 * fact_; }
    const CliffordSigns& signs() const { return signs_; }

    PinElem section(const Perm& p) const { return pin_eval_word(n_, lex_reduced_word(p), signs_); }

    // Cocycle bit of section(p) * T_j = omega^bit * section(p s_j).
    int gen_cocycle(const Perm& p, int j) const
    {
        if (n_ <= TRACK_TABLE_DEGREE)
            return rtab_[static_cast<size_t>(j)][static_cast<size_t>(perm_rank(p))] ? 1 : 0;
        int64_t key = perm_rank(p) * (n_ - 1) + j;
        {
            std::lock_guard<std::mutex> lk(memo_mx_);
            auto it = memo_.find(key);
            if (it != memo_.end())
                return it->second;
        }
        PinElem lhs = pin_mul_gen(section(p), j, signs_);
        Perm q = p;
        std::swap(q.img[static_cast<size_t>(j)], q.img[static_cast<size_t>(j) + 1]);
        int bit = match_sign(lhs, section(q));
        std::lock_guard<std::mutex> lk(memo_mx_);
        memo_[key] = bit;
        return bit;
    }

    // Full cocycle via the canonical word of b.
    int cocycle(const Perm& a, const Perm& b) const
    {
        int bit = 0;
        Perm cur = a;
        for (int j : lex_reduced_word(b)) {
            bit ^= gen_cocycle(cur, j);
            std::swap(cur.img[static_cast<size_t>(j)], cur.img[static_cast<size_t>(j) + 1]);
        }
        return bit;
    }

    // lhs must be +-ref; returns 1 when lhs == -ref.
    static int match_sign(const PinElem& lhs, const PinElem& ref)
    {
        if (lhs == ref)
            return 0;
        if (lhs == -ref)
            return 1;
        throw Error("reference model mismatch: product is not +-section");
    }

    // Section elements for every permutation, in lex rank order.
    std::vector<PinElem> all_sections() const
    {
        std::vector<PinElem> reps;
        reps.reserve(static_cast<size_t>(fact_));
        for (int64_t r = 0; r < fact_; ++r)
            reps.push_back(section(perm_unrank(n_, r)));
        return reps;
    }

private:
    void build_tables()
    {
        auto reps = all_sections();
        rtab_.assign(static_cast<size_t>(n_ - 1), std::vector<bool>(static_cast<size_t>(fact_)));
        for (int64_t r = 0; r < fact_; ++r) {
            Perm p = perm_unrank(n_, r);
            for (int j = 0; j + 1 < n_; ++j) {
                PinElem lhs = pin_mul_gen(reps[static_cast<size_t>(r)], j, signs_);
                Perm q = p;
                std::swap(q.img[static_cast<size_t>(j)], q.img[static_cast<size_t>(j) + 1]);
                int64_t rq = perm_rank(q);
                rtab_[static_cast<size_t>(j)][static_cast<size_t>(r)] =
                    match_sign(lhs, reps[static_cast<size_t>(rq)]) != 0;
            }
        }
    }

    int n_;
    CliffordSigns signs_;
    int64_t fact_;
    std::vector<std::vector<bool>> rtab_;
    mutable std::map<int64_t, int> memo_;
    mutable std::mutex memo_mx_;
};

inline const TrackContext& track_ctx(int n)
{
    static std::mutex mx;
    static std::map<int, std::unique_ptr<TrackContext>> reg;
    std::lock_guard<std::mutex> lk(mx);
    auto it = reg.find(n);
    if (it == reg.end())
        it = reg.emplace(n, std::make_unique<TrackContext>(n)).first;
    return *it->second;
}

inline TrackElem track_identity(int n)
{
    return TrackElem{n, Perm::identity(n), 0};
}

inline TrackElem track_omega(int n)
{
    return TrackElem{n, Perm::identity(n), 1};
}

// t_i, 1-based as in the presentation; 1 <= i <= n-1.
inline TrackElem track_gen(int n, int i)
{
    if (i < 1 || i > n - 1)
        throw Error("generator index out of range");
    return TrackElem{n, Perm::adjacent(n, i - 1), 0};
}

inline TrackElem track_mul(const TrackElem& a, const TrackElem& b)
{
    if (a.n != b.n)
        throw DegreeMismatch("track elements of different degree");
    const TrackContext& cx = track_ctx(a.n);
    TrackElem r;
    r.n = a.n;
    r.p = perm_mul(a.p, b.p);
    r.bit = a.bit ^ b.bit ^ cx.cocycle(a.p, b.p);
    return r;
}

inline TrackElem track_inv(const TrackElem& a)
{
    const TrackContext& cx = track_ctx(a.n);
    TrackElem r;
    r.n = a.n;
    r.p = perm_inv(a.p);
    r.bit = a.bit ^ cx.cocycle(r.p, a.p);
    return r;
}

inline TrackElem track_pow(TrackElem a, long k)
{
    TrackElem r = track_identity(a.n);
    if (k < 0) {
        a = track_inv(a);
        k = -k;
    }
    for (long i = 0; i < k; ++i)
        r = track_mul(r, a);
    return r;
}

// Word letters: 0 stands for omega, i >= 1 for t_i.
inline TrackElem track_from_word(int n, const std::vector<int>& word)
{
    TrackElem r = track_identity(n);
    for (int w : word) {
        if (w == 0)
            r = track_mul(r, track_omega(n));
        else
            r = track_mul(r, track_gen(n, w));
    }
    return r;
}

// S^k ^ - : generators t_i -> t_{k+i}, omega fixed.
inline TrackElem suspend_left(int k, const TrackElem& t)
{
    return TrackElem{k + t.n, perm_cross(Perm::identity(k), t.p), t.bit};
}

// - ^ S^k : generators fixed, omega fixed.
inline TrackElem suspend_right(const TrackElem& t, int k)
{
    return TrackElem{t.n + k, perm_cross(t.p, Perm::identity(k)), t.bit};
}

inline int epsilon_delta(const TrackElem& t)
{
    return perm_sign(t.p);
}

// The canonical lift tauhat_{n,m}: n groups of m descending generators.
inline std::vector<int> shuffle_word(int n, int m)
{
    std::vector<int> w;
    for (int i = 1; i <= n; ++i)
        for (int a = m + i - 1; a >= i; --a)
            w.push_back(a);
    return w;
}

inline TrackElem shuffle_lift(int n, int m)
{
    return track_from_word(n + m, shuffle_word(n, m));
}

inline std::string track_to_string(const TrackElem& t)
{
    std::string s;
    if (t.bit)
        s += "w";
    auto word = lex_reduced_word(t.p);
    for (int j : word) {
        if (!s.empty())
            s += ".";
        s += "t" + std::to_string(j + 1);
    }
    if (s.empty())
        s = "1";
    return s;
}

}  // namespace qpa
