#pragma once

#include <random>
#include <sstream>

#include "qpa/track.hpp"

namespace qpa {

inline std::vector<TrackElem> track_elements(int n)
{
    std::vector<TrackElem> out;
    int64_t f = factorial64(n);
    out.reserve(static_cast<size_t>(2 * f));
    for (int64_t r = 0; r < f; ++r)
        for (int b = 0; b < 2; ++b)
            out.push_back(TrackElem{n, perm_unrank(n, r), b});
    return out;
}

namespace detail {

inline Witness track_witness(std::initializer_list<std::pair<std::string, std::string>> in,
                             const TrackElem& lhs, const TrackElem& rhs)
{
    Witness w;
    w.inputs.assign(in.begin(), in.end());
    w.lhs = track_to_string(lhs);
    w.rhs = track_to_string(rhs);
    return w;
}

}  // namespace detail

// The five relations of the presentation, for every degree up to n_max.
inline Suite track_presentation_suite(int n_max)
{
    using detail::track_witness;
    LawCheck r1("TR1", "t_i^2 = 1"), r2("TR2", "(t_i t_{i+1})^3 = 1"), r3("TR3", "w^2 = 1, t_i w = w t_i"),
        r4("TR4", "t_i t_j = w t_j t_i (i < j-1)");
    for (int n = 0; n <= n_max; ++n) {
        TrackElem idn = track_identity(n), om = track_omega(n);
        r3.tuple(track_mul(om, om) == idn, [&] { return track_witness({{"n", std::to_string(n)}}, track_mul(om, om), idn); });
        for (int i = 1; i <= n - 1; ++i) {
            TrackElem ti = track_gen(n, i);
            r1.tuple(track_mul(ti, ti) == idn,
                     [&] { return track_witness({{"n", std::to_string(n)}, {"i", std::to_string(i)}}, track_mul(ti, ti), idn); });
            r3.tuple(track_mul(ti, om) == track_mul(om, ti),
                     [&] { return track_witness({{"n", std::to_string(n)}, {"i", std::to_string(i)}}, track_mul(ti, om), track_mul(om, ti)); });
            if (i + 1 <= n - 1) {
                TrackElem s = track_mul(ti, track_gen(n, i + 1));
                r2.tuple(track_pow(s, 3) == idn,
                         [&] { return track_witness({{"n", std::to_string(n)}, {"i", std::to_string(i)}}, track_pow(s, 3), idn); });
            }
            for (int j = i + 2; j <= n - 1; ++j) {
                TrackElem tj = track_gen(n, j);
                TrackElem lhs = track_mul(ti, tj);
                TrackElem rhs = track_mul(om, track_mul(tj, ti));
                r4.tuple(lhs == rhs, [&] {
                    return track_witness({{"n", std::to_string(n)}, {"i", std::to_string(i)}, {"j", std::to_string(j)}}, lhs, rhs);
                });
            }
        }
    }
    Suite s;
    s.laws = {r1.done(), r2.done(), r3.done(), r4.done()};
    return s;
}

// Lemma cambio: (S^m ^ t) tauhat_{n,m} = tauhat_{n,m} (t ^ S^m) w^{nm binom(eps delta t, 2)}.
inline LawReport track_cambio(int n_max)
{
    LawCheck law("TRC", "(cambio)");
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; n + m <= n_max; ++m) {
            TrackElem tau = shuffle_lift(n, m);
            for (auto& t : track_elements(n)) {
                TrackElem lhs = track_mul(suspend_left(m, t), tau);
                Int exp = Int(n) * m * binom2(epsilon_delta(t));
                TrackElem rhs = track_mul(tau, suspend_right(t, m));
                if (!is_even(exp))
                    rhs = track_mul(rhs, track_omega(n + m));
                bool ok = lhs == rhs;
                if (!law.tuple(ok, [&] {
                        return detail::track_witness(
                            {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"t", track_to_string(t)}}, lhs, rhs);
                    }))
                    return law.done();
            }
        }
    return law.done();
}

// Lemma recho(1): tauhat_{p,q} tauhat_{q,p} = w^{binom(p,2) binom(q,2)}.
inline LawReport track_recho1(int n_max)
{
    LawCheck law("TRR1", "(recho.1)");
    for (int p = 0; p <= n_max; ++p)
        for (int q = 0; p + q <= n_max; ++q) {
            TrackElem lhs = track_mul(shuffle_lift(p, q), shuffle_lift(q, p));
            Int exp = binom2(Int(p)) * binom2(Int(q));
            TrackElem rhs = is_even(exp) ? track_identity(p + q) : track_omega(p + q);
            if (!law.tuple(lhs == rhs, [&] {
                    return detail::track_witness({{"p", std::to_string(p)}, {"q", std::to_string(q)}}, lhs, rhs);
                }))
                return law.done();
        }
    return law.done();
}

// Lemma recho(2), the four-fold shuffle identity.
inline LawReport track_recho2(int n_max)
{
    LawCheck law("TRR2", "(recho.2)");
    for (int p = 0; p <= n_max; ++p)
        for (int q = 0; p + q <= n_max; ++q)
            for (int r = 0; p + q + r <= n_max; ++r)
                for (int s = 0; p + q + r + s <= n_max; ++s) {
                    TrackElem a = suspend_left(r, suspend_right(shuffle_lift(p, s), q));
                    TrackElem b = suspend_left(r + p, shuffle_lift(q, s));
                    TrackElem c = suspend_right(shuffle_lift(p, r), q + s);
                    TrackElem d = suspend_left(p, suspend_right(shuffle_lift(q, r), s));
                    TrackElem lhs = track_mul(track_mul(a, b), track_mul(c, d));
                    TrackElem rhs = shuffle_lift(p + q, r + s);
                    Int exp = Int(r) * s * (binom2(Int(p)) + binom2(Int(q)) + Int(p) * q);
                    if (!is_even(exp))
                        rhs = track_mul(rhs, track_omega(p + q + r + s));
                    if (!law.tuple(lhs == rhs, [&] {
                            return detail::track_witness({{"p", std::to_string(p)},
                                                          {"q", std::to_string(q)},
                                                          {"r", std::to_string(r)},
                                                          {"s", std::to_string(s)}},
                                                         lhs, rhs);
                        }))
                        return law.done();
                }
    return law.done();
}

// tauhat_{2n,2n}^2 = w^{binom(2n,2)^2}, the group-level content of the
// equation n P(1|1)_H = [tau][tauhat] + [tauhat].
inline LawReport track_taudouble(int deg_max)
{
    LawCheck law("TRD", "tauhat_{2n,2n}^2 = w^{binom(2n,2)^2}");
    for (int k = 0; 4 * k <= deg_max; ++k) {
        TrackElem tau = shuffle_lift(2 * k, 2 * k);
        TrackElem lhs = track_mul(tau, tau);
        Int b = binom2(Int(2 * k));
        TrackElem rhs = is_even(b * b) ? track_identity(4 * k) : track_omega(4 * k);
        if (!law.tuple(lhs == rhs,
                       [&] { return detail::track_witness({{"n", std::to_string(k)}}, lhs, rhs); }))
            return law.done();
    }
    return law.done();
}

// Permutation-level compatibilities of cross products and suspensions.
inline LawReport track_cross_laws(int n_max)
{
    LawCheck law("TRX", "tau_{n,m}(s x t) = (t x s) tau_{n,m}; delta of suspensions");
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; n + m <= n_max; ++m) {
            Perm tau = perm_tau(n, m);
            int64_t fn = factorial64(n), fm = factorial64(m);
            for (int64_t i = 0; i < fn; ++i)
                for (int64_t j = 0; j < fm; ++j) {
                    Perm s = perm_unrank(n, i), t = perm_unrank(m, j);
                    Perm lhs = perm_mul(tau, perm_cross(s, t));
                    Perm rhs = perm_mul(perm_cross(t, s), tau);
                    if (!law.tuple(lhs == rhs, [&] {
                            Witness w;
                            w.inputs = {{"n", std::to_string(n)}, {"m", std::to_string(m)},
                                        {"s", perm_to_string(s)}, {"t", perm_to_string(t)}};
                            w.lhs = perm_to_string(lhs);
                            w.rhs = perm_to_string(rhs);
                            return w;
                        }))
                        return law.done();
                }
            for (auto& t : track_elements(n)) {
                Perm l1 = suspend_left(m, t).p, r1 = perm_cross(Perm::identity(m), t.p);
                Perm l2 = suspend_right(t, m).p, r2 = perm_cross(t.p, Perm::identity(m));
                law.tuple(l1 == r1 && l2 == r2, [&] {
                    Witness w;
                    w.inputs = {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"t", track_to_string(t)}};
                    w.lhs = perm_to_string(l1) + " / " + perm_to_string(l2);
                    w.rhs = perm_to_string(r1) + " / " + perm_to_string(r2);
                    return w;
                });
            }
        }
    return law.done();
}

// Suspensions are homomorphisms fixing omega.
inline LawReport track_suspension_hom(int n_max)
{
    LawCheck law("TRH", "S^k^- and -^S^k are homomorphisms fixing w");
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; n + k <= n_max; ++k) {
            if (k > 0) {
                law.tuple(suspend_left(k, track_omega(n)) == track_omega(k + n), [] { return Witness{}; });
                law.tuple(suspend_right(track_omega(n), k) == track_omega(n + k), [] { return Witness{}; });
            }
            auto elems = track_elements(n);
            for (auto& a : elems)
                for (auto& b : elems) {
                    TrackElem ab = track_mul(a, b);
                    bool ok = suspend_left(k, ab) == track_mul(suspend_left(k, a), suspend_left(k, b)) &&
                              suspend_right(ab, k) == track_mul(suspend_right(a, k), suspend_right(b, k));
                    if (!law.tuple(ok, [&] {
                            return detail::track_witness(
                                {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"a", track_to_string(a)}, {"b", track_to_string(b)}},
                                ab, ab);
                        }))
                        return law.done();
                }
        }
    return law.done();
}

// eps(delta(t_i)) = -1 and |track group| = 2 n! (model elements distinct).
inline Suite track_structure_suite(int n_max)
{
    LawCheck le("TRE", "eps(delta(t_i)) = -1");
    LawCheck lo("TRO", "|track group on n letters| = 2 n!");
    for (int n = 0; n <= n_max; ++n) {
        for (int i = 1; i <= n - 1; ++i)
            le.tuple(epsilon_delta(track_gen(n, i)) == -1, [&] {
                Witness w;
                w.inputs = {{"n", std::to_string(n)}, {"i", std::to_string(i)}};
                w.lhs = std::to_string(epsilon_delta(track_gen(n, i)));
                w.rhs = "-1";
                return w;
            });
        auto reps = track_ctx(n).all_sections();
        bool distinct = true;
        for (size_t i = 0; i < reps.size() && distinct; ++i)
            for (size_t j = i + 1; j < reps.size() && distinct; ++j)
                if (reps[i] == reps[j] || reps[i] == -reps[j])
                    distinct = false;
        for (auto& r : reps)
            if (r == -r)
                distinct = false;
        lo.tuple(distinct, [&] {
            Witness w;
            w.inputs = {{"n", std::to_string(n)}};
            w.lhs = "colliding model elements";
            w.rhs = std::to_string(2 * factorial64(n)) + " distinct";
            return w;
        });
    }
    Suite s;
    s.laws = {le.done(), lo.done()};
    return s;
}

// Associativity and inverses: exhaustive for small degrees, seeded random
// sampling above.
inline Suite track_group_law_suite(int exhaustive_max, int random_max, int samples, uint64_t seed)
{
    LawCheck la("TRA", "associativity"), li("TRI", "two-sided inverses");
    for (int n = 0; n <= exhaustive_max; ++n) {
        auto elems = track_elements(n);
        for (auto& a : elems) {
            li.tuple(track_mul(track_inv(a), a) == track_identity(n) &&
                         track_mul(a, track_inv(a)) == track_identity(n),
                     [&] { return detail::track_witness({{"a", track_to_string(a)}}, a, a); });
            for (auto& b : elems)
                for (auto& c : elems) {
                    TrackElem l = track_mul(track_mul(a, b), c), r = track_mul(a, track_mul(b, c));
                    if (!la.tuple(l == r, [&] {
                            return detail::track_witness(
                                {{"a", track_to_string(a)}, {"b", track_to_string(b)}, {"c", track_to_string(c)}}, l, r);
                        })) {
                        Suite s;
                        s.laws = {la.done(), li.done()};
                        return s;
                    }
                }
        }
    }
    std::mt19937_64 rng(seed);
    for (int n = exhaustive_max + 1; n <= random_max; ++n) {
        int64_t f = factorial64(n);
        auto pick = [&] {
            return TrackElem{n, perm_unrank(n, static_cast<int64_t>(rng() % static_cast<uint64_t>(f))),
                             static_cast<int>(rng() % 2)};
        };
        for (int s = 0; s < samples; ++s) {
            TrackElem a = pick(), b = pick(), c = pick();
            TrackElem l = track_mul(track_mul(a, b), c), r = track_mul(a, track_mul(b, c));
            la.tuple(l == r, [&] {
                return detail::track_witness(
                    {{"a", track_to_string(a)}, {"b", track_to_string(b)}, {"c", track_to_string(c)}}, l, r);
            });
            li.tuple(track_mul(track_inv(a), a) == track_identity(n),
                     [&] { return detail::track_witness({{"a", track_to_string(a)}}, a, a); });
        }
    }
    Suite s;
    s.laws = {la.done(), li.done()};
    return s;
}

// Fast-path (perm, bit) products against full products in the reference
// model, every pair in every degree up to n_max.
inline LawReport track_model_agreement(int n_max)
{
    LawCheck law("TRF", "fast path agrees with the pin-group model on all products");
    for (int n = 0; n <= n_max; ++n) {
        const TrackContext& cx = track_ctx(n);
        auto reps = cx.all_sections();
        int64_t f = factorial64(n);
        for (int64_t i = 0; i < f; ++i) {
            Perm pi = perm_unrank(n, i);
            for (int64_t j = 0; j < f; ++j) {
                Perm pj = perm_unrank(n, j);
                PinElem prod = pin_mul(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)], cx.signs());
                int64_t k = perm_rank(perm_mul(pi, pj));
                int model_bit = TrackContext::match_sign(prod, reps[static_cast<size_t>(k)]);
                for (int ba = 0; ba < 2; ++ba)
                    for (int bb = 0; bb < 2; ++bb) {
                        TrackElem fast = track_mul(TrackElem{n, pi, ba}, TrackElem{n, pj, bb});
                        bool ok = fast.bit == (model_bit ^ ba ^ bb) && perm_rank(fast.p) == k;
                        if (!law.tuple(ok, [&] {
                                Witness w;
                                w.inputs = {{"n", std::to_string(n)}, {"a", perm_to_string(pi) + "^" + std::to_string(ba)},
                                            {"b", perm_to_string(pj) + "^" + std::to_string(bb)}};
                                w.lhs = "fast bit " + std::to_string(fast.bit);
                                w.rhs = "model bit " + std::to_string(model_bit ^ ba ^ bb);
                                return w;
                            }))
                            return law.done();
                    }
            }
        }
    }
    return law.done();
}

// The whole section 5 verification: presentation, cambio, recho, shuffle
// square, cross laws, suspensions, structure, group laws, model agreement.
inline Suite verify_track_laws(int n_max, bool with_model_agreement = true)
{
    Suite s = track_presentation_suite(n_max);
    s.laws.push_back(track_cambio(n_max));
    s.laws.push_back(track_recho1(n_max));
    s.laws.push_back(track_recho2(n_max));
    s.laws.push_back(track_taudouble(std::max(n_max, 8)));
    s.laws.push_back(track_cross_laws(n_max));
    s.laws.push_back(track_suspension_hom(std::min(n_max, 5)));
    s.append(track_structure_suite(std::min(n_max, 6)));
    s.append(track_group_law_suite(std::min(n_max, 4), std::min(n_max, 8), 200, 0x5eed));
    if (with_model_agreement)
        s.laws.push_back(track_model_agreement(std::min(n_max, 6)));
    return s;
}

// Cocycle table of one degree as TSV: rows and columns are permutations in
// lex one-line order, entries 0/1.
inline std::string cocycle_table_tsv(int n)
{
    if (n > 6)
        throw Error("cocycle table limited to degree <= 6");
    const TrackContext& cx = track_ctx(n);
    int64_t f = factorial64(n);
    std::ostringstream os;
    for (int64_t i = 0; i < f; ++i) {
        Perm a = perm_unrank(n, i);
        for (int64_t j = 0; j < f; ++j) {
            if (j)
                os << '\t';
            os << cx.cocycle(a, perm_unrank(n, j));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace qpa
