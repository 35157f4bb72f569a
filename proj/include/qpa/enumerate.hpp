#pragma once

#include <cmath>
#include <vector>

#include "qpa/abelian.hpp"

namespace qpa {

// Enumeration control for law suites over possibly infinite carriers.
// window: free coordinates range over [-window, window].
// budget: cap on the tuple count of one law; per-slot lists are thinned
// evenly (keeping both ends, hence 0 for symmetric windows) to fit.
struct Bound {
    long window = 6;
    long long budget = 400000;
};

inline std::vector<Vec> thin_elements(std::vector<Vec> v, size_t cap)
{
    if (v.size() <= cap || cap == 0)
        return v;
    if (cap % 2 == 0)
        ++cap;  // odd count keeps the midpoint of symmetric lists
    std::vector<Vec> out;
    out.reserve(cap);
    for (size_t k = 0; k < cap; ++k)
        out.push_back(v[k * (v.size() - 1) / (cap - 1)]);
    return out;
}

// Per-slot element lists for a joint enumeration of the given carriers.
inline std::vector<std::vector<Vec>> tuple_space(const std::vector<const AbGroup*>& slots, const Bound& b)
{
    size_t k = slots.size();
    double per = k ? std::pow(static_cast<double>(b.budget), 1.0 / static_cast<double>(k)) : 1.0;
    auto cap = static_cast<size_t>(per < 3 ? 3 : per);
    std::vector<std::vector<Vec>> out;
    for (auto* g : slots)
        out.push_back(thin_elements(g->elements(b.window), cap));
    return out;
}

// Odometer over the cartesian product of the slot lists. f returns false to
// stop early.
template <typename F>
void for_tuples(const std::vector<std::vector<Vec>>& axes, F&& f)
{
    std::vector<const Vec*> cur(axes.size());
    if (axes.empty()) {
        f(cur);
        return;
    }
    for (auto& ax : axes)
        if (ax.empty())
            return;
    std::vector<size_t> idx(axes.size(), 0);
    bool more = true;
    while (more) {
        for (size_t i = 0; i < axes.size(); ++i)
            cur[i] = &axes[i][idx[i]];
        if (!f(cur))
            return;
        more = false;
        size_t i = axes.size();
        while (i > 0) {
            --i;
            if (++idx[i] < axes[i].size()) {
                more = true;
                break;
            }
            idx[i] = 0;
        }
    }
}

}  // namespace qpa
