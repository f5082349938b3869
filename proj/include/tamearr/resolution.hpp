#ifndef TAMEARR_RESOLUTION_HPP
#define TAMEARR_RESOLUTION_HPP

#include <map>
#include <vector>

#include "tamearr/groebner.hpp"

namespace tamearr {

/// beta[i][j] = rank of the degree-j summand in homological position i.
struct BettiTable {
    std::vector<std::map<int, long>> beta;

    int pd() const
    {
        int p = 0;
        for (int i = 0; i < (int)beta.size(); ++i)
            if (!beta[i].empty()) p = i;
        return p;
    }
    long total(int i) const
    {
        long s = 0;
        if (i < (int)beta.size())
            for (auto& [j, b] : beta[i]) s += b;
        return s;
    }
};

template <class K>
struct Resolution {
    BettiTable betti;
    int pd = 0;
    /// matrices[0]: minimal generators inside the ambient free module;
    /// matrices[i>=1]: minimal i-th syzygies, columns over the previous level.
    std::vector<std::vector<MVec<K>>> matrices;
    std::vector<int> ambient_shifts;
};

namespace detail {

/// Remove one redundant generator flagged by a degree-0 entry of a syzygy.
/// Returns false when no unit entry remains.
template <class K>
bool eliminate_one_unit(std::vector<MVec<K>>& gens, std::vector<int>& gen_degs,
                        std::vector<MVec<K>>& syz)
{
    for (size_t s = 0; s < syz.size(); ++s) {
        for (const auto& tm : syz[s].t) {
            if (!tm.m.is_one()) continue;
            int i = tm.comp;
            K c = tm.c;
            // s is homogeneous, so comp i carries exactly this one term in s;
            // clear every comp-i entry of the other syzygies through s
            for (size_t s2 = 0; s2 < syz.size(); ++s2) {
                if (s2 == s) continue;
                std::vector<std::pair<Mono, K>> hits;
                for (const auto& tm2 : syz[s2].t)
                    if (tm2.comp == i) hits.push_back({tm2.m, tm2.c});
                for (const auto& [m2, c2] : hits)
                    syz[s2] = syz[s2] - syz[s].times_term(m2, c2 / c);
            }
            syz.erase(syz.begin() + s);
            gens.erase(gens.begin() + i);
            gen_degs.erase(gen_degs.begin() + i);
            for (auto& v : syz)
                for (auto& t2 : v.t)
                    if (t2.comp > i) t2.comp -= 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Minimal graded free resolution of the submodule generated by gens.
/// Betti row 0 lists minimal generator degrees; pd = index of the last
/// nonzero row (0 for free modules, including the zero module).
template <class K>
Resolution<K> resolve_module(std::vector<MVec<K>> gens, std::vector<int> ambient_shifts,
                             int max_length, const Budget& budget = Budget::unlimited())
{
    Resolution<K> out;
    out.ambient_shifts = ambient_shifts;
    std::vector<MVec<K>> cur;
    for (auto& g : gens)
        if (!g.is_zero()) cur.push_back(std::move(g));
    std::vector<int> cur_shifts = ambient_shifts;

    int level = 0;
    while (true) {
        budget.check();
        if (cur.empty()) {
            if (level == 0) out.pd = 0;
            break;
        }
        auto kr = kernel_of(cur, cur_shifts, budget);
        std::vector<MVec<K>> syz = std::move(kr.kernel);
        std::vector<int> gen_degs;
        for (const auto& g : cur) gen_degs.push_back(g.degree(cur_shifts));

        while (detail::eliminate_one_unit(cur, gen_degs, syz)) budget.check();

        out.betti.beta.emplace_back();
        for (int d : gen_degs) out.betti.beta.back()[d] += 1;
        out.matrices.push_back(cur);
        if (syz.empty()) {
            out.pd = level;
            break;
        }
        if (level + 1 > max_length)
            throw std::logic_error("resolution exceeded max_length (internal bug)");
        cur = std::move(syz);
        cur_shifts = std::move(gen_degs);
        ++level;
    }
    return out;
}

/// Minimal generators only (level 0 of the resolution machinery).
template <class K>
std::vector<MVec<K>> minimal_generators(std::vector<MVec<K>> gens,
                                        const std::vector<int>& ambient_shifts,
                                        const Budget& budget = Budget::unlimited())
{
    std::vector<MVec<K>> cur;
    for (auto& g : gens)
        if (!g.is_zero()) cur.push_back(std::move(g));
    if (cur.empty()) return cur;
    auto kr = kernel_of(cur, ambient_shifts, budget);
    std::vector<MVec<K>> syz = std::move(kr.kernel);
    std::vector<int> gen_degs;
    for (const auto& g : cur) gen_degs.push_back(g.degree(ambient_shifts));
    while (detail::eliminate_one_unit(cur, gen_degs, syz)) budget.check();
    return cur;
}

/// Hilbert series numerator over (1-q)^nvars, read off a (minimal or not)
/// resolution: sum_i (-1)^i sum_j beta_{i,j} q^j.
struct HilbertSeries {
    std::map<int, long long> numer;
    int nvars = 0;

    long long dim_at(int d) const
    {
        long long s = 0;
        for (auto& [j, c] : numer) s += c * dim_poly_degree(nvars, d - j);
        return s;
    }
    friend bool operator==(const HilbertSeries& a, const HilbertSeries& b)
    {
        return a.nvars == b.nvars && a.numer == b.numer;
    }
};

inline HilbertSeries hilbert_from_betti(const BettiTable& bt, int nvars)
{
    HilbertSeries h;
    h.nvars = nvars;
    long sign = 1;
    for (const auto& row : bt.beta) {
        for (auto& [j, b] : row) h.numer[j] += sign * b;
        sign = -sign;
    }
    for (auto it = h.numer.begin(); it != h.numer.end();)
        it = it->second == 0 ? h.numer.erase(it) : std::next(it);
    return h;
}

}  // namespace tamearr

#endif
