#ifndef TAMEARR_GROEBNER_HPP
#define TAMEARR_GROEBNER_HPP

#include <chrono>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tamearr/modvec.hpp"

namespace tamearr {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("computation budget exceeded") {}
};

/// Wall-clock budget shared across a computation; check() throws when spent.
struct Budget {
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static Budget unlimited() { return Budget{}; }
    static Budget from_ms(long ms)
    {
        Budget b;
        b.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return b;
    }
    void check() const
    {
        if (deadline && std::chrono::steady_clock::now() > *deadline) throw BudgetExceeded{};
    }
};

/// Full normal form of v against basis (leading-term reduction, all terms).
template <class K>
MVec<K> normal_form(MVec<K> w, const std::vector<MVec<K>>& basis)
{
    MVec<K> result;
    while (!w.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.lead_comp() == w.lead_comp() && g.lead_mono().divides(w.lead_mono())) {
                w = w - g.times_term(div(w.lead_mono(), g.lead_mono()),
                                     w.lead_coeff() / g.lead_coeff());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result.t.push_back(w.t.front());
            w.t.erase(w.t.begin());
        }
    }
    return result;
}

namespace detail {

template <class K>
MVec<K> make_monic(MVec<K> v)
{
    if (v.is_zero()) return v;
    K inv = v.lead_coeff();
    for (auto& tm : v.t) tm.c = tm.c / inv;
    return v;
}

struct SPair {
    int i, j;
    Mono lcm_m;
    int deg;  // degree of the S-polynomial (shift-adjusted)
    friend bool operator<(const SPair& a, const SPair& b) { return a.deg > b.deg; }  // min-heap
};

}  // namespace detail

/// Buchberger's algorithm for submodules of a graded free module,
/// position-over-term with degrevlex underneath. Inputs must be homogeneous
/// w.r.t. shifts. Returns the reduced Groebner basis (monic, tail-reduced).
template <class K>
std::vector<MVec<K>> buchberger(std::vector<MVec<K>> gens, const std::vector<int>& shifts,
                                const Budget& budget = Budget::unlimited())
{
    std::vector<MVec<K>> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(detail::make_monic(std::move(g)));
    }

    std::priority_queue<detail::SPair> pairs;
    auto push_pairs_for = [&](int jnew) {
        for (int i = 0; i < jnew; ++i) {
            if (basis[i].is_zero()) continue;
            if (basis[i].lead_comp() != basis[jnew].lead_comp()) continue;
            Mono l = lcm(basis[i].lead_mono(), basis[jnew].lead_mono());
            pairs.push({i, jnew, l, l.deg + shifts[basis[i].lead_comp()]});
        }
    };
    for (int j = 1; j < (int)basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        budget.check();
        detail::SPair pr = pairs.top();
        pairs.pop();
        const auto& gi = basis[pr.i];
        const auto& gj = basis[pr.j];
        if (gi.is_zero() || gj.is_zero()) continue;

        // chain criterion (strict form)
        bool skip = false;
        for (int k = 0; k < (int)basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j || basis[k].is_zero()) continue;
            if (basis[k].lead_comp() != gi.lead_comp()) continue;
            if (!basis[k].lead_mono().divides(pr.lcm_m)) continue;
            if (lcm(basis[k].lead_mono(), gi.lead_mono()) == pr.lcm_m) continue;
            if (lcm(basis[k].lead_mono(), gj.lead_mono()) == pr.lcm_m) continue;
            skip = true;
        }
        if (skip) continue;

        MVec<K> s = gi.times_term(div(pr.lcm_m, gi.lead_mono()), gi.lead_coeff())
                  - gj.times_term(div(pr.lcm_m, gj.lead_mono()), gj.lead_coeff());
        // leading coefficients are 1 after make_monic, but keep it general
        MVec<K> nf = normal_form(std::move(s), basis);
        if (!nf.is_zero()) {
            basis.push_back(detail::make_monic(std::move(nf)));
            push_pairs_for((int)basis.size() - 1);
        }
    }

    // minimal: drop elements whose lead term is divisible by another lead
    std::vector<MVec<K>> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || basis[j].is_zero()) continue;
            if (basis[j].lead_comp() != basis[i].lead_comp()) continue;
            if (!basis[j].lead_mono().divides(basis[i].lead_mono())) continue;
            if (basis[j].lead_mono() == basis[i].lead_mono() && j > i) continue;
            redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // reduced: tail-reduce each against the others
    std::vector<MVec<K>> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MVec<K>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MVec<K> r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(detail::make_monic(std::move(r)));
    }
    std::sort(reduced.begin(), reduced.end(), [](const MVec<K>& a, const MVec<K>& b) {
        return MVec<K>::term_before(a.t.front(), b.t.front());
    });
    return reduced;
}

/// Kernel and image of the map S^t -> S^r sending e_i to gens[i], computed by
/// the elimination lift S^r (+) S^t with the ambient components dominating.
template <class K>
struct KernelResult {
    std::vector<MVec<K>> kernel;        // generators of ker, elements of S^t
    std::vector<MVec<K>> image_gb;      // reduced GB of the image, elements of S^r
    std::vector<int> kernel_shifts;     // = degrees of gens (Schreyer shifts)
};

template <class K>
KernelResult<K> kernel_of(const std::vector<MVec<K>>& gens, const std::vector<int>& ambient_shifts,
                          const Budget& budget = Budget::unlimited())
{
    int r = (int)ambient_shifts.size();
    int t = (int)gens.size();
    std::vector<int> shifts = ambient_shifts;
    std::vector<MVec<K>> lifted;
    lifted.reserve(t);
    for (int i = 0; i < t; ++i) {
        if (gens[i].is_zero())
            throw std::invalid_argument("kernel_of: drop zero generators first");
        int d = gens[i].degree(ambient_shifts);
        MVec<K> v = gens[i];
        K one = gens[i].lead_coeff() / gens[i].lead_coeff();
        v.t.push_back({r + i, Mono::one(), one});
        v.normalize();
        shifts.push_back(d);
        lifted.push_back(std::move(v));
    }
    auto gb = buchberger(std::move(lifted), shifts, budget);

    KernelResult<K> out;
    out.kernel_shifts.assign(shifts.begin() + r, shifts.end());
    for (const auto& g : gb) {
        if (g.lead_comp() >= r) {
            out.kernel.push_back(g.slice(r, r + t));
        } else {
            out.image_gb.push_back(g.slice(0, r));
        }
    }
    return out;
}

/// Dimension of the degree-d piece of the submodule with the given reduced GB
/// (counts monomials divisible by some lead term; shifts are ambient shifts).
template <class K>
long graded_dim_from_gb(const std::vector<MVec<K>>& gb, const std::vector<int>& shifts,
                        int nvars, int d)
{
    long count = 0;
    for (int comp = 0; comp < (int)shifts.size(); ++comp) {
        int dm = d - shifts[comp];
        if (dm < 0) continue;
        for (const auto& m : monomials_of_degree(nvars, dm)) {
            for (const auto& g : gb) {
                if (g.lead_comp() == comp && g.lead_mono().divides(m)) {
                    ++count;
                    break;
                }
            }
        }
    }
    return count;
}

}  // namespace tamearr

#endif
