#ifndef TAMEARR_MULTI_HPP
#define TAMEARR_MULTI_HPP

#include "tamearr/lattice.hpp"
#include "tamearr/logmodule.hpp"

namespace tamearr {

/// Ziegler restriction (A^H, m^H): the simple restriction with each trace
/// weighted by the number of hyperplanes of A \ {H} colliding onto it.
/// Requires a simple arrangement; |m^H| = n - 1.
Restriction ziegler_restriction(const Arrangement& a, int h);

/// Exponents of a multiarrangement of rank <= 2 (essentialized internally):
/// degreewise search for the lowest generator degree d1, then d2 = |m| - d1.
/// Independent of the Groebner pipeline.
std::vector<int> rank2_exponents(const Arrangement& a);

/// Euler restriction (A^H, m^*): per trace X, m^*(X) is the exponent shared
/// between exp(A_X, m_X) and exp(A_X, m_X - delta_H).
Restriction euler_restriction(const Arrangement& a, int h);

/// Characteristic polynomial of a multiarrangement from the Hilbert series of
/// all the derivation modules: with H(D^p; q) = N_p(q)/(1-q)^l and q = 1 + u,
/// the sum F(t,u) = sum_p N_p(1+u) (tu-1)^p is divisible by u^l and
/// chi(A,m;t) is its u^l-coefficient. At m = 1 this is the Moebius chi, and
/// on free multiarrangements it factors as prod (t - d_i).
template <class K>
IntPoly multi_char_poly(const Arrangement& a, const typename FieldOps<K>::Context& ctx,
                        const Budget& budget = Budget::unlimited())
{
    int l = a.dim;
    // N_p as integer coefficient maps degree -> coefficient
    std::vector<std::map<int, long long>> numers;
    for (int p = 0; p <= l; ++p) {
        auto res = dp_resolution<K>(a, p, ctx, budget);
        numers.push_back(hilbert_from_betti(res.betti, l).numer);
    }

    auto binom = [](long long n, long long k) -> long long {
        if (k < 0 || k > n) return 0;
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };

    // F(t,u) = sum_p sum_j c_{p,j} (1+u)^j (tu-1)^p; coefficient of t^i u^k is
    // sum_p C(p,i)(-1)^{p-i} sum_j c_{p,j} C(j, k-i)
    auto fcoeff = [&](int i, int k) -> long long {
        long long s = 0;
        for (int p = 0; p <= l; ++p) {
            long long cpi = binom(p, i);
            if (cpi == 0) continue;
            long long inner = 0;
            for (const auto& [j, c] : numers[p]) inner += c * binom(j, k - i);
            long long term = cpi * inner;
            s += ((p - i) % 2) ? -term : term;
        }
        return s;
    };

    // sanity: the series really has a limit at q -> 1
    for (int k = 0; k < l; ++k)
        for (int i = 0; i <= k; ++i)
            if (fcoeff(i, k) != 0)
                throw std::logic_error("characteristic polynomial limit does not exist "
                                       "(internal bug)");

    IntPoly chi;
    chi.c.assign(l + 1, 0);
    for (int i = 0; i <= l; ++i) chi.c[i] = fcoeff(i, l);
    return chi;
}

}  // namespace tamearr

#endif
