#include "tamearr/multi.hpp"

#include <algorithm>

namespace tamearr {

Restriction ziegler_restriction(const Arrangement& a, int h)
{
    if (!a.is_simple())
        throw InputError("Ziegler restriction is defined for simple arrangements");
    Restriction r = restrict_arrangement(a, h);
    for (int t = 0; t < r.arr.n(); ++t) r.arr.mult[t] = (int)r.preimage[t].size();
    return r;
}

std::vector<int> rank2_exponents(const Arrangement& a)
{
    auto [ess, trivial] = essentialize(a);
    (void)trivial;
    if (ess.dim > 2) throw InputError("rank2_exponents requires rank at most 2");
    if (ess.dim == 0) return {};
    long total = ess.total_mult();
    if (ess.dim == 1) return {(int)total};
    // lowest degree with a nonzero derivation; rank-2 multiarrangements are
    // free, so the second exponent is forced by the degree count
    for (int d = 0; d <= (int)total / 2; ++d) {
        if (logmodule_dim_oracle<Rational>(ess, 1, d, true, 0) > 0)
            return {d, (int)total - d};
    }
    throw std::logic_error("no derivation found up to |m|/2 (internal bug)");
}

Restriction euler_restriction(const Arrangement& a, int h)
{
    Restriction r = restrict_arrangement(a, h);
    for (int t = 0; t < r.arr.n(); ++t) {
        std::vector<int> through = r.preimage[t];
        through.push_back(h);
        std::sort(through.begin(), through.end());
        Arrangement ax = localize(a, through);
        int hpos = (int)(std::find(through.begin(), through.end(), h) - through.begin());
        std::vector<int> e1 = rank2_exponents(ax);
        std::vector<int> e2 = rank2_exponents(ax.reduced_at(hpos));
        std::sort(e1.begin(), e1.end());
        e2.resize(2, 0);  // deleting the last hyperplane of a rank-2 flat may drop rank
        std::sort(e2.begin(), e2.end());
        // find the decremented exponent; the other one is m^*(X)
        int mstar = -1;
        for (int k = 0; k < 2; ++k) {
            std::vector<int> cand = e1;
            cand[k] -= 1;
            std::sort(cand.begin(), cand.end());
            if (cand == e2) {
                mstar = e1[1 - k];
                break;
            }
        }
        if (mstar < 0)
            throw std::logic_error("Euler multiplicity pairing failed (internal bug)");
        r.arr.mult[t] = mstar;
    }
    return r;
}

}  // namespace tamearr
