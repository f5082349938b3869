#ifndef TAMEARR_LOGMODULE_HPP
#define TAMEARR_LOGMODULE_HPP

#include <functional>
#include <optional>

#include "tamearr/arrangement.hpp"
#include "tamearr/linalg.hpp"
#include "tamearr/resolution.hpp"

namespace tamearr {

/// Lexicographically ordered p-subsets of {0..l-1}; component I of a
/// derivation module element is the coefficient of the basis multivector e_I.
std::vector<std::vector<int>> subsets_of(int l, int p);
int subset_index(const std::vector<std::vector<int>>& subs, const std::vector<int>& s);

/// x_i expressed in coordinates adapted to alpha: y_1 = alpha(x), the other
/// y_k are the original variables except the pivot of alpha.
template <class K>
std::vector<Poly<K>> adapted_substitution(const Form& alpha, int dim,
                                          const typename FieldOps<K>::Context& ctx)
{
    int piv = 0;
    while (alpha[piv] == 0) ++piv;
    std::vector<Poly<K>> subst(dim);
    int k = 1;  // y_1 reserved for alpha
    for (int i = 0; i < dim; ++i) {
        if (i == piv) continue;
        subst[i] = Poly<K>::monomial(Mono::var(k), FieldOps<K>::one(ctx));
        ++k;
    }
    // alpha_piv = 1 after normalization: x_piv = y_1 - sum a_i x_i (i != piv)
    Poly<K> xp = Poly<K>::monomial(Mono::var(0), FieldOps<K>::one(ctx));
    for (int i = 0; i < dim; ++i) {
        if (i == piv || alpha[i] == 0) continue;
        xp = xp - subst[i].scaled(FieldOps<K>::from_rational(alpha[i], ctx));
    }
    subst[piv] = std::move(xp);
    return subst;
}

namespace detail {

/// Contraction (down) or exterior multiplication (up) against the constant
/// covector a: both send S^{C(l,p)} to the neighbouring exterior power with
/// entries (sum over i of sign * a_i * source component).
template <class K>
MVec<K> multivector_step(const MVec<K>& v, const std::vector<K>& a,
                         const std::vector<std::vector<int>>& src_subs,
                         const std::vector<std::vector<int>>& dst_subs, bool down)
{
    MVec<K> out;
    for (const auto& tm : v.t) {
        const auto& I = src_subs[tm.comp];
        if (down) {
            // component J = I \ {i}, sign = (-1)^{position of i in I}
            for (size_t pos = 0; pos < I.size(); ++pos) {
                int i = I[pos];
                if (FieldOps<K>::is_zero(a[i])) continue;
                std::vector<int> J = I;
                J.erase(J.begin() + pos);
                K c = tm.c * a[i];
                if (pos % 2) c = -c;
                out.t.push_back({subset_index(dst_subs, J), tm.m, std::move(c)});
            }
        } else {
            // component I' = I + {i}, sign = (-1)^{position of i in I'}
            for (int i = 0; i < (int)a.size(); ++i) {
                if (FieldOps<K>::is_zero(a[i])) continue;
                if (std::binary_search(I.begin(), I.end(), i)) continue;
                std::vector<int> I2 = I;
                auto it = std::lower_bound(I2.begin(), I2.end(), i);
                size_t pos = it - I2.begin();
                I2.insert(it, i);
                K c = tm.c * a[i];
                if (pos % 2) c = -c;
                out.t.push_back({subset_index(dst_subs, I2), tm.m, std::move(c)});
            }
        }
    }
    out.normalize();
    return out;
}

/// One hyperplane step: inside the span of gens, keep the combinations whose
/// image under the constant-coefficient map lands in alpha^m * S^{rprime}.
template <class K>
std::vector<MVec<K>> intersect_with_condition(const std::vector<MVec<K>>& gens,
                                              const std::vector<MVec<K>>& images,
                                              const Poly<K>& alpha_pow, int rprime,
                                              int ambient_rank, const Budget& budget)
{
    std::vector<MVec<K>> next;
    std::vector<MVec<K>> cols;
    std::vector<int> colmap;
    for (size_t j = 0; j < gens.size(); ++j) {
        if (images[j].is_zero())
            next.push_back(gens[j]);  // already satisfies the condition
        else {
            cols.push_back(images[j]);
            colmap.push_back((int)j);
        }
    }
    int s = (int)cols.size();
    if (s > 0) {
        for (int k = 0; k < rprime; ++k) cols.push_back(MVec<K>::from_poly(k, alpha_pow));
        std::vector<int> rshifts(rprime, 0);
        auto kr = kernel_of(cols, rshifts, budget);
        for (const auto& v : kr.kernel) {
            MVec<K> g;
            for (const auto& tm : v.t) {
                if (tm.comp >= s) continue;
                g = g + gens[colmap[tm.comp]].times_term(tm.m, tm.c);
            }
            if (!g.is_zero()) next.push_back(std::move(g));
        }
    }
    std::vector<int> shifts(ambient_rank, 0);
    return minimal_generators(std::move(next), shifts, budget);
}

template <class K>
std::vector<K> form_coeffs(const Form& f, const typename FieldOps<K>::Context& ctx)
{
    std::vector<K> a;
    a.reserve(f.size());
    for (const auto& x : f) a.push_back(FieldOps<K>::from_rational(x, ctx));
    return a;
}

}  // namespace detail

/// Minimal generators of D^p(A,m) as a submodule of S^{C(l,p)} (shifts 0):
/// theta satisfies, for every H and every (p-1)-subset J, that the contraction
/// coefficient at J is divisible by alpha_H^{m(H)}.
template <class K>
std::vector<MVec<K>> dp_generators(const Arrangement& a, int p,
                                   const typename FieldOps<K>::Context& ctx,
                                   const Budget& budget = Budget::unlimited())
{
    int l = a.dim;
    auto subs = subsets_of(l, p);
    auto dsubs = subsets_of(l, p - 1);
    int r = (int)subs.size();

    std::vector<MVec<K>> gens;
    for (int i = 0; i < r; ++i)
        gens.push_back(MVec<K>::from_poly(i, Poly<K>::constant(FieldOps<K>::one(ctx))));

    for (int h = 0; h < a.n(); ++h) {
        budget.check();
        auto ac = detail::form_coeffs<K>(a.forms[h], ctx);
        Poly<K> apow = poly_pow(form_to_poly<K>(a.forms[h], ctx), a.mult[h], ctx);
        std::vector<MVec<K>> images;
        for (const auto& g : gens)
            images.push_back(detail::multivector_step(g, ac, subs, dsubs, true));
        gens = detail::intersect_with_condition(gens, images, apow, (int)dsubs.size(), r,
                                                budget);
    }
    return gens;
}

/// Minimal generators of Q(A,m) * Omega^p(A,m) as a submodule of S^{C(l,p)}:
/// eta = Q*omega with d(alpha_H) ^ eta divisible by alpha_H^{m(H)} for all H.
/// The degree-d piece of Omega^p corresponds to degree d + |m| here. This is
/// the independent pipeline used to cross-check the D^{l-p} identification.
template <class K>
std::vector<MVec<K>> omega_generators_direct(const Arrangement& a, int p,
                                             const typename FieldOps<K>::Context& ctx,
                                             const Budget& budget = Budget::unlimited())
{
    int l = a.dim;
    auto subs = subsets_of(l, p);
    auto usubs = subsets_of(l, p + 1);
    int r = (int)subs.size();

    std::vector<MVec<K>> gens;
    for (int i = 0; i < r; ++i)
        gens.push_back(MVec<K>::from_poly(i, Poly<K>::constant(FieldOps<K>::one(ctx))));

    for (int h = 0; h < a.n(); ++h) {
        budget.check();
        auto ac = detail::form_coeffs<K>(a.forms[h], ctx);
        Poly<K> apow = poly_pow(form_to_poly<K>(a.forms[h], ctx), a.mult[h], ctx);
        std::vector<MVec<K>> images;
        for (const auto& g : gens)
            images.push_back(detail::multivector_step(g, ac, subs, usubs, false));
        gens = detail::intersect_with_condition(gens, images, apow, (int)usubs.size(), r,
                                                budget);
    }
    return gens;
}

template <class K>
Resolution<K> dp_resolution(const Arrangement& a, int p,
                            const typename FieldOps<K>::Context& ctx,
                            const Budget& budget = Budget::unlimited())
{
    auto gens = dp_generators<K>(a, p, ctx, budget);
    std::vector<int> shifts((int)subsets_of(a.dim, p).size(), 0);
    return resolve_module(std::move(gens), shifts, a.dim + 1, budget);
}

/// Degree-d dimension of D^p (down = true) or Q*Omega^p (down = false) by
/// pure linear algebra on an ansatz: independent of the Groebner pipeline.
template <class K>
long logmodule_dim_oracle(const Arrangement& a, int p, int d, bool down,
                          const typename FieldOps<K>::Context& ctx)
{
    if (d < 0) return 0;
    int l = a.dim;
    auto subs = subsets_of(l, p);
    auto osubs = subsets_of(l, down ? p - 1 : p + 1);
    int r = (int)subs.size();
    auto mons = monomials_of_degree(l, d);
    int md = (int)mons.size();
    int unknowns = r * md;

    RowSpace<K> constraints(unknowns, ctx);
    std::vector<K> row;
    for (int h = 0; h < a.n(); ++h) {
        auto ac = detail::form_coeffs<K>(a.forms[h], ctx);
        auto subst = adapted_substitution<K>(a.forms[h], l, ctx);
        // substituted basis monomials, coefficients indexed by y-monomial
        std::vector<Poly<K>> sub(md);
        for (int i = 0; i < md; ++i)
            sub[i] = poly_substitute(Poly<K>::monomial(mons[i], FieldOps<K>::one(ctx)),
                                     subst, ctx);
        int m = a.mult[h];
        for (int J = 0; J < (int)osubs.size(); ++J) {
            // term coefficient of unknown (I, mono) in the condition at J
            struct Contrib { int comp; K c; };
            std::vector<Contrib> contribs;
            if (down) {
                const auto& Jset = osubs[J];
                for (int i = 0; i < l; ++i) {
                    if (FieldOps<K>::is_zero(ac[i])) continue;
                    if (std::binary_search(Jset.begin(), Jset.end(), i)) continue;
                    std::vector<int> I = Jset;
                    auto it = std::lower_bound(I.begin(), I.end(), i);
                    size_t pos = it - I.begin();
                    I.insert(it, i);
                    K c = ac[i];
                    if (pos % 2) c = -c;
                    contribs.push_back({subset_index(subs, I), std::move(c)});
                }
            } else {
                const auto& I2 = osubs[J];
                for (size_t pos = 0; pos < I2.size(); ++pos) {
                    int i = I2[pos];
                    if (FieldOps<K>::is_zero(ac[i])) continue;
                    std::vector<int> I = I2;
                    I.erase(I.begin() + pos);
                    K c = ac[i];
                    if (pos % 2) c = -c;
                    contribs.push_back({subset_index(subs, I), std::move(c)});
                }
            }
            if (contribs.empty()) continue;
            // require every y-monomial with y_1-exponent < m to vanish
            for (const auto& bad : monomials_of_degree(l, d)) {
                if (bad.e[0] >= m) continue;
                row.assign(unknowns, FieldOps<K>::zero(ctx));
                bool nonzero = false;
                for (const auto& cb : contribs) {
                    for (int g = 0; g < md; ++g) {
                        for (const auto& [ym, yc] : sub[g].t) {
                            if (!(ym == bad)) continue;
                            row[cb.comp * md + g] = row[cb.comp * md + g] + cb.c * yc;
                            nonzero = true;
                        }
                    }
                }
                if (nonzero) constraints.insert(row);
            }
        }
    }
    return unknowns - constraints.rank();
}

/// Graded dimension of the submodule generated by gens (ambient shifts 0).
template <class K>
long module_dim_at(const std::vector<MVec<K>>& gens, int ambient_rank, int nvars, int d,
                   const Budget& budget = Budget::unlimited())
{
    std::vector<MVec<K>> nz;
    for (const auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) return 0;
    std::vector<int> shifts(ambient_rank, 0);
    auto gb = buchberger(nz, shifts, budget);
    return graded_dim_from_gb(gb, shifts, nvars, d);
}

/// Determinant of the coefficient matrix of l derivations (Saito matrix).
template <class K>
Poly<K> saito_determinant(const std::vector<MVec<K>>& gens, int l,
                          const typename FieldOps<K>::Context& ctx)
{
    if ((int)gens.size() != l) throw std::invalid_argument("need exactly l derivations");
    std::vector<std::vector<Poly<K>>> m(l, std::vector<Poly<K>>(l));
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < l; ++i) m[i][j] = gens[j].component(i);
    // Laplace expansion along the first column of each submatrix
    std::function<Poly<K>(const std::vector<int>&, int)> det =
        [&](const std::vector<int>& rows, int col) -> Poly<K> {
        if (rows.size() == 1) return m[rows[0]][col];
        Poly<K> out;
        for (size_t k = 0; k < rows.size(); ++k) {
            if (m[rows[k]][col].is_zero()) continue;
            std::vector<int> rest = rows;
            rest.erase(rest.begin() + k);
            Poly<K> sub = det(rest, col + 1);
            Poly<K> term = m[rows[k]][col] * sub;
            out = k % 2 ? out - term : out + term;
        }
        return out;
    };
    std::vector<int> rows(l);
    for (int i = 0; i < l; ++i) rows[i] = i;
    return det(rows, 0);
}

struct FreenessResult {
    bool free = false;
    std::vector<int> exponents;  // sorted ascending when free
};

/// Freeness of (A,m): pd D^1 = 0 from the minimal resolution, cross-checked
/// by Saito's criterion (determinant of the basis = unit * Q(A,m)).
template <class K>
FreenessResult is_free(const Arrangement& a, const typename FieldOps<K>::Context& ctx,
                       const Budget& budget = Budget::unlimited())
{
    FreenessResult out;
    int l = a.dim;
    if (a.n() == 0) {
        out.free = true;
        out.exponents.assign(l, 0);
        return out;
    }
    auto res = dp_resolution<K>(a, 1, ctx, budget);
    if (res.pd != 0) return out;
    const auto& gens = res.matrices[0];
    if ((int)gens.size() != l)
        throw std::logic_error("free module of unexpected rank (internal bug)");
    Poly<K> det = saito_determinant(gens, l, ctx);
    Poly<K> q = defining_poly<K>(a, ctx);
    if (det.is_zero() || det.degree() != q.degree() ||
        !(det == q.scaled(det.lc() / q.lc())))
        throw std::logic_error("Saito determinant disagrees with resolution (internal bug)");
    out.free = true;
    for (const auto& g : gens) out.exponents.push_back(g.degree(std::vector<int>(subsets_of(l, 1).size(), 0)));
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

/// pd of Omega^p for p = 0..l; entries not needed for the tameness verdict
/// are -1 unless full = true (they are bounded by min(p, l-2) regardless).
struct PdProfile {
    int l = 0;
    std::vector<int> pd_omega;
    bool tame = false;
};

template <class K>
PdProfile pd_profile(const Arrangement& a, const typename FieldOps<K>::Context& ctx,
                     const Budget& budget = Budget::unlimited(), bool full = false)
{
    PdProfile out;
    int l = a.dim;
    out.l = l;
    out.pd_omega.assign(l + 1, -1);
    out.pd_omega[0] = 0;
    out.pd_omega[l] = 0;
    // Omega^p is D^{l-p} up to a degree shift, so pd agrees
    for (int p = 1; p <= l - 1; ++p) {
        bool needed = p <= l - 3;
        if (!needed && !full) continue;
        out.pd_omega[p] = dp_resolution<K>(a, l - p, ctx, budget).pd;
    }
    out.tame = true;
    for (int p = 1; p <= l - 3; ++p)
        if (out.pd_omega[p] > p) out.tame = false;
    return out;
}

template <class K>
bool is_tame(const Arrangement& a, const typename FieldOps<K>::Context& ctx,
             const Budget& budget = Budget::unlimited())
{
    return pd_profile<K>(a, ctx, budget).tame;
}

}  // namespace tamearr

#endif
