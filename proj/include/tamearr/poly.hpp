#ifndef TAMEARR_POLY_HPP
#define TAMEARR_POLY_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tamearr/field.hpp"
#include "tamearr/monomial.hpp"

namespace tamearr {

/// Sparse multivariate polynomial, terms kept in descending degrevlex order,
/// no zero coefficients stored.
template <class K>
struct Poly {
    using Term = std::pair<Mono, K>;
    std::vector<Term> t;

    bool is_zero() const { return t.empty(); }
    const Mono& lm() const { return t.front().first; }
    const K& lc() const { return t.front().second; }
    int degree() const { return t.empty() ? -1 : t.front().first.deg; }

    bool is_homogeneous() const
    {
        for (const auto& [m, c] : t)
            if (m.deg != t.front().first.deg) return false;
        return true;
    }

    static Poly zero() { return Poly{}; }
    static Poly constant(K c)
    {
        Poly p;
        if (!FieldOps<K>::is_zero(c)) p.t.push_back({Mono::one(), std::move(c)});
        return p;
    }
    static Poly monomial(Mono m, K c)
    {
        Poly p;
        if (!FieldOps<K>::is_zero(c)) p.t.push_back({std::move(m), std::move(c)});
        return p;
    }

    void normalize()
    {
        std::sort(t.begin(), t.end(),
                  [](const Term& a, const Term& b) { return drl_greater(a.first, b.first); });
        std::vector<Term> out;
        out.reserve(t.size());
        for (auto& tm : t) {
            if (!out.empty() && out.back().first == tm.first)
                out.back().second += tm.second;
            else
                out.push_back(std::move(tm));
            if (!out.empty() && FieldOps<K>::is_zero(out.back().second)) out.pop_back();
        }
        t = std::move(out);
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        Poly r;
        r.t.reserve(a.t.size() + b.t.size());
        size_t i = 0, j = 0;
        while (i < a.t.size() && j < b.t.size()) {
            if (a.t[i].first == b.t[j].first) {
                K c = a.t[i].second + b.t[j].second;
                if (!FieldOps<K>::is_zero(c)) r.t.push_back({a.t[i].first, std::move(c)});
                ++i; ++j;
            } else if (drl_greater(a.t[i].first, b.t[j].first)) {
                r.t.push_back(a.t[i]); ++i;
            } else {
                r.t.push_back(b.t[j]); ++j;
            }
        }
        for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
        for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
        return r;
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& tm : r.t) tm.second = -tm.second;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly scaled(const K& c) const
    {
        Poly r;
        if (FieldOps<K>::is_zero(c)) return r;
        r.t.reserve(t.size());
        for (const auto& tm : t) r.t.push_back({tm.first, tm.second * c});
        return r;
    }

    Poly times_term(const Mono& m, const K& c) const
    {
        Poly r;
        if (FieldOps<K>::is_zero(c)) return r;
        r.t.reserve(t.size());
        for (const auto& tm : t) r.t.push_back({tm.first * m, tm.second * c});
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        if (a.t.empty() || b.t.empty()) return r;
        r.t.reserve(a.t.size() * b.t.size());
        for (const auto& ta : a.t)
            for (const auto& tb : b.t)
                r.t.push_back({ta.first * tb.first, ta.second * tb.second});
        r.normalize();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.t == b.t; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(int nvars) const
    {
        if (t.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : t) {
            if (!out.empty()) out += " + ";
            out += FieldOps<K>::str(c);
            if (!m.is_one()) out += "*" + m.str(nvars);
        }
        return out;
    }
};

/// Power with explicit field context (needed to manufacture the constant 1).
template <class K>
Poly<K> poly_pow(const Poly<K>& a, int n, const typename FieldOps<K>::Context& ctx)
{
    Poly<K> r = Poly<K>::constant(FieldOps<K>::one(ctx));
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

/// Exact division f / g; throws if g does not divide f.
template <class K>
Poly<K> poly_divexact(const Poly<K>& f, const Poly<K>& g)
{
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly<K> rem = f, q;
    while (!rem.is_zero()) {
        if (!g.lm().divides(rem.lm()))
            throw std::domain_error("poly_divexact: not divisible");
        Mono m = div(rem.lm(), g.lm());
        K c = rem.lc() / g.lc();
        q.t.push_back({m, c});
        rem = rem - g.times_term(m, c);
    }
    std::sort(q.t.begin(), q.t.end(),
              [](const auto& a, const auto& b) { return drl_greater(a.first, b.first); });
    return q;
}

template <class K>
bool poly_divides(const Poly<K>& g, const Poly<K>& f)
{
    if (g.is_zero()) return f.is_zero();
    Poly<K> rem = f;
    while (!rem.is_zero()) {
        if (!g.lm().divides(rem.lm())) return false;
        rem = rem - g.times_term(div(rem.lm(), g.lm()), rem.lc() / g.lc());
    }
    return true;
}

/// Substitute x_i -> linear forms: subst[i] is the image of variable i.
template <class K>
Poly<K> poly_substitute(const Poly<K>& f, const std::vector<Poly<K>>& subst,
                        const typename FieldOps<K>::Context& ctx)
{
    // cache powers of each substituted variable as needed
    std::vector<std::vector<Poly<K>>> powers(subst.size());
    auto get_pow = [&](int var, int k) -> const Poly<K>& {
        auto& tbl = powers[var];
        if (tbl.empty()) tbl.push_back(Poly<K>::constant(FieldOps<K>::one(ctx)));
        while ((int)tbl.size() <= k) tbl.push_back(tbl.back() * subst[var]);
        return tbl[k];
    };
    Poly<K> out;
    for (const auto& [m, c] : f.t) {
        Poly<K> term = Poly<K>::constant(c);
        for (size_t i = 0; i < subst.size(); ++i)
            if (m.e[i]) term = term * get_pow(static_cast<int>(i), m.e[i]);
        out = out + term;
    }
    return out;
}

/// Partial derivative d/dx_i.
template <class K>
Poly<K> poly_derivative(const Poly<K>& f, int var, const typename FieldOps<K>::Context& ctx)
{
    Poly<K> out;
    for (const auto& [m, c] : f.t) {
        if (!m.e[var]) continue;
        Mono m2 = m;
        m2.e[var] -= 1;
        m2.deg -= 1;
        out.t.push_back({m2, c * FieldOps<K>::from_int(m.e[var], ctx)});
    }
    out.normalize();
    return out;
}

}  // namespace tamearr

#endif
