#ifndef TAMEARR_MODVEC_HPP
#define TAMEARR_MODVEC_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "tamearr/poly.hpp"

namespace tamearr {

/// Element of a free module S^r. Terms are (component, monomial, coefficient),
/// ordered position-over-term: smaller component index ranks higher, ties by
/// descending degrevlex.
template <class K>
struct MVec {
    struct Term {
        int comp;
        Mono m;
        K c;
        friend bool operator==(const Term& a, const Term& b)
        {
            return a.comp == b.comp && a.m == b.m && a.c == b.c;
        }
    };
    std::vector<Term> t;

    bool is_zero() const { return t.empty(); }
    int lead_comp() const { return t.front().comp; }
    const Mono& lead_mono() const { return t.front().m; }
    const K& lead_coeff() const { return t.front().c; }

    static bool term_before(const Term& a, const Term& b)
    {
        if (a.comp != b.comp) return a.comp < b.comp;
        return drl_greater(a.m, b.m);
    }

    void normalize()
    {
        std::sort(t.begin(), t.end(), term_before);
        std::vector<Term> out;
        out.reserve(t.size());
        for (auto& tm : t) {
            if (!out.empty() && out.back().comp == tm.comp && out.back().m == tm.m)
                out.back().c += tm.c;
            else
                out.push_back(std::move(tm));
            if (!out.empty() && FieldOps<K>::is_zero(out.back().c)) out.pop_back();
        }
        t = std::move(out);
    }

    friend MVec operator+(const MVec& a, const MVec& b)
    {
        MVec r;
        r.t.reserve(a.t.size() + b.t.size());
        size_t i = 0, j = 0;
        while (i < a.t.size() && j < b.t.size()) {
            const auto& ta = a.t[i];
            const auto& tb = b.t[j];
            if (ta.comp == tb.comp && ta.m == tb.m) {
                K c = ta.c + tb.c;
                if (!FieldOps<K>::is_zero(c)) r.t.push_back({ta.comp, ta.m, std::move(c)});
                ++i; ++j;
            } else if (term_before(ta, tb)) {
                r.t.push_back(ta); ++i;
            } else {
                r.t.push_back(tb); ++j;
            }
        }
        for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
        for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
        return r;
    }

    MVec operator-() const
    {
        MVec r = *this;
        for (auto& tm : r.t) tm.c = -tm.c;
        return r;
    }
    friend MVec operator-(const MVec& a, const MVec& b) { return a + (-b); }

    MVec times_term(const Mono& m, const K& c) const
    {
        MVec r;
        if (FieldOps<K>::is_zero(c)) return r;
        r.t.reserve(t.size());
        for (const auto& tm : t) r.t.push_back({tm.comp, tm.m * m, tm.c * c});
        return r;
    }

    MVec scaled(const K& c) const { return times_term(Mono::one(), c); }

    MVec times_poly(const Poly<K>& p) const
    {
        MVec r;
        for (const auto& [m, c] : p.t) r = r + times_term(m, c);
        return r;
    }

    /// Degree of a homogeneous element w.r.t. component shifts; -1 for zero.
    int degree(const std::vector<int>& shifts) const
    {
        if (t.empty()) return -1;
        return t.front().m.deg + shifts[t.front().comp];
    }

    bool is_homogeneous(const std::vector<int>& shifts) const
    {
        if (t.empty()) return true;
        int d = degree(shifts);
        for (const auto& tm : t)
            if (tm.m.deg + shifts[tm.comp] != d) return false;
        return true;
    }

    /// Component polynomial.
    Poly<K> component(int comp) const
    {
        Poly<K> p;
        for (const auto& tm : t)
            if (tm.comp == comp) p.t.push_back({tm.m, tm.c});
        std::sort(p.t.begin(), p.t.end(),
                  [](const auto& a, const auto& b) { return drl_greater(a.first, b.first); });
        return p;
    }

    static MVec from_poly(int comp, const Poly<K>& p)
    {
        MVec v;
        v.t.reserve(p.t.size());
        for (const auto& [m, c] : p.t) v.t.push_back({comp, m, c});
        return v;
    }

    /// Keep components in [lo, hi), renumbering them to start at 0.
    MVec slice(int lo, int hi) const
    {
        MVec r;
        for (const auto& tm : t)
            if (tm.comp >= lo && tm.comp < hi) r.t.push_back({tm.comp - lo, tm.m, tm.c});
        return r;
    }

    /// Shift all component indices by delta.
    MVec shifted_comps(int delta) const
    {
        MVec r = *this;
        for (auto& tm : r.t) tm.comp += delta;
        return r;
    }

    friend bool operator==(const MVec& a, const MVec& b) { return a.t == b.t; }

    std::string str(int nvars) const
    {
        if (t.empty()) return "0";
        std::string out;
        for (const auto& tm : t) {
            if (!out.empty()) out += " + ";
            out += FieldOps<K>::str(tm.c) + "*" + tm.m.str(nvars) + "*e" + std::to_string(tm.comp);
        }
        return out;
    }
};

}  // namespace tamearr

#endif
