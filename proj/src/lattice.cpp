#include "tamearr/lattice.hpp"

#include <algorithm>
#include <map>

#include "tamearr/linalg.hpp"

namespace tamearr {

int Lattice::find(const std::vector<int>& hyps) const
{
    for (int i = 0; i < (int)flats.size(); ++i)
        if (flats[i].hyps == hyps) return i;
    return -1;
}

namespace {

// closure of a hyperplane subset: all hyperplanes whose form lies in the span
std::vector<int> closure(const Arrangement& a, const std::vector<int>& hyps)
{
    RowSpace<Rational> rs(a.dim);
    for (int h : hyps) rs.insert(a.forms[h]);
    std::vector<int> out;
    for (int h = 0; h < a.n(); ++h)
        if (rs.contains(a.forms[h])) out.push_back(h);
    return out;
}

}  // namespace

Lattice intersection_lattice(const Arrangement& a, long max_flats)
{
    Lattice l;
    l.dim = a.dim;
    std::map<std::vector<int>, int> seen;

    Flat v;
    v.codim = 0;
    l.flats.push_back(v);
    seen[{}] = 0;

    // BFS by codimension: extend each flat by one independent hyperplane
    size_t head = 0;
    while (head < l.flats.size()) {
        Flat cur = l.flats[head];  // copy, vector may reallocate
        ++head;
        for (int h = 0; h < a.n(); ++h) {
            if (std::binary_search(cur.hyps.begin(), cur.hyps.end(), h)) continue;
            std::vector<int> ext = cur.hyps;
            ext.push_back(h);
            std::sort(ext.begin(), ext.end());
            std::vector<int> cl = closure(a, ext);
            if (seen.count(cl)) continue;
            if ((long)l.flats.size() >= max_flats)
                throw InputError("intersection lattice exceeds flat cap");
            Flat f;
            f.hyps = cl;
            f.codim = cur.codim + 1;
            seen[std::move(cl)] = (int)l.flats.size();
            l.flats.push_back(std::move(f));
        }
    }

    l.by_codim.assign(a.dim + 1, {});
    for (int i = 0; i < (int)l.flats.size(); ++i)
        l.by_codim[l.flats[i].codim].push_back(i);

    // Moebius values by the defining recursion over the containment order:
    // Y <= X iff hyps(Y) subset of hyps(X); flats are listed codim-ascending
    for (int i = 0; i < (int)l.flats.size(); ++i) {
        long long mu = i == 0 ? 1 : 0;
        for (int j = 0; j < i; ++j) {
            if (l.flats[j].codim >= l.flats[i].codim) continue;
            if (std::includes(l.flats[i].hyps.begin(), l.flats[i].hyps.end(),
                              l.flats[j].hyps.begin(), l.flats[j].hyps.end()))
                mu -= l.flats[j].mobius;
        }
        l.flats[i].mobius = mu;
    }
    return l;
}

int IntPoly::degree() const
{
    for (int i = (int)c.size() - 1; i >= 0; --i)
        if (c[i] != 0) return i;
    return -1;
}

long long IntPoly::eval(long long t) const
{
    long long v = 0;
    for (int i = (int)c.size() - 1; i >= 0; --i) v = v * t + c[i];
    return v;
}

void IntPoly::trim()
{
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::from_roots(const std::vector<int>& roots)
{
    IntPoly p;
    p.c = {1};
    for (int r : roots) {
        // multiply by (t - r)
        std::vector<long long> q(p.c.size() + 1, 0);
        for (size_t i = 0; i < p.c.size(); ++i) {
            q[i + 1] += p.c[i];
            q[i] -= (long long)r * p.c[i];
        }
        p.c = std::move(q);
    }
    return p;
}

IntPoly IntPoly::divide_linear(long long r) const
{
    int d = degree();
    if (d < 1) throw std::domain_error("divide_linear on constant polynomial");
    IntPoly q;
    q.c.assign(d, 0);
    long long carry = 0;
    for (int i = d; i >= 1; --i) {
        carry = c[i] + carry;
        q.c[i - 1] = carry;
        carry *= r;
    }
    if (carry + c[0] != 0) throw std::domain_error("linear factor does not divide");
    return q;
}

bool operator==(const IntPoly& a, const IntPoly& b)
{
    IntPoly x = a, y = b;
    x.trim();
    y.trim();
    return x.c == y.c;
}

std::string IntPoly::str() const
{
    int d = degree();
    if (d < 0) return "0";
    std::string out;
    for (int i = d; i >= 0; --i) {
        if (c[i] == 0) continue;
        long long v = c[i];
        if (out.empty()) {
            if (v < 0) { out += "-"; v = -v; }
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        if (v != 1 || i == 0) out += std::to_string(v);
        if (i > 0) {
            if (v != 1) out += "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPoly characteristic_polynomial(const Lattice& l)
{
    IntPoly chi;
    chi.c.assign(l.dim + 1, 0);
    for (const auto& f : l.flats) chi.c[l.dim - f.codim] += f.mobius;
    return chi;
}

IntPoly characteristic_polynomial(const Arrangement& a)
{
    return characteristic_polynomial(intersection_lattice(a));
}

IntPoly reduced_char_poly(const IntPoly& chi)
{
    return chi.divide_linear(1);
}

std::vector<long long> unsigned_coeffs(const IntPoly& chi)
{
    int d = chi.degree();
    std::vector<long long> b(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        long long v = chi.coeff(i);
        b[i] = ((d - i) % 2 == 0) ? v : -v;
    }
    return b;
}

}  // namespace tamearr
