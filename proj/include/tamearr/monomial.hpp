#ifndef TAMEARR_MONOMIAL_HPP
#define TAMEARR_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace tamearr {

constexpr int kMaxVars = 8;

/// Exponent vector with cached total degree. The ring's variable count is
/// carried by the surrounding context; unused slots stay zero.
struct Mono {
    std::array<uint16_t, kMaxVars> e{};
    int deg = 0;

    static Mono one() { return Mono{}; }
    static Mono var(int i, int k = 1)
    {
        Mono m;
        m.e[i] = static_cast<uint16_t>(k);
        m.deg = k;
        return m;
    }

    bool is_one() const { return deg == 0; }

    friend Mono operator*(const Mono& a, const Mono& b)
    {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
        r.deg = a.deg + b.deg;
        return r;
    }

    bool divides(const Mono& b) const
    {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }

    /// b / a, caller guarantees divisibility.
    friend Mono div(const Mono& b, const Mono& a)
    {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = b.e[i] - a.e[i];
        r.deg = b.deg - a.deg;
        return r;
    }

    friend Mono lcm(const Mono& a, const Mono& b)
    {
        Mono r;
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }

    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

    std::string str(int nvars) const
    {
        static const char* names[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
        if (deg == 0) return "1";
        std::string out;
        for (int i = 0; i < nvars; ++i) {
            if (!e[i]) continue;
            if (!out.empty()) out += "*";
            out += names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
        return out;
    }
};

/// degrevlex: compare degree first; ties broken by the *last* coordinate in
/// which the exponents differ, smaller exponent there wins.
inline bool drl_less(const Mono& a, const Mono& b)
{
    if (a.deg != b.deg) return a.deg < b.deg;
    for (int i = kMaxVars - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

inline bool drl_greater(const Mono& a, const Mono& b) { return drl_less(b, a); }

/// All monomials of total degree d in the first nvars variables, in a fixed
/// (descending degrevlex) order.
inline std::vector<Mono> monomials_of_degree(int nvars, int d)
{
    std::vector<Mono> out;
    Mono cur;
    // recursive enumeration
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur.e[var] = static_cast<uint16_t>(remaining);
            cur.deg = d;
            out.push_back(cur);
            cur.e[var] = 0;
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            cur.e[var] = static_cast<uint16_t>(k);
            self(self, var + 1, remaining - k);
        }
        cur.e[var] = 0;
    };
    if (d < 0) return out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Mono::one());
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), drl_greater);
    return out;
}

inline long dim_poly_degree(int nvars, int d)
{
    // dim of degree-d piece of a polynomial ring = C(d + nvars - 1, nvars - 1)
    if (d < 0) return 0;
    if (nvars == 0) return d == 0 ? 1 : 0;
    long r = 1;
    for (int i = 1; i <= nvars - 1; ++i) r = r * (d + i) / i;
    return r;
}

}  // namespace tamearr

#endif
