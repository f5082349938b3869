#ifndef TAMEARR_FIELD_HPP
#define TAMEARR_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace tamearr {

using Rational = mpq_class;

inline Rational rat_from_string(const std::string& s)
{
    auto slash = s.find('/');
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(s));
    } else {
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
        q = mpq_class(num, den);
    }
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Prime field element; the modulus travels with the value so computations
/// over different primes cannot be mixed silently.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(uint64_t v, uint64_t p) : v_(v % p), p_(p) {}

    static Fp from_int(long n, uint64_t p)
    {
        long r = n % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return Fp(static_cast<uint64_t>(r), p);
    }

    static Fp from_rational(const Rational& q, uint64_t p)
    {
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class nm = num % pz; if (nm < 0) nm += pz;
        mpz_class dm = den % pz; if (dm < 0) dm += pz;
        if (dm == 0) throw std::domain_error("denominator vanishes mod p");
        Fp n(nm.get_ui(), p), d(dm.get_ui(), p);
        return n / d;
    }

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b)
    {
        a.check(b);
        uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp(s, a.p_, 0);
    }
    friend Fp operator-(const Fp& a, const Fp& b)
    {
        a.check(b);
        uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
        return Fp(s, a.p_, 0);
    }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, 0); }
    friend Fp operator*(const Fp& a, const Fp& b)
    {
        a.check(b);
        return Fp(static_cast<uint64_t>((__uint128_t)a.v_ * b.v_ % a.p_), a.p_, 0);
    }
    friend Fp operator/(const Fp& a, const Fp& b)
    {
        a.check(b);
        return a * b.inverse();
    }
    Fp& operator+=(const Fp& b) { *this = *this + b; return *this; }
    Fp& operator-=(const Fp& b) { *this = *this - b; return *this; }
    Fp& operator*=(const Fp& b) { *this = *this * b; return *this; }
    Fp& operator/=(const Fp& b) { *this = *this / b; return *this; }

    Fp inverse() const
    {
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid
        int64_t t = 0, newt = 1;
        int64_t r = static_cast<int64_t>(p_), newr = static_cast<int64_t>(v_);
        while (newr != 0) {
            int64_t q = r / newr;
            int64_t tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (t < 0) t += static_cast<int64_t>(p_);
        return Fp(static_cast<uint64_t>(t), p_, 0);
    }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    Fp(uint64_t v, uint64_t p, int) : v_(v), p_(p) {}
    void check(const Fp& b) const
    {
        if (p_ != b.p_) throw std::logic_error("mixed F_p moduli");
    }
    uint64_t v_;
    uint64_t p_;
};

// Uniform field interface used by the templated algebra code.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    using Context = int;  // no runtime state needed
    static Rational zero(const Context&) { return Rational(0); }
    static Rational one(const Context&) { return Rational(1); }
    static Rational from_int(long n, const Context&) { return Rational(n); }
    static Rational from_rational(const Rational& q, const Context&) { return q; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static std::string str(const Rational& a) { return rat_to_string(a); }
};

template <>
struct FieldOps<Fp> {
    using Context = uint64_t;  // the prime
    static Fp zero(const Context& p) { return Fp(0, p); }
    static Fp one(const Context& p) { return Fp(1, p); }
    static Fp from_int(long n, const Context& p) { return Fp::from_int(n, p); }
    static Fp from_rational(const Rational& q, const Context& p) { return Fp::from_rational(q, p); }
    static bool is_zero(const Fp& a) { return a.is_zero(); }
    static std::string str(const Fp& a) { return a.str(); }
};

/// Default prime for fast mode; > 2^15 as required, < 2^31 so products fit easily.
constexpr uint64_t kDefaultPrime = 1073741789ULL;

struct FieldMode {
    bool exact = true;       // true: Q, false: F_p
    uint64_t prime = kDefaultPrime;

    static FieldMode rationals() { return FieldMode{true, 0}; }
    static FieldMode prime_field(uint64_t p) { return FieldMode{false, p}; }
    std::string describe() const
    {
        return exact ? std::string("Q") : ("Fp:" + std::to_string(prime));
    }
};

}  // namespace tamearr

#endif
