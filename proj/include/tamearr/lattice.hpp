#ifndef TAMEARR_LATTICE_HPP
#define TAMEARR_LATTICE_HPP

#include <vector>

#include "tamearr/arrangement.hpp"

namespace tamearr {

/// Flat of the intersection lattice, identified by the full (closed) set of
/// hyperplanes containing it.
struct Flat {
    std::vector<int> hyps;  // sorted
    int codim = 0;
    long long mobius = 0;
};

struct Lattice {
    int dim = 0;
    std::vector<Flat> flats;                  // flats[0] = ambient space V
    std::vector<std::vector<int>> by_codim;   // stratum -> flat indices

    int find(const std::vector<int>& hyps) const;
};

Lattice intersection_lattice(const Arrangement& a, long max_flats = 500000);

/// Integer polynomial in one variable t, coefficients ascending by power.
struct IntPoly {
    std::vector<long long> c;

    int degree() const;
    long long eval(long long t) const;
    long long coeff(int i) const { return i < (int)c.size() ? c[i] : 0; }
    void trim();
    static IntPoly from_roots(const std::vector<int>& roots);
    /// Synthetic division by (t - r); throws if the remainder is nonzero.
    IntPoly divide_linear(long long r) const;
    friend bool operator==(const IntPoly& a, const IntPoly& b);
    std::string str() const;
};

/// Characteristic polynomial chi(A;t) via the Moebius sum over L(A).
IntPoly characteristic_polynomial(const Arrangement& a);
IntPoly characteristic_polynomial(const Lattice& l);

/// chi0 = chi/(t-1) for nonempty A.
IntPoly reduced_char_poly(const IntPoly& chi);

/// b_i with chi = sum (-1)^{deg-i} b_i t^i (all b_i >= 0 for arrangements).
std::vector<long long> unsigned_coeffs(const IntPoly& chi);

}  // namespace tamearr

#endif
