#ifndef TAMEARR_TEST_HELPERS_HPP
#define TAMEARR_TEST_HELPERS_HPP

#include "tamearr/poly.hpp"
#include "tamearr/modvec.hpp"

namespace th {

using tamearr::Mono;
using tamearr::Poly;
using tamearr::Rational;
using QP = Poly<Rational>;
using QV = tamearr::MVec<Rational>;

inline QP X(int i, int k = 1) { return QP::monomial(Mono::var(i, k), Rational(1)); }
inline QP C(long n) { return QP::constant(Rational(n)); }

inline QV E(int comp, const QP& p) { return QV::from_poly(comp, p); }

}  // namespace th

#endif
