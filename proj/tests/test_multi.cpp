#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamearr/multi.hpp"

#include "arr_helpers.hpp"

using namespace tamearr;
using namespace th;

TEST_CASE("ziegler restriction") {
    // xyz(x+y+z) onto z=0: no collisions
    auto r = ziegler_restriction(generic_arr(3, 4), 2);
    CHECK(r.arr.n() == 3);
    CHECK(r.arr.mult == std::vector<int>{1, 1, 1});
    CHECK(r.arr.total_mult() == 3);

    // xy(x-y)z onto x=0: y and x-y collide
    auto r2 = ziegler_restriction(mk(3, {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}}), 0);
    std::vector<int> m = r2.arr.mult;
    std::sort(m.begin(), m.end());
    CHECK(m == std::vector<int>{1, 2});
    CHECK(r2.arr.total_mult() == 3);  // |m^H| = n - 1

    // 21-hyperplane rank-5 example onto x1=0: 12 traces, |m^H| = 20
    auto r3 = ziegler_restriction(edelman_reiner(), 0);
    CHECK(r3.arr.n() == 12);
    CHECK(r3.arr.total_mult() == 20);

    CHECK_THROWS_AS(ziegler_restriction(mk(2, {{1, 0}, {0, 1}}, {2, 1}), 0), InputError);
}

TEST_CASE("rank-2 exponents") {
    CHECK(rank2_exponents(mk(2, {{1, 0}, {0, 1}, {1, -1}})) == std::vector<int>{1, 2});
    CHECK(rank2_exponents(mk(2, {{1, 0}, {0, 1}, {1, -1}}, {2, 2, 2})) ==
          std::vector<int>{3, 3});
    CHECK(rank2_exponents(mk(2, {{1, 0}, {0, 1}}, {5, 1})) == std::vector<int>{1, 5});
    CHECK(rank2_exponents(mk(1, {{1}}, {4})) == std::vector<int>{4});
    // non-essential input is essentialized first
    CHECK(rank2_exponents(mk(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})) ==
          std::vector<int>{1, 2});
    CHECK_THROWS_AS(rank2_exponents(boolean_arr(3)), InputError);

    // exponents sum to |m| and are realized by a Saito basis
    auto a = mk(2, {{1, 0}, {0, 1}, {1, -1}}, {3, 1, 2});
    auto e = rank2_exponents(a);
    CHECK(e[0] + e[1] == 6);
    auto fr = is_free<Rational>(a, 0);  // internal Saito cross-check
    CHECK(fr.free);
    CHECK(fr.exponents == e);
}

TEST_CASE("euler restriction") {
    // simple arrangements restrict to multiplicity one
    for (int h = 0; h < 5; ++h) {
        auto er = euler_restriction(generic_arr(3, 5), h);
        for (int m : er.arr.mult) CHECK(m == 1);
    }
    auto er4 = euler_restriction(braidlike4(), 0);
    for (int m : er4.arr.mult) CHECK(m == 1);

    // multi case: localization with exponents (3,3) vs (2,3) yields 3
    auto a = mk(3, {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}}, {2, 2, 2, 1});
    auto er2 = euler_restriction(a, 0);
    // traces on x=0: {y (from y and x-y), z}; the rank-2 flat y=x=0 carries
    // the x^2 y^2 (x-y)^2 localization
    REQUIRE(er2.arr.n() == 2);
    int ty = er2.trace_of[1];
    int tz = er2.trace_of[3];
    CHECK(er2.arr.mult[ty] == 3);
    CHECK(er2.arr.mult[tz] == 1);

    // Boolean rank-2 flats: m^* = m(L)
    auto b = mk(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 4, 2});
    auto er3 = euler_restriction(b, 0);
    std::vector<int> m = er3.arr.mult;
    std::sort(m.begin(), m.end());
    CHECK(m == std::vector<int>{2, 4});
}

TEST_CASE("multiarrangement characteristic polynomial") {
    // reduces to the Moebius characteristic polynomial at multiplicity one
    for (const Arrangement& a :
         {boolean_arr(3), generic_arr(3, 4), generic_arr(4, 6), generic_arr(2, 4)}) {
        CHECK(multi_char_poly<Rational>(a, 0) == characteristic_polynomial(a));
    }

    // factors over the exponents on free multiarrangements
    CHECK(multi_char_poly<Rational>(mk(1, {{1}}, {2}), 0) == IntPoly::from_roots({2}));
    CHECK(multi_char_poly<Rational>(mk(2, {{1, 0}, {0, 1}}, {2, 2}), 0) ==
          IntPoly::from_roots({2, 2}));
    CHECK(multi_char_poly<Rational>(mk(2, {{1, 0}, {0, 1}, {1, -1}}, {2, 2, 2}), 0) ==
          IntPoly::from_roots({3, 3}));
    auto a = mk(2, {{1, 0}, {0, 1}, {1, -1}}, {3, 1, 2});
    CHECK(multi_char_poly<Rational>(a, 0) == IntPoly::from_roots(rank2_exponents(a)));

    // rank-3 free multiarrangement: Boolean with weights
    auto b = mk(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {2, 3, 1});
    auto fb = is_free<Rational>(b, 0);
    REQUIRE(fb.free);
    CHECK(multi_char_poly<Rational>(b, 0) == IntPoly::from_roots(fb.exponents));

    // non-free multi still yields a monic integer polynomial with chi-like top
    auto g = mk(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {2, 1, 1, 1});
    auto chi = multi_char_poly<Rational>(g, 0);
    CHECK(chi.degree() == 3);
    CHECK(chi.coeff(3) == 1);
    CHECK(chi.coeff(2) == -5);  // second coefficient is -|m|
}
