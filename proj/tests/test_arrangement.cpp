#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamearr/arrangement.hpp"
#include "tamearr/lattice.hpp"

#include "arr_helpers.hpp"

using namespace tamearr;
using namespace th;

TEST_CASE("parsing and validation") {
    Arrangement a = parse_arrangement(
        R"({"dim":3, "hyperplanes":[[1,0,0],[0,1,0],[0,0,1]]})");
    CHECK(a.n() == 3);
    CHECK(a.is_essential());
    CHECK(a.is_simple());

    CHECK_THROWS_AS(parse_arrangement(R"({"dim":2, "hyperplanes":[[1,0],[2,0]]})"),
                    InputError);
    CHECK_THROWS_AS(parse_arrangement(R"({"dim":2, "hyperplanes":[[0,0]]})"), InputError);
    CHECK_THROWS_AS(parse_arrangement(R"({"dim":2, "hyperplanes":[[1,0,0]]})"), InputError);
    CHECK_THROWS_AS(parse_arrangement("not json"), InputError);

    Arrangement m = parse_arrangement(
        R"({"dim":2, "field":{"Fp":101}, "hyperplanes":[[1,0],[0,1],[1,"-1/2"]],
            "multiplicities":[2,2,1]})");
    CHECK(m.total_mult() == 5);
    CHECK(!m.field.exact);
    CHECK(m.field.prime == 101);
    CHECK(m.forms[2][1] == Rational(-1, 2));

    // round trip
    Arrangement m2 = parse_arrangement(arrangement_to_json(m));
    CHECK(m2.forms == m.forms);
    CHECK(m2.mult == m.mult);
    CHECK(m2.field.prime == 101);
}

TEST_CASE("lattice of small arrangements") {
    auto l3 = intersection_lattice(boolean_arr(3));
    CHECK(l3.by_codim[1].size() == 3);
    CHECK(l3.by_codim[2].size() == 3);
    CHECK(l3.by_codim[3].size() == 1);

    auto g46 = intersection_lattice(generic_arr(4, 6));
    CHECK(g46.by_codim[1].size() == 6);
    CHECK(g46.by_codim[2].size() == 15);
    CHECK(g46.by_codim[3].size() == 20);
    CHECK(g46.by_codim[4].size() == 1);
}

TEST_CASE("characteristic polynomials") {
    CHECK(characteristic_polynomial(boolean_arr(3)) == IntPoly::from_roots({1, 1, 1}));
    CHECK(characteristic_polynomial(braidlike4()) == IntPoly::from_roots({1, 2, 3, 4}));

    IntPoly g34 = characteristic_polynomial(generic_arr(3, 4));
    IntPoly expect;
    expect.c = {-3, 6, -4, 1};  // t^3 - 4t^2 + 6t - 3
    CHECK(g34 == expect);

    // empty arrangement: chi = t^dim
    Arrangement e;
    e.dim = 3;
    IntPoly chie = characteristic_polynomial(e);
    CHECK(chie.degree() == 3);
    CHECK(chie.eval(5) == 125);

    // chi(1) = 0 and chi0 well defined
    IntPoly chi0 = reduced_char_poly(g34);
    CHECK(chi0.degree() == 2);
    CHECK(g34.eval(1) == 0);

    auto b = unsigned_coeffs(g34);
    CHECK(b == std::vector<long long>{3, 6, 4, 1});
}

TEST_CASE("deletion restriction identity") {
    for (const Arrangement& a : {generic_arr(3, 5), braidlike4(), ex163()}) {
        for (int h = 0; h < a.n(); ++h) {
            IntPoly del = characteristic_polynomial(a.deleted(h));
            auto r = restrict_arrangement(a, h);
            IntPoly res = characteristic_polynomial(r.arr);
            IntPoly whole = characteristic_polynomial(a);
            IntPoly diff;
            diff.c.assign(std::max(del.c.size(), res.c.size()), 0);
            for (size_t i = 0; i < del.c.size(); ++i) diff.c[i] += del.c[i];
            for (size_t i = 0; i < res.c.size(); ++i) diff.c[i] -= res.c[i];
            CHECK(whole == diff);
        }
    }
}

TEST_CASE("restriction") {
    // Boolean l=3 onto z=0 is Boolean l=2
    auto r = restrict_arrangement(boolean_arr(3), 2);
    CHECK(r.arr.n() == 2);
    CHECK(r.arr.dim == 2);
    CHECK(r.arr.is_essential());

    // restriction of x y z w u (x+y+z+w+u)(x+y+z) onto x+y+z=0:
    // traces collide pairwise, leaving 6 distinct hyperplanes
    Arrangement a = ex163();
    auto r2 = restrict_arrangement(a, 6);
    CHECK(r2.arr.n() == 6);
    CHECK(r2.arr.dim == 4);
    // x+y+z+w+u restricts to w+u, z restricts to z = -(x+y)
    CHECK(!is_irreducible(r2.arr));

    // collision count: xy(x-y)z with H: x=0 gives traces y (twice) and z
    Arrangement c = mk(3, {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}});
    auto r3 = restrict_arrangement(c, 0);
    CHECK(r3.arr.n() == 2);
    std::vector<size_t> sizes = {r3.preimage[0].size(), r3.preimage[1].size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2});
}

TEST_CASE("localization and essentialization") {
    Arrangement b3 = boolean_arr(3);
    Arrangement loc = localize(b3, {0, 1});  // flat x=y=0
    CHECK(loc.n() == 2);
    auto [ess, trivial] = essentialize(loc);
    CHECK(ess.dim == 2);
    CHECK(trivial == 1);
    CHECK(ess.is_essential());

    // rank-2 localization with 3 hyperplanes inside l=5
    Arrangement a = ex163();
    Arrangement loc2 = localize(a, {0, 1, 6});  // x, y, x+y+z? ranks: x,y,x+y+z has rank 3
    CHECK(forms_rank(loc2.forms, 5) == 3);
    Arrangement loc3 = localize(mk(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {1, 1, 0, 0, 0}}),
                                {0, 1, 2});
    auto [e2, t2] = essentialize(loc3);
    CHECK(e2.dim == 2);
    CHECK(t2 == 3);
    CHECK(e2.n() == 3);
}

TEST_CASE("cone and product") {
    // cone of {x=0, x=1} is x z (x-z) in K^2
    auto c = cone_arrangement({{{Rational(1)}, Rational(0)}, {{Rational(1)}, Rational(1)}}, 1);
    CHECK(c.dim == 2);
    CHECK(c.n() == 3);
    CHECK(characteristic_polynomial(c) == characteristic_polynomial(
              mk(2, {{1, 0}, {0, 1}, {1, -1}})));

    auto p = product_arrangement(boolean_arr(1), boolean_arr(1));
    CHECK(p.dim == 2);
    CHECK(p.n() == 2);
    CHECK(characteristic_polynomial(p) == IntPoly::from_roots({1, 1}));
}

TEST_CASE("structure flags") {
    CHECK(is_generic_arrangement(generic_arr(4, 6)));
    CHECK(is_irreducible(generic_arr(4, 6)));
    CHECK(is_generic_arrangement(boolean_arr(3)));  // n = l, all pairs independent
    CHECK(!is_irreducible(boolean_arr(3)));
    CHECK(!is_generic_arrangement(braidlike4()));
    CHECK(is_irreducible(braidlike4()));
}

TEST_CASE("defining polynomial") {
    Arrangement a = mk(2, {{1, 0}, {0, 1}, {1, -1}}, {2, 1, 1});
    auto q = defining_poly<Rational>(a, 0);
    CHECK(q.degree() == 4);
    CHECK(q.is_homogeneous());
    // x^2 y (x-y) = x^3 y - x^2 y^2
    auto x = Poly<Rational>::monomial(Mono::var(0), Rational(1));
    auto y = Poly<Rational>::monomial(Mono::var(1), Rational(1));
    CHECK(q == x * x * x * y - x * x * y * y);
}
