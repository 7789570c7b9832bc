#include <doctest.h>

#include "ellidh/error.hpp"
#include "ellidh/riemann_roch.hpp"

using namespace ellidh;

namespace {

Curve fixture() { return Curve(Field::make(5), 1, 1); }

}  // namespace

TEST_CASE("L(kO) monomials in ascending pole order") {
    for (int k = 1; k <= 9; ++k) {
        const RRBasis b = basis_ko(k);
        CHECK(b.size() == static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < b.size(); ++i) {
            const int expected = i == 0 ? 0 : static_cast<int>(i) + 1;
            CHECK(b.functions[i].pole_order_at_o() == expected);
        }
    }
    CHECK(basis_ko(5).functions[4].label == "xy");
    CHECK(basis_ko(6).functions[5].label == "x^3");
    CHECK_FALSE(monomial_with_pole_order(1).has_value());
    CHECK(monomial_with_pole_order(7) == Monomial{2, 1});
}

TEST_CASE("pole order never cancels in a(x) + b(x) y") {
    auto c = fixture();
    CurvePoly p;
    p.a = {1, 2, 3};   // 3x^2 + 2x + 1: pole order 4
    p.b = {4};         // 4y: pole order 3
    CHECK(p.pole_order() == 4);
    // y * y reduces to x^3 + x + 1.
    const CurvePoly yy = poly_mul(c, CurvePoly::monomial(0, 1), CurvePoly::monomial(0, 1));
    CHECK(yy.a == XPoly{1, 1, 0, 1});
    CHECK(yy.b.empty());
}

TEST_CASE("valuations at affine points") {
    auto c = fixture();
    // x - 4 vanishes simply at (4,2) and (4,3).
    CurvePoly xm4;
    xm4.a = {1, 1};
    CHECK(valuation(c, xm4, CurvePoint::affine(4, 2)) == 1);
    CHECK(valuation(c, xm4, CurvePoint::affine(0, 1)) == 0);
    // Tangent line at (0,1): y - 1 - x/2 has a double zero there (2y y' = 3x^2 + 1).
    CurvePoly tangent;
    tangent.a = {c.field().neg(1), c.field().neg(c.field().inv(2))};
    tangent.b = {1};
    CHECK(valuation(c, tangent, CurvePoint::affine(0, 1)) == 2);
}

TEST_CASE("valuation at a 2-torsion point uses y as uniformizer") {
    // y^2 = x^3 + x over GF(5) has (0,0), (2,0), (3,0).
    Curve c(Field::make(5), 1, 0);
    const auto p = CurvePoint::affine(0, 0);
    CHECK(valuation(c, CurvePoly::monomial(0, 1), p) == 1);
    CHECK(valuation(c, CurvePoly::monomial(1, 0), p) == 2);
    // y / x has a simple pole; evaluating it must fail.
    RationalFunction yx{CurvePoly::monomial(0, 1), CurvePoly::monomial(1, 0)};
    CHECK(valuation(c, yx, p) == -1);
    CHECK_THROWS_AS(evaluate(c, yx, p), Error);
    // x / y vanishes there: a removable 0/0.
    RationalFunction xy{CurvePoly::monomial(1, 0), CurvePoly::monomial(0, 1)};
    CHECK(evaluate(c, xy, p) == 0);
}

TEST_CASE("L(kO - P) is spanned by k - 1 functions vanishing at P") {
    auto c = fixture();
    for (const auto& p : c.points()) {
        if (p.infinity) continue;
        for (int k = 2; k <= 7; ++k) {
            const RRBasis b = basis_ko_minus_p(c, k, p);
            CHECK(b.size() == static_cast<std::size_t>(k - 1));
            for (const auto& fn : b.functions) {
                CHECK(evaluate(c, fn, p) == 0);
                CHECK(fn.pole_order_at_o() <= k);
            }
            // Independent as functions on E \ {O}.
            CHECK(rank(c.field(), ev_matrix(c, b, [&] {
                      std::vector<CurvePoint> aff;
                      for (const auto& q : c.points())
                          if (!q.infinity) aff.push_back(q);
                      return aff;
                  }())) == b.size());
        }
    }
}

TEST_CASE("extension function has a simple pole at P") {
    auto c = fixture();
    for (const auto& p : c.points()) {
        for (int k = 2; k <= 6; ++k) {
            const RRFunction h = extension_function(c, k, p);
            if (p.infinity) {
                CHECK(h.pole_order_at_o() == k + 1);
                CHECK(h.kind == RRKind::Monomial);
            } else {
                CHECK(valuation(c, h.function, p) == -1);
                CHECK(h.pole_order_at_o() <= k);
            }
        }
    }
    CHECK(extension_function(c, 2, CurvePoint::affine(4, 3)).label == "(y+3)/(x-4)");
}

TEST_CASE("evaluation vectors of x and y on E \\ {O}") {
    auto c = fixture();
    std::vector<CurvePoint> aff = c.points();
    aff.pop_back();
    const RRBasis b = basis_ko(3);
    CHECK(ev_vector(c, b.functions[1], aff) == Vector{0, 0, 2, 2, 3, 3, 4, 4});
    CHECK(ev_vector(c, b.functions[2], aff) == Vector{1, 4, 1, 4, 1, 4, 2, 3});
}
