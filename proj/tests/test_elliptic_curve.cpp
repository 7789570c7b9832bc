#include <doctest.h>

#include "ellidh/elliptic_curve.hpp"
#include "ellidh/error.hpp"

using namespace ellidh;

namespace {

// Counts solutions of y^2 = x^3 + s x + t directly, without the sqrt tables.
std::size_t brute_count(const Field& f, Elem s, Elem t) {
    std::size_t n = 1;
    for (Elem x = 0; x < f.order(); ++x)
        for (Elem y = 0; y < f.order(); ++y)
            if (f.mul(y, y) == f.add(f.add(f.mul(x, f.mul(x, x)), f.mul(s, x)), t)) ++n;
    return n;
}

}  // namespace

TEST_CASE("fixture curve over GF(5) has the nine listed points") {
    Curve c(Field::make(5), 1, 1);
    const auto pts = c.points();
    const std::vector<CurvePoint> expected = {
        CurvePoint::affine(0, 1), CurvePoint::affine(0, 4), CurvePoint::affine(2, 1),
        CurvePoint::affine(2, 4), CurvePoint::affine(3, 1), CurvePoint::affine(3, 4),
        CurvePoint::affine(4, 2), CurvePoint::affine(4, 3), CurvePoint::at_infinity()};
    CHECK(pts == expected);
    CHECK(satisfies_hasse(5, pts.size()));
}

TEST_CASE("point counts match brute force and the Hasse bound") {
    for (auto fp : {Field::make(5), Field::make(7), Field::make(3, 2)}) {
        for (Elem s = 0; s < fp->order(); ++s) {
            for (Elem t = 0; t < fp->order(); ++t) {
                const Elem disc = fp->add(fp->mul(4, fp->pow(s, 3)), fp->mul(fp->from_int(27), fp->mul(t, t)));
                if (disc == 0) {
                    CHECK_THROWS_AS(Curve(fp, s, t), Error);
                    continue;
                }
                Curve c(fp, s, t);
                CHECK(c.point_count() == brute_count(*fp, s, t));
                CHECK(satisfies_hasse(fp->order(), c.point_count()));
            }
        }
    }
}

TEST_CASE("group law is an abelian group on small curves") {
    for (auto [fp, s, t] : {std::tuple{Field::make(5), 1u, 1u}, {Field::make(7), 3u, 2u}, {Field::make(3, 2), 1u, 3u}}) {
        Curve c(fp, s, t);
        const auto pts = c.points();
        const auto o = CurvePoint::at_infinity();
        for (const auto& p : pts) {
            CHECK(c.add(p, o) == p);
            CHECK(c.add(p, c.neg(p)) == o);
            CHECK(c.mul(static_cast<std::int64_t>(pts.size()), p) == o);
            for (const auto& q : pts) {
                const auto pq = c.add(p, q);
                CHECK(c.on_curve(pq));
                CHECK(pq == c.add(q, p));
                for (const auto& r : pts) CHECK(c.add(pq, r) == c.add(p, c.add(q, r)));
            }
        }
    }
}

TEST_CASE("principal divisors: degree zero and sum O") {
    Curve c(Field::make(5), 1, 1);
    const auto p = CurvePoint::affine(0, 1);
    const auto o = CurvePoint::at_infinity();
    // div(x) = (0,1) + (0,4) - 2 O.
    CHECK(is_principal(c, EllipticDivisor({{p, 1}, {CurvePoint::affine(0, 4), 1}, {o, -2}})));
    CHECK_FALSE(is_principal(c, EllipticDivisor({{p, 1}, {o, -1}})));
    CHECK_FALSE(is_principal(c, EllipticDivisor({{p, 1}})));
    EllipticDivisor d;
    d.add(p, 2).add(p, -2);
    CHECK(d.terms().empty());
}

TEST_CASE("automorphisms fixing O") {
    // s, t both nonzero: only u = +-1.
    Curve c(Field::make(5), 1, 1);
    auto auts = automorphisms_fixing_o(c);
    REQUIRE(auts.size() == 2);
    CHECK(auts[1].apply(c.field(), CurvePoint::affine(0, 1)) == CurvePoint::affine(0, 4));
    // j = 1728 over GF(5): y^2 = x^3 + x has u^4 = 1, four automorphisms.
    Curve j1728(Field::make(5), 1, 0);
    CHECK(automorphisms_fixing_o(j1728).size() == 4);
    for (const auto& a : automorphisms_fixing_o(j1728))
        for (const auto& p : j1728.points()) CHECK(j1728.on_curve(a.apply(j1728.field(), p)));
    // Removing one point of a +-y pair breaks the negation symmetry.
    std::vector<CurvePoint> d = {CurvePoint::affine(0, 1), CurvePoint::affine(2, 1), CurvePoint::affine(2, 4)};
    CHECK(automorphisms_fixing_set(c, auts, d).size() == 1);
}
