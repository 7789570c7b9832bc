#include <doctest.h>

#include <random>

#include "ellidh/error.hpp"
#include "ellidh/finite_geometry.hpp"

using namespace ellidh;

namespace {

Curve fixture() { return Curve(Field::make(5), 1, 1); }

// Three points of PG(2, q) are collinear iff their determinant vanishes.
bool collinear(const Field& f, const Vector& a, const Vector& b, const Vector& c) {
    auto m = [&](Elem x, Elem y) { return f.mul(x, y); };
    // Cofactor expansion along a.
    const Elem t0 = m(a[0], f.sub(m(b[1], c[2]), m(b[2], c[1])));
    const Elem t1 = m(a[1], f.sub(m(b[0], c[2]), m(b[2], c[0])));
    const Elem t2 = m(a[2], f.sub(m(b[0], c[1]), m(b[1], c[0])));
    const Elem d = f.add(f.sub(t0, t1), t2);
    return d == 0;
}

// (n;3)-set oracle in the plane: no 4 collinear points and some 3 collinear.
bool planar_nk_oracle(const Field& f, const std::vector<Vector>& pts) {
    const std::size_t n = pts.size();
    bool some_three = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!collinear(f, pts[i], pts[j], pts[k])) continue;
                some_three = true;
                for (std::size_t l = k + 1; l < n; ++l)
                    if (collinear(f, pts[i], pts[j], pts[l])) return false;
            }
    return some_three;
}

}  // namespace

TEST_CASE("phi_k coordinates") {
    auto c = fixture();
    CHECK(phi_k(c, 3, CurvePoint::affine(4, 3)).coords == Vector{1, 4, 3});
    CHECK(phi_k(c, 4, CurvePoint::affine(4, 3)).coords == Vector{1, 4, 3, 1});
    CHECK(phi_k(c, 3, CurvePoint::at_infinity()).coords == Vector{0, 0, 1});
    CHECK_THROWS_AS(elliptic_point_set(c, 2), Error);
}

TEST_CASE("projective space has (q^k - 1)/(q - 1) normalized points") {
    auto f = Field::make(5);
    const auto pg = projective_space(*f, 3);
    CHECK(pg.size() == 31);
    CHECK(pg.front().coords == Vector{0, 0, 1});
    CHECK(projective_space(*Field::make(3), 4).size() == 40);
}

TEST_CASE("tracks in the plane") {
    auto f = Field::make(5);
    // Three collinear points plus one off the line.
    std::vector<Vector> pts = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    CHECK(is_track(*f, pts, 3));
    // A frame: no three collinear, so no hyperplane holds 3 points.
    std::vector<Vector> frame = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    CHECK_FALSE(is_track(*f, frame, 3));
    // Repeated projective point.
    std::vector<Vector> dup = {{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    CHECK_FALSE(is_track(*f, dup, 3));
}

TEST_CASE("(n;3)-set test agrees with a collinearity oracle") {
    std::mt19937 rng(29);
    auto f = Field::make(5);
    const auto pg = projective_space(*f, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ProjPoint> pts = pg;
        std::shuffle(pts.begin(), pts.end(), rng);
        pts.resize(5 + trial % 4);
        std::vector<Vector> raw;
        for (const auto& p : pts) raw.push_back(p.coords);
        const PointSet s(3, pts);
        CHECK(is_nk_set(*f, s) == planar_nk_oracle(*f, raw));
    }
}

TEST_CASE("the elliptic point set for k = 3 is a long track and an (n;k)-set") {
    auto c = fixture();
    const Field& f = c.field();
    const PointSet eps = elliptic_point_set(c, 3);
    CHECK(eps.size() == 9);
    CHECK(is_track(f, eps));
    CHECK(is_nk_set(f, eps));
    const LongTrackReport r = verify_long_track(f, eps);
    CHECK(r.is_track);
    CHECK(r.is_nk_set);
    // Removing any point leaves an (8;3)-set that the point re-extends.
    for (std::size_t i = 0; i < eps.size(); ++i) {
        std::vector<ProjPoint> rest = eps.points();
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        const PointSet s(3, rest);
        CHECK(extends_as_nk_set(f, s, eps.points()[i]));
    }
    CHECK_THROWS_AS(verify_long_track(f, PointSet(3, {eps.points().begin(), eps.points().begin() + 8})), Error);
}

TEST_CASE("extensions of the elliptic point set") {
    auto c = fixture();
    const Field& f = c.field();
    const PointSet eps = elliptic_point_set(c, 3);
    const Extensions ext = extensions(f, eps);
    for (const auto& q : ext.nk_set_extensions) {
        std::vector<ProjPoint> more = eps.points();
        more.push_back(q);
        CHECK(is_nk_set(f, PointSet(3, more)));
    }
    for (const auto& q : ext.track_extensions) {
        std::vector<Vector> more;
        for (const auto& p : eps.points()) more.push_back(p.coords);
        more.push_back(q.coords);
        CHECK(is_track(f, more, 3));
    }
    CHECK(ext.nk_set_extensions.size() <= ext.track_extensions.size());
}

TEST_CASE("deep holes of the k = 3 residue code are exactly the track words") {
    auto c = fixture();
    const EvalSet d = EvalSet::all_but_o(c);
    CodeAnalysis a(residue_code(c, d, 3));
    REQUIRE(a.covering_radius().radius == 2);
    std::mt19937 rng(31);
    int deep = 0, total = 0;
    for (int i = 0; i < 300; ++i) {
        Word u(8);
        for (auto& e : u) e = rng() % 5;
        if (is_zero(a.code().syndrome(u))) continue;
        const TrackEquivalence t = deep_hole_track_equiv(a, u);
        deep += t.deep_hole;
        ++total;
    }
    CHECK(total > 250);
    CHECK(deep > 0);
    CHECK(deep < total);
}
