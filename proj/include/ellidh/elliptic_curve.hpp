#pragma once

// Short Weierstrass curves y^2 = x^3 + s x + t over GF(q), q odd.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ellidh/finite_field.hpp"

namespace ellidh {

/// A rational point; `infinity` marks O and then x, y are meaningless (kept 0).
struct CurvePoint {
    bool infinity = false;
    Elem x = 0;
    Elem y = 0;

    static CurvePoint at_infinity() { return {true, 0, 0}; }
    static CurvePoint affine(Elem x, Elem y) { return {false, x, y}; }

    bool operator==(const CurvePoint&) const = default;
};

/// Canonical order: affine points lexicographically by (x, y) handles, O last.
bool operator<(const CurvePoint& a, const CurvePoint& b);

class Curve {
public:
    /// Throws CurveSingular when 4 s^3 + 27 t^2 = 0.
    Curve(FieldPtr field, Elem s, Elem t);

    const FieldPtr& field_ptr() const { return field_; }
    const Field& field() const { return *field_; }
    Elem s() const { return s_; }
    Elem t() const { return t_; }

    /// x^3 + s x + t.
    Elem rhs(Elem x) const;
    Elem discriminant_factor() const;  // 4 s^3 + 27 t^2

    bool on_curve(const CurvePoint& p) const;
    void check_point(const CurvePoint& p) const;

    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint neg(const CurvePoint& p) const;
    CurvePoint mul(std::int64_t n, const CurvePoint& p) const;

    /// Every rational point, affine points in canonical order followed by O.
    std::vector<CurvePoint> points() const;
    std::size_t point_count() const;

    std::string point_to_string(const CurvePoint& p) const;

private:
    FieldPtr field_;
    Elem s_;
    Elem t_;
};

/// |#E - (q + 1)| <= 2 sqrt(q), checked in integers.
bool satisfies_hasse(std::uint64_t q, std::uint64_t count);

/// A formal sum of points with nonzero multiplicities.
class EllipticDivisor {
public:
    EllipticDivisor() = default;
    /// Merges repeated points and drops zero multiplicities.
    explicit EllipticDivisor(std::vector<std::pair<CurvePoint, std::int64_t>> terms);

    const std::vector<std::pair<CurvePoint, std::int64_t>>& terms() const { return terms_; }
    std::int64_t degree() const;

    EllipticDivisor& add(const CurvePoint& p, std::int64_t multiplicity);

private:
    std::vector<std::pair<CurvePoint, std::int64_t>> terms_;
};

/// Degree zero and group sum equal to O.
bool is_principal(const Curve& curve, const EllipticDivisor& divisor);

/// The Weierstrass isomorphism (x, y) -> (u^2 x, u^3 y); fixes O.
struct Automorphism {
    Elem u = 1;

    CurvePoint apply(const Field& f, const CurvePoint& p) const;
    Automorphism inverse(const Field& f) const { return {f.inv(u)}; }
    bool operator==(const Automorphism&) const = default;
};

/// All units u with u^4 s = s and u^6 t = t, ascending by handle.
std::vector<Automorphism> automorphisms_fixing_o(const Curve& curve);

/// Subset of `automorphisms` mapping the point set onto itself.
std::vector<Automorphism> automorphisms_fixing_set(const Curve& curve, const std::vector<Automorphism>& automorphisms,
                                                   const std::vector<CurvePoint>& points);

}  // namespace ellidh
