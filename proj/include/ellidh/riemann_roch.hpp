#pragma once

// Functions on y^2 = x^3 + s x + t and bases of L(kO), L(kO - P), L(kO + P).
//
// Every function is stored as a quotient of two "curve polynomials"
// a(x) + b(x) y, reduced modulo the curve equation. The pole order at O of
// a(x) + b(x) y is max(2 deg a, 2 deg b + 3); the two candidates have
// different parity, so it never cancels. Valuations at affine points come
// from power-series expansions in a local uniformizer (x - alpha when
// beta != 0, y at 2-torsion points).

#include <optional>
#include <string>
#include <vector>

#include "ellidh/elliptic_curve.hpp"
#include "ellidh/linalg.hpp"

namespace ellidh {

using XPoly = std::vector<Elem>;  // degree-ascending, no trailing zeros

struct CurvePoly {
    XPoly a;  // coefficient of y^0
    XPoly b;  // coefficient of y^1

    static CurvePoly constant(Elem c);
    static CurvePoly monomial(int i, int j);  // x^i y^j, j in {0, 1}
    bool is_zero() const { return a.empty() && b.empty(); }
    /// Pole order at O; throws InvalidArgument for the zero polynomial.
    int pole_order() const;
    bool operator==(const CurvePoly&) const = default;
};

CurvePoly poly_add(const Field& f, const CurvePoly& p, const CurvePoly& q);
CurvePoly poly_sub(const Field& f, const CurvePoly& p, const CurvePoly& q);
CurvePoly poly_scale(const Field& f, Elem c, const CurvePoly& p);
/// Product reduced with y^2 = x^3 + s x + t.
CurvePoly poly_mul(const Curve& c, const CurvePoly& p, const CurvePoly& q);
Elem poly_eval(const Field& f, const CurvePoly& p, Elem x, Elem y);

/// Local expansions of x and y in a uniformizer at an affine point.
struct LocalExpansion {
    std::vector<Elem> x;
    std::vector<Elem> y;
};

LocalExpansion local_expansion(const Curve& c, const CurvePoint& p, std::size_t precision);

/// Order of vanishing of a nonzero curve polynomial at an affine point.
int valuation(const Curve& c, const CurvePoly& f, const CurvePoint& p);

struct RationalFunction {
    CurvePoly num;
    CurvePoly den = CurvePoly::constant(1);

    int pole_order_at_o() const { return num.pole_order() - den.pole_order(); }
};

/// Valuation at an affine point (negative for a pole).
int valuation(const Curve& c, const RationalFunction& f, const CurvePoint& p);

/// Exact value at an affine point, resolving removable 0/0 forms locally.
/// Throws PoleEvaluation at a pole.
Elem evaluate(const Curve& c, const RationalFunction& f, const CurvePoint& p);

struct Monomial {
    int i = 0;  // x exponent
    int j = 0;  // y exponent, 0 or 1
    int pole_order() const { return 2 * i + 3 * j; }
    bool operator==(const Monomial&) const = default;
};

/// The monomial x^i y^j with 2i + 3j = m, if any (none only for m = 1).
std::optional<Monomial> monomial_with_pole_order(int m);

enum class RRKind { Monomial, ShiftedX, ShiftedY, PoleAtP };

struct RRFunction {
    RRKind kind = RRKind::Monomial;
    std::string label;
    RationalFunction function;
    std::optional<Monomial> monomial;  // set for RRKind::Monomial

    int pole_order_at_o() const { return function.pole_order_at_o(); }
};

enum class RRSpace { KO, KOMinusP, KOPlusP };

struct RRBasis {
    RRSpace space = RRSpace::KO;
    int k = 0;
    std::optional<CurvePoint> point;
    std::vector<RRFunction> functions;

    std::size_t size() const { return functions.size(); }
};

/// {x^i y^j : 2i + 3j <= k}, ascending pole order. Requires k >= 1.
RRBasis basis_ko(int k);

/// {(x - alpha) x^i : i <= (k-2)/2} and {x^i (y - beta) : i <= (k-3)/2}; size k - 1.
RRBasis basis_ko_minus_p(const Curve& c, int k, const CurvePoint& p);

/// basis_ko(k) plus one function with a simple pole at P (P affine) or the
/// monomial of pole order k + 1 (P = O).
RRBasis basis_ko_plus_p(const Curve& c, int k, const CurvePoint& p);

/// The function spanning L(kO + P) modulo L(kO).
RRFunction extension_function(const Curve& c, int k, const CurvePoint& p);

Elem evaluate(const Curve& c, const RRFunction& f, const CurvePoint& p);
Vector ev_vector(const Curve& c, const RRFunction& f, const std::vector<CurvePoint>& points);
/// One row per basis function.
Matrix ev_matrix(const Curve& c, const RRBasis& basis, const std::vector<CurvePoint>& points);

std::string monomial_label(const Monomial& m);

}  // namespace ellidh
