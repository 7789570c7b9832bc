#include "ellidh/riemann_roch.hpp"

#include <algorithm>

#include "ellidh/error.hpp"

namespace ellidh {

namespace {

void trim(XPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const XPoly& p) { return static_cast<int>(p.size()) - 1; }

XPoly xadd(const Field& f, const XPoly& p, const XPoly& q) {
    XPoly out(std::max(p.size(), q.size()), 0);
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i];
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = f.add(out[i], q[i]);
    trim(out);
    return out;
}

XPoly xscale(const Field& f, Elem c, const XPoly& p) {
    XPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = f.mul(c, p[i]);
    trim(out);
    return out;
}

XPoly xmul(const Field& f, const XPoly& p, const XPoly& q) {
    if (p.empty() || q.empty()) return {};
    XPoly out(p.size() + q.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(p[i], q[j]));
    trim(out);
    return out;
}

Elem xeval(const Field& f, const XPoly& p, Elem x) {
    Elem acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
    return acc;
}

using Series = std::vector<Elem>;  // truncated power series, fixed length

Series series_mul(const Field& f, const Series& a, const Series& b) {
    Series out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    return out;
}

Series xpoly_series(const Field& f, const XPoly& p, const Series& xs) {
    Series acc(xs.size(), 0);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = series_mul(f, acc, xs);
        acc[0] = f.add(acc[0], p[i]);
    }
    return acc;
}

Series curve_series(const Field& f, const CurvePoly& p, const LocalExpansion& loc) {
    Series out = xpoly_series(f, p.a, loc.x);
    if (!p.b.empty()) {
        const Series by = series_mul(f, xpoly_series(f, p.b, loc.x), loc.y);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], by[i]);
    }
    return out;
}

int leading_index(const Series& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != 0) return static_cast<int>(i);
    return -1;
}

std::string elem_label(const Field& f, Elem e) { return f.to_string(e); }

RRFunction make_monomial_function(const Monomial& m) {
    RRFunction fn;
    fn.kind = RRKind::Monomial;
    fn.label = monomial_label(m);
    fn.function.num = CurvePoly::monomial(m.i, m.j);
    fn.monomial = m;
    return fn;
}

}  // namespace

CurvePoly CurvePoly::constant(Elem c) {
    CurvePoly p;
    if (c != 0) p.a = {c};
    return p;
}

CurvePoly CurvePoly::monomial(int i, int j) {
    require(i >= 0 && (j == 0 || j == 1), ErrorCode::InvalidArgument, "monomial exponents out of range");
    CurvePoly p;
    XPoly xi(static_cast<std::size_t>(i) + 1, 0);
    xi.back() = 1;
    (j == 0 ? p.a : p.b) = std::move(xi);
    return p;
}

int CurvePoly::pole_order() const {
    require(!is_zero(), ErrorCode::InvalidArgument, "pole order of the zero function");
    int order = a.empty() ? -1 : 2 * degree(a);
    if (!b.empty()) order = std::max(order, 2 * degree(b) + 3);
    return order;
}

CurvePoly poly_add(const Field& f, const CurvePoly& p, const CurvePoly& q) {
    return {xadd(f, p.a, q.a), xadd(f, p.b, q.b)};
}

CurvePoly poly_scale(const Field& f, Elem c, const CurvePoly& p) { return {xscale(f, c, p.a), xscale(f, c, p.b)}; }

CurvePoly poly_sub(const Field& f, const CurvePoly& p, const CurvePoly& q) {
    return poly_add(f, p, poly_scale(f, f.neg(1), q));
}

CurvePoly poly_mul(const Curve& c, const CurvePoly& p, const CurvePoly& q) {
    const Field& f = c.field();
    const XPoly rhs = [&] {
        XPoly r{c.t(), c.s(), 0, 1};
        trim(r);
        return r;
    }();
    CurvePoly out;
    out.a = xadd(f, xmul(f, p.a, q.a), xmul(f, xmul(f, p.b, q.b), rhs));
    out.b = xadd(f, xmul(f, p.a, q.b), xmul(f, p.b, q.a));
    return out;
}

Elem poly_eval(const Field& f, const CurvePoly& p, Elem x, Elem y) {
    return f.add(xeval(f, p.a, x), f.mul(xeval(f, p.b, x), y));
}

LocalExpansion local_expansion(const Curve& c, const CurvePoint& p, std::size_t precision) {
    require(!p.infinity, ErrorCode::InvalidArgument, "local expansion at O is not supported");
    c.check_point(p);
    const Field& f = c.field();
    const std::size_t n = std::max<std::size_t>(precision, 2);
    const Elem alpha = p.x;
    const Elem beta = p.y;
    // rhs(alpha + w) = g0 + g1 w + g2 w^2 + w^3.
    const Elem g0 = c.rhs(alpha);
    const Elem g1 = f.add(f.mul(f.from_int(3), f.mul(alpha, alpha)), c.s());
    const Elem g2 = f.mul(f.from_int(3), alpha);

    LocalExpansion loc{Series(n, 0), Series(n, 0)};
    if (beta != 0) {
        // Uniformizer x - alpha; y = sqrt(rhs(x)) with y(0) = beta.
        loc.x[0] = alpha;
        loc.x[1] = 1;
        Series g(n, 0);
        g[0] = g0;
        g[1] = g1;
        if (n > 2) g[2] = g2;
        if (n > 3) g[3] = 1;
        const Elem inv_two_beta = f.inv(f.mul(f.from_int(2), beta));
        loc.y[0] = beta;
        for (std::size_t i = 1; i < n; ++i) {
            Elem acc = g[i];
            for (std::size_t j = 1; j < i; ++j) acc = f.sub(acc, f.mul(loc.y[j], loc.y[i - j]));
            loc.y[i] = f.mul(acc, inv_two_beta);
        }
    } else {
        // Uniformizer y; x = alpha + w with g1 w + g2 w^2 + w^3 = y^2 and g1 != 0.
        loc.y[1] = 1;
        const Elem inv_g1 = f.inv(g1);
        Series w(n, 0);
        Series t2(n, 0);
        t2[2] = 1;
        for (std::size_t iter = 0; iter < n; ++iter) {
            const Series w2 = series_mul(f, w, w);
            const Series w3 = series_mul(f, w2, w);
            Series next(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                const Elem rest = f.add(f.mul(g2, w2[i]), w3[i]);
                next[i] = f.mul(f.sub(t2[i], rest), inv_g1);
            }
            w = std::move(next);
        }
        loc.x = w;
        loc.x[0] = f.add(loc.x[0], alpha);
    }
    return loc;
}

int valuation(const Curve& c, const CurvePoly& p, const CurvePoint& pt) {
    require(!p.is_zero(), ErrorCode::InvalidArgument, "valuation of the zero function");
    const auto precision = static_cast<std::size_t>(p.pole_order()) + 1;
    const Series s = curve_series(c.field(), p, local_expansion(c, pt, precision));
    const int v = leading_index(s);
    require(v >= 0, ErrorCode::InternalInvariant, "valuation exceeded degree bound");
    return v;
}

int valuation(const Curve& c, const RationalFunction& fn, const CurvePoint& pt) {
    return valuation(c, fn.num, pt) - valuation(c, fn.den, pt);
}

Elem evaluate(const Curve& c, const RationalFunction& fn, const CurvePoint& pt) {
    require(!pt.infinity, ErrorCode::InvalidArgument, "evaluation at O is not supported");
    c.check_point(pt);
    require(!fn.den.is_zero(), ErrorCode::DivisionByZero, "zero denominator");
    const Field& f = c.field();
    if (fn.num.is_zero()) return 0;
    const Elem den = poly_eval(f, fn.den, pt.x, pt.y);
    if (den != 0) return f.div(poly_eval(f, fn.num, pt.x, pt.y), den);

    const auto precision = static_cast<std::size_t>(std::max(fn.num.pole_order(), fn.den.pole_order())) + 1;
    const LocalExpansion loc = local_expansion(c, pt, precision);
    const Series ns = curve_series(f, fn.num, loc);
    const Series ds = curve_series(f, fn.den, loc);
    const int vn = leading_index(ns);
    const int vd = leading_index(ds);
    require(vn >= 0 && vd >= 0, ErrorCode::InternalInvariant, "valuation exceeded degree bound");
    if (vn > vd) return 0;
    require(vn == vd, ErrorCode::PoleEvaluation, "function has a pole at " + c.point_to_string(pt));
    return f.div(ns[static_cast<std::size_t>(vn)], ds[static_cast<std::size_t>(vd)]);
}

std::optional<Monomial> monomial_with_pole_order(int m) {
    if (m < 0 || m == 1) return std::nullopt;
    if (m % 2 == 0) return Monomial{m / 2, 0};
    return Monomial{(m - 3) / 2, 1};
}

std::string monomial_label(const Monomial& m) {
    if (m.i == 0 && m.j == 0) return "1";
    std::string out;
    if (m.i == 1) out += "x";
    if (m.i > 1) out += "x^" + std::to_string(m.i);
    if (m.j == 1) out += "y";
    return out;
}

RRBasis basis_ko(int k) {
    require(k >= 1, ErrorCode::InvalidArgument, "L(kO) needs k >= 1");
    RRBasis basis;
    basis.space = RRSpace::KO;
    basis.k = k;
    for (int m = 0; m <= k; ++m) {
        if (auto mono = monomial_with_pole_order(m)) basis.functions.push_back(make_monomial_function(*mono));
    }
    return basis;
}

RRBasis basis_ko_minus_p(const Curve& c, int k, const CurvePoint& p) {
    require(k >= 2, ErrorCode::InvalidArgument, "L(kO - P) needs k >= 2");
    require(!p.infinity, ErrorCode::InvalidArgument, "L(kO - P) needs an affine point P");
    c.check_point(p);
    const Field& f = c.field();
    const std::string a = elem_label(f, p.x);
    const std::string b = elem_label(f, p.y);

    RRBasis basis;
    basis.space = RRSpace::KOMinusP;
    basis.k = k;
    basis.point = p;
    // Pole orders 2i + 2 (shifted x) and 2i + 3 (shifted y); interleave ascending.
    for (int m = 2; m <= k; ++m) {
        RRFunction fn;
        const int i = (m % 2 == 0) ? (m - 2) / 2 : (m - 3) / 2;
        if (m % 2 == 0) {
            fn.kind = RRKind::ShiftedX;
            fn.label = "(x-" + a + ")" + (i == 0 ? "" : monomial_label({i, 0}));
            fn.function.num = poly_mul(c, CurvePoly{{f.neg(p.x), 1}, {}}, CurvePoly::monomial(i, 0));
        } else {
            fn.kind = RRKind::ShiftedY;
            fn.label = (i == 0 ? "" : monomial_label({i, 0})) + "(y-" + b + ")";
            fn.function.num = poly_mul(c, CurvePoly{p.y == 0 ? XPoly{} : XPoly{f.neg(p.y)}, {1}},
                                       CurvePoly::monomial(i, 0));
        }
        require(fn.pole_order_at_o() == m && fn.pole_order_at_o() <= k, ErrorCode::InternalInvariant,
                "L(kO - P) basis element outside L(kO)");
        require(evaluate(c, fn.function, p) == 0, ErrorCode::InternalInvariant,
                "L(kO - P) basis element does not vanish at P");
        basis.functions.push_back(std::move(fn));
    }
    return basis;
}

RRFunction extension_function(const Curve& c, int k, const CurvePoint& p) {
    require(k >= 1, ErrorCode::InvalidArgument, "L(kO + P) needs k >= 1");
    c.check_point(p);
    if (p.infinity) return make_monomial_function(*monomial_with_pole_order(k + 1));

    const Field& f = c.field();
    RRFunction fn;
    fn.kind = RRKind::PoleAtP;
    fn.function.den = CurvePoly{{f.neg(p.x), 1}, {}};
    const std::string a = elem_label(f, p.x);
    if (p.y != 0) {
        fn.function.num = CurvePoly{{p.y}, {1}};
        fn.label = "(y+" + elem_label(f, p.y) + ")/(x-" + a + ")";
    } else {
        fn.function.num = CurvePoly{{}, {1}};
        fn.label = "y/(x-" + a + ")";
    }
    require(valuation(c, fn.function, p) == -1, ErrorCode::InternalInvariant, "extension function lacks a simple pole at P");
    require(fn.pole_order_at_o() <= k, ErrorCode::InternalInvariant, "extension function pole at O exceeds k");
    return fn;
}

RRBasis basis_ko_plus_p(const Curve& c, int k, const CurvePoint& p) {
    RRBasis basis = basis_ko(k);
    basis.space = RRSpace::KOPlusP;
    basis.point = p;
    basis.functions.push_back(extension_function(c, k, p));
    return basis;
}

Elem evaluate(const Curve& c, const RRFunction& fn, const CurvePoint& p) { return evaluate(c, fn.function, p); }

Vector ev_vector(const Curve& c, const RRFunction& fn, const std::vector<CurvePoint>& points) {
    Vector out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(evaluate(c, fn, p));
    return out;
}

Matrix ev_matrix(const Curve& c, const RRBasis& basis, const std::vector<CurvePoint>& points) {
    Matrix m(0, points.size());
    for (const auto& fn : basis.functions) m.append_row(ev_vector(c, fn, points));
    return m;
}

}  // namespace ellidh
