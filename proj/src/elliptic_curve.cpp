#include "ellidh/elliptic_curve.hpp"

#include <algorithm>
#include <set>

#include "ellidh/error.hpp"

namespace ellidh {

bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity != b.infinity) return b.infinity;
    if (a.infinity) return false;
    return std::pair(a.x, a.y) < std::pair(b.x, b.y);
}

Curve::Curve(FieldPtr field, Elem s, Elem t) : field_(std::move(field)), s_(s), t_(t) {
    require(field_ != nullptr, ErrorCode::InvalidArgument, "null field");
    field_->check(s_);
    field_->check(t_);
    require(discriminant_factor() != 0, ErrorCode::CurveSingular,
            "curve y^2 = x^3 + " + field_->to_string(s_) + "x + " + field_->to_string(t_) + " is singular");
}

Elem Curve::rhs(Elem x) const {
    const Field& f = *field_;
    return f.add(f.add(f.mul(f.mul(x, x), x), f.mul(s_, x)), t_);
}

Elem Curve::discriminant_factor() const {
    const Field& f = *field_;
    const Elem s3 = f.mul(f.mul(s_, s_), s_);
    const Elem t2 = f.mul(t_, t_);
    return f.add(f.mul(f.from_int(4), s3), f.mul(f.from_int(27), t2));
}

bool Curve::on_curve(const CurvePoint& p) const {
    if (p.infinity) return true;
    field_->check(p.x);
    field_->check(p.y);
    return field_->mul(p.y, p.y) == rhs(p.x);
}

void Curve::check_point(const CurvePoint& p) const {
    require(on_curve(p), ErrorCode::NotOnCurve, "point " + point_to_string(p) + " is not on the curve");
}

CurvePoint Curve::neg(const CurvePoint& p) const {
    check_point(p);
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, field_->neg(p.y));
}

CurvePoint Curve::add(const CurvePoint& p, const CurvePoint& q) const {
    check_point(p);
    check_point(q);
    if (p.infinity) return q;
    if (q.infinity) return p;
    const Field& f = *field_;
    Elem lambda = 0;
    if (p.x == q.x) {
        if (f.add(p.y, q.y) == 0) return CurvePoint::at_infinity();
        // Tangent: (3x^2 + s) / 2y.
        const Elem num = f.add(f.mul(f.from_int(3), f.mul(p.x, p.x)), s_);
        lambda = f.div(num, f.mul(f.from_int(2), p.y));
    } else {
        lambda = f.div(f.sub(q.y, p.y), f.sub(q.x, p.x));
    }
    const Elem x3 = f.sub(f.sub(f.mul(lambda, lambda), p.x), q.x);
    const Elem y3 = f.sub(f.mul(lambda, f.sub(p.x, x3)), p.y);
    return CurvePoint::affine(x3, y3);
}

CurvePoint Curve::mul(std::int64_t n, const CurvePoint& p) const {
    check_point(p);
    CurvePoint base = n < 0 ? neg(p) : p;
    auto k = static_cast<std::uint64_t>(n < 0 ? -n : n);
    CurvePoint acc = CurvePoint::at_infinity();
    while (k > 0) {
        if (k & 1U) acc = add(acc, base);
        base = add(base, base);
        k >>= 1U;
    }
    return acc;
}

std::vector<CurvePoint> Curve::points() const {
    std::vector<CurvePoint> out;
    for (Elem x = 0; x < field_->order(); ++x) {
        for (Elem y : field_->sqrt(rhs(x))) out.push_back(CurvePoint::affine(x, y));
    }
    out.push_back(CurvePoint::at_infinity());
    return out;
}

std::size_t Curve::point_count() const {
    std::size_t count = 1;
    for (Elem x = 0; x < field_->order(); ++x) count += field_->sqrt(rhs(x)).size();
    return count;
}

std::string Curve::point_to_string(const CurvePoint& p) const {
    if (p.infinity) return "O";
    return "(" + field_->to_string(p.x) + "," + field_->to_string(p.y) + ")";
}

bool satisfies_hasse(std::uint64_t q, std::uint64_t count) {
    const std::int64_t diff = static_cast<std::int64_t>(count) - static_cast<std::int64_t>(q + 1);
    // diff^2 <= 4q
    return static_cast<std::uint64_t>(diff * diff) <= 4 * q;
}

EllipticDivisor::EllipticDivisor(std::vector<std::pair<CurvePoint, std::int64_t>> terms) {
    for (const auto& [p, m] : terms) add(p, m);
}

EllipticDivisor& EllipticDivisor::add(const CurvePoint& p, std::int64_t multiplicity) {
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const auto& term) { return term.first == p; });
    if (it == terms_.end()) {
        if (multiplicity != 0) terms_.emplace_back(p, multiplicity);
        return *this;
    }
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
    return *this;
}

std::int64_t EllipticDivisor::degree() const {
    std::int64_t deg = 0;
    for (const auto& term : terms_) deg += term.second;
    return deg;
}

bool is_principal(const Curve& curve, const EllipticDivisor& divisor) {
    if (divisor.degree() != 0) return false;
    CurvePoint sum = CurvePoint::at_infinity();
    for (const auto& [p, m] : divisor.terms()) sum = curve.add(sum, curve.mul(m, p));
    return sum.infinity;
}

CurvePoint Automorphism::apply(const Field& f, const CurvePoint& p) const {
    if (p.infinity) return p;
    const Elem u2 = f.mul(u, u);
    return CurvePoint::affine(f.mul(u2, p.x), f.mul(f.mul(u2, u), p.y));
}

std::vector<Automorphism> automorphisms_fixing_o(const Curve& curve) {
    const Field& f = curve.field();
    std::vector<Automorphism> out;
    for (Elem u = 1; u < f.order(); ++u) {
        if (f.mul(f.pow(u, 4), curve.s()) == curve.s() && f.mul(f.pow(u, 6), curve.t()) == curve.t()) {
            out.push_back({u});
        }
    }
    return out;
}

std::vector<Automorphism> automorphisms_fixing_set(const Curve& curve, const std::vector<Automorphism>& automorphisms,
                                                   const std::vector<CurvePoint>& points) {
    const std::set<CurvePoint> members(points.begin(), points.end());
    std::vector<Automorphism> out;
    for (const auto& aut : automorphisms) {
        const bool fixes = std::all_of(points.begin(), points.end(), [&](const CurvePoint& p) {
            return members.count(aut.apply(curve.field(), p)) == 1;
        });
        if (fixes) out.push_back(aut);
    }
    return out;
}

}  // namespace ellidh
