#include "ellidh/ag_codes.hpp"

#include <algorithm>
#include <set>

#include "ellidh/error.hpp"

namespace ellidh {

EvalSet::EvalSet(const Curve& curve, std::vector<CurvePoint> points) : points_(std::move(points)) {
    for (const auto& p : points_) {
        require(!p.infinity, ErrorCode::InvalidArgument, "evaluation set must not contain O");
        curve.check_point(p);
    }
    std::sort(points_.begin(), points_.end());
    require(std::adjacent_find(points_.begin(), points_.end()) == points_.end(), ErrorCode::InvalidArgument,
            "evaluation set contains a repeated point");
}

EvalSet EvalSet::all_but_o(const Curve& curve) { return all_but(curve, {}); }

EvalSet EvalSet::all_but(const Curve& curve, const std::vector<CurvePoint>& removed) {
    for (const auto& p : removed) curve.check_point(p);
    std::vector<CurvePoint> pts;
    for (const auto& p : curve.points()) {
        if (p.infinity) continue;
        if (std::find(removed.begin(), removed.end(), p) != removed.end()) continue;
        pts.push_back(p);
    }
    return EvalSet(curve, std::move(pts));
}

bool EvalSet::contains(const CurvePoint& p) const { return index_of(p) != points_.size(); }

std::size_t EvalSet::index_of(const CurvePoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it != points_.end() && *it == p) return static_cast<std::size_t>(it - points_.begin());
    return points_.size();
}

std::vector<CurvePoint> complement_points(const Curve& curve, const EvalSet& d) {
    std::vector<CurvePoint> out;
    for (const auto& p : curve.points())
        if (!d.contains(p)) out.push_back(p);
    return out;
}

std::string family_name(CodeFamily family) {
    switch (family) {
        case CodeFamily::Functional: return "functional";
        case CodeFamily::Residue: return "residue";
        case CodeFamily::ReedSolomon: return "reed-solomon";
        case CodeFamily::Generic: return "generic";
    }
    return "generic";
}

LinearCode::LinearCode(FieldPtr field, Matrix generator, Matrix parity_check, CodeFamily family, int k)
    : field_(std::move(field)),
      n_(generator.cols()),
      dim_(generator.rows()),
      generator_(std::move(generator)),
      parity_check_(std::move(parity_check)),
      family_(family),
      k_(k) {
    require(is_zero_matrix_product(), ErrorCode::InternalInvariant, "generator and parity check are not orthogonal");
}

LinearCode LinearCode::from_generator(FieldPtr field, Matrix generator, CodeFamily family, int k) {
    require(field != nullptr, ErrorCode::InvalidArgument, "null field");
    require(generator.cols() > 0, ErrorCode::InvalidArgument, "code length must be positive");
    require(rank(*field, generator) == generator.rows(), ErrorCode::InvalidArgument, "generator is not full rank");
    Matrix parity = null_space(*field, generator);
    return LinearCode(std::move(field), std::move(generator), std::move(parity), family, k);
}

LinearCode LinearCode::from_parity_check(FieldPtr field, Matrix parity_check, CodeFamily family, int k) {
    require(field != nullptr, ErrorCode::InvalidArgument, "null field");
    require(parity_check.cols() > 0, ErrorCode::InvalidArgument, "code length must be positive");
    require(rank(*field, parity_check) == parity_check.rows(), ErrorCode::InvalidArgument,
            "parity check is not full rank");
    Matrix generator = null_space(*field, parity_check);
    return LinearCode(std::move(field), std::move(generator), std::move(parity_check), family, k);
}

bool LinearCode::is_zero_matrix_product() const {
    if (generator_.rows() == 0 || parity_check_.rows() == 0) return true;
    const Matrix product = mul_transpose(*field_, generator_, parity_check_);
    for (std::size_t r = 0; r < product.rows(); ++r)
        if (!is_zero(product.row(r))) return false;
    return true;
}

Vector LinearCode::syndrome(const Word& w) const {
    require(w.size() == n_, ErrorCode::InvalidArgument, "word length does not match code length");
    return mul_vec(*field_, parity_check_, w);
}

bool LinearCode::contains(const Word& w) const { return is_zero(syndrome(w)); }

Word LinearCode::encode(const Vector& message) const {
    require(message.size() == dim_, ErrorCode::InvalidArgument, "message length does not match dimension");
    return vec_mul(*field_, message, generator_);
}

Matrix parity_check_h(const Curve& curve, const EvalSet& d, int k) {
    require(k >= 2 && static_cast<std::size_t>(k) < d.size(), ErrorCode::InvalidArgument,
            "need 2 <= k < n, got k = " + std::to_string(k) + ", n = " + std::to_string(d.size()));
    return ev_matrix(curve, basis_ko(k), d.points());
}

LinearCode functional_code(const Curve& curve, const EvalSet& d, int k) {
    Matrix h = parity_check_h(curve, d, k);
    require(rank(curve.field(), h) == static_cast<std::size_t>(k), ErrorCode::InternalInvariant,
            "evaluation map on L(kO) is not injective");
    return LinearCode::from_generator(curve.field_ptr(), std::move(h), CodeFamily::Functional, k);
}

LinearCode residue_code(const Curve& curve, const EvalSet& d, int k) {
    Matrix h = parity_check_h(curve, d, k);
    return LinearCode::from_parity_check(curve.field_ptr(), std::move(h), CodeFamily::Residue, k);
}

LinearCode dual(const LinearCode& code) {
    CodeFamily family = CodeFamily::Generic;
    if (code.family() == CodeFamily::Functional) family = CodeFamily::Residue;
    if (code.family() == CodeFamily::Residue) family = CodeFamily::Functional;
    return LinearCode::from_generator(code.field_ptr(), code.parity_check(), family, code.family_k());
}

LinearCode rs_code(const FieldPtr& field, const std::vector<Elem>& support, int k) {
    require(field != nullptr, ErrorCode::InvalidArgument, "null field");
    for (Elem a : support) field->check(a);
    const std::set<Elem> distinct(support.begin(), support.end());
    require(distinct.size() == support.size(), ErrorCode::InvalidArgument, "RS support contains duplicates");
    require(k >= 1 && static_cast<std::size_t>(k) <= support.size(), ErrorCode::InvalidArgument,
            "need 1 <= k <= |D| for RS codes");
    Matrix g(static_cast<std::size_t>(k), support.size());
    for (std::size_t j = 0; j < support.size(); ++j)
        for (int i = 0; i < k; ++i) g(static_cast<std::size_t>(i), j) = field->pow(support[j], static_cast<std::uint64_t>(i));
    return LinearCode::from_generator(field, std::move(g), CodeFamily::ReedSolomon, k);
}

}  // namespace ellidh
