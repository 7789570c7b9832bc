#pragma once

// Functional and residue elliptic codes, the parity-check matrix H(k), and
// Reed-Solomon codes over the affine line.

#include <string>
#include <vector>

#include "ellidh/elliptic_curve.hpp"
#include "ellidh/linalg.hpp"
#include "ellidh/riemann_roch.hpp"

namespace ellidh {

using Word = Vector;

/// Ordered evaluation points: distinct affine rational points, canonical order.
class EvalSet {
public:
    EvalSet() = default;
    /// Validates and sorts. Throws on O, off-curve or repeated points.
    EvalSet(const Curve& curve, std::vector<CurvePoint> points);

    /// E(F_q) \ {O}.
    static EvalSet all_but_o(const Curve& curve);
    /// E(F_q) \ ({O} + removed).
    static EvalSet all_but(const Curve& curve, const std::vector<CurvePoint>& removed);

    const std::vector<CurvePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const CurvePoint& p) const;
    /// Position of p, or size() when absent.
    std::size_t index_of(const CurvePoint& p) const;

private:
    std::vector<CurvePoint> points_;
};

/// Rational points of E outside D (including O), canonical order.
std::vector<CurvePoint> complement_points(const Curve& curve, const EvalSet& d);

enum class CodeFamily { Functional, Residue, ReedSolomon, Generic };

std::string family_name(CodeFamily family);

class LinearCode {
public:
    LinearCode() = default;
    /// Builds a code from a full-rank generator; parity check is the reduced null space.
    static LinearCode from_generator(FieldPtr field, Matrix generator, CodeFamily family = CodeFamily::Generic,
                                     int k = 0);
    /// Builds a code as the null space of a full-rank parity-check matrix.
    static LinearCode from_parity_check(FieldPtr field, Matrix parity_check, CodeFamily family = CodeFamily::Generic,
                                        int k = 0);

    const FieldPtr& field_ptr() const { return field_; }
    const Field& field() const { return *field_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return dim_; }
    std::size_t redundancy() const { return n_ - dim_; }
    const Matrix& generator() const { return generator_; }
    const Matrix& parity_check() const { return parity_check_; }
    CodeFamily family() const { return family_; }
    /// Divisor degree parameter of the family (k of kO), 0 for generic codes.
    int family_k() const { return k_; }

    Vector syndrome(const Word& w) const;
    bool contains(const Word& w) const;
    Word encode(const Vector& message) const;

private:
    LinearCode(FieldPtr field, Matrix generator, Matrix parity_check, CodeFamily family, int k);
    bool is_zero_matrix_product() const;

    FieldPtr field_;
    std::size_t n_ = 0;
    std::size_t dim_ = 0;
    Matrix generator_;
    Matrix parity_check_;
    CodeFamily family_ = CodeFamily::Generic;
    int k_ = 0;
};

/// k x n matrix of ev over basis_ko(k), rows ascending by pole order.
Matrix parity_check_h(const Curve& curve, const EvalSet& d, int k);

/// C_L(D, kO). Requires 2 <= k < n.
LinearCode functional_code(const Curve& curve, const EvalSet& d, int k);

/// C_Omega(D, kO) realized as the dual of C_L(D, kO). Requires 2 <= k < n.
LinearCode residue_code(const Curve& curve, const EvalSet& d, int k);

/// Swaps the roles of generator and parity check.
LinearCode dual(const LinearCode& code);

/// RS(D, k) = C_L(D, (k-1)O) on the projective line: rows (a^j)_{a in D}, j < k.
LinearCode rs_code(const FieldPtr& field, const std::vector<Elem>& support, int k);

}  // namespace ellidh
