#pragma once

// Tracks and (n;k)-sets in PG(k-1, q) and the monomial embedding phi_k.

#include <span>
#include <vector>

#include "ellidh/coset_analysis.hpp"
#include "ellidh/elliptic_curve.hpp"
#include "ellidh/linalg.hpp"

namespace ellidh {

/// A projective point, first nonzero coordinate equal to 1.
struct ProjPoint {
    Vector coords;

    std::size_t dimension() const { return coords.size(); }
    bool operator==(const ProjPoint&) const = default;
    auto operator<=>(const ProjPoint&) const = default;
};

/// Throws InvalidArgument for the zero vector.
ProjPoint normalize(const Field& f, const Vector& v);

/// Distinct projective points of a common dimension k.
class PointSet {
public:
    PointSet(std::size_t k, std::vector<ProjPoint> points);

    std::size_t k() const { return k_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<ProjPoint>& points() const { return points_; }
    bool contains(const ProjPoint& p) const;

private:
    std::size_t k_;
    std::vector<ProjPoint> points_;
};

/// Affine (x, y) -> monomials of L(kO) in ascending pole order; O -> (0, ..., 0, 1).
ProjPoint phi_k(const Curve& c, int k, const CurvePoint& p);

/// phi_k(E(F_q)) in canonical point order. Requires k >= 3.
PointSet elliptic_point_set(const Curve& c, int k);

/// All points of PG(k-1, q) in canonical order.
std::vector<ProjPoint> projective_space(const Field& f, std::size_t k, Budget budget = {});

/// Any k-1 points independent and some k points on a hyperplane. Vectors may
/// be unnormalized; a repeated projective point makes the answer false.
/// Requires at least k vectors.
bool is_track(const Field& f, std::span<const Vector> vectors, std::size_t k);
bool is_track(const Field& f, const PointSet& s);

/// A track in which any k+1 points span PG(k-1, q). Requires more than k points.
bool is_nk_set(const Field& f, const PointSet& s);

struct Extensions {
    std::vector<ProjPoint> nk_set_extensions;  // S + Q is an (n+1;k)-set
    std::vector<ProjPoint> track_extensions;   // S + Q is an (n+1)-track

    bool complete() const { return nk_set_extensions.empty(); }
    bool extendable() const { return !track_extensions.empty(); }
};

/// Scans PG(k-1, q) for single-point extensions of an (n;k)-set.
Extensions extensions(const Field& f, const PointSet& s, Budget budget = {});

/// Whether S + Q is an (n+1)-track / (n+1;k)-set, given that S is an (n;k)-set.
bool extends_as_track(const Field& f, const PointSet& s, const ProjPoint& q);
bool extends_as_nk_set(const Field& f, const PointSet& s, const ProjPoint& q);

struct LongTrackReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint32_t q = 0;
    bool is_track = false;
    bool is_nk_set = false;
    bool implication_holds() const { return !is_track || is_nk_set; }
};

/// Long tracks (n > q + k) are (n;k)-sets. Throws HypothesisViolation when n <= q + k.
LongTrackReport verify_long_track(const Field& f, const PointSet& s);

struct TrackEquivalence {
    bool deep_hole = false;
    bool track = false;
    Vector syndrome;
};

/// For a code with k x n parity check H, k >= 3, and covering radius k - 1:
/// compares "w is a deep hole" with "columns of H plus H w^T form an
/// (n+1)-track". Throws InternalInvariant if they disagree.
TrackEquivalence deep_hole_track_equiv(CodeAnalysis& analysis, const Word& w);

}  // namespace ellidh
