#include "ellidh/finite_geometry.hpp"

#include <algorithm>
#include <numeric>

#include "ellidh/error.hpp"
#include "ellidh/riemann_roch.hpp"

namespace ellidh {

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::size_t subset_rank(const Field& f, const std::vector<const Vector*>& vectors) {
    if (vectors.empty()) return 0;
    Matrix m(0, vectors.front()->size());
    for (const Vector* v : vectors) m.append_row(*v);
    return rank(f, m);
}

// Calls fn(subset) for every size-`size` subset of `pool`, plus `fixed` if given.
// Stops and returns false as soon as fn returns false.
template <typename Fn>
bool all_subsets(const std::vector<const Vector*>& pool, std::size_t size, const Vector* fixed, Fn&& fn) {
    const std::size_t take = fixed ? size - 1 : size;
    if (take > pool.size()) return true;
    std::vector<const Vector*> chosen(size);
    std::vector<std::size_t> comb(take);
    std::iota(comb.begin(), comb.end(), 0);
    do {
        for (std::size_t i = 0; i < take; ++i) chosen[i] = pool[comb[i]];
        if (fixed) chosen[take] = fixed;
        if (!fn(chosen)) return false;
    } while (take > 0 && next_combination(comb, pool.size()));
    return true;
}

std::vector<const Vector*> pointers(const PointSet& s) {
    std::vector<const Vector*> out;
    for (const auto& p : s.points()) out.push_back(&p.coords);
    return out;
}

}  // namespace

ProjPoint normalize(const Field& f, const Vector& v) {
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    require(it != v.end(), ErrorCode::InvalidArgument, "the zero vector is not a projective point");
    const Elem inv = f.inv(*it);
    ProjPoint p;
    p.coords.reserve(v.size());
    for (Elem e : v) p.coords.push_back(f.mul(inv, e));
    return p;
}

PointSet::PointSet(std::size_t k, std::vector<ProjPoint> points) : k_(k), points_(std::move(points)) {
    require(k_ >= 1, ErrorCode::InvalidArgument, "point set dimension must be positive");
    for (const auto& p : points_) {
        require(p.dimension() == k_, ErrorCode::InvalidArgument, "point has wrong dimension");
        auto it = std::find_if(p.coords.begin(), p.coords.end(), [](Elem e) { return e != 0; });
        require(it != p.coords.end() && *it == 1, ErrorCode::InvalidArgument, "point is not normalized");
    }
    std::vector<ProjPoint> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorCode::InvalidArgument,
            "point set contains a repeated point");
}

bool PointSet::contains(const ProjPoint& p) const {
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

ProjPoint phi_k(const Curve& c, int k, const CurvePoint& p) {
    require(k >= 2, ErrorCode::InvalidArgument, "phi_k needs k >= 2");
    c.check_point(p);
    if (p.infinity) {
        ProjPoint o{Vector(static_cast<std::size_t>(k), 0)};
        o.coords.back() = 1;
        return o;
    }
    const RRBasis basis = basis_ko(k);
    Vector coords;
    for (const auto& fn : basis.functions) coords.push_back(evaluate(c, fn, p));
    return normalize(c.field(), coords);
}

PointSet elliptic_point_set(const Curve& c, int k) {
    // phi_2 identifies (x, y) with (x, -y), so the embedding starts at k = 3.
    require(k >= 3, ErrorCode::InvalidArgument, "phi_k(E) is a point set only for k >= 3");
    std::vector<ProjPoint> pts;
    for (const auto& p : c.points()) pts.push_back(phi_k(c, k, p));
    return PointSet(static_cast<std::size_t>(k), std::move(pts));
}

std::vector<ProjPoint> projective_space(const Field& f, std::size_t k, Budget budget) {
    const std::uint64_t total = saturating_pow(f.order(), k);
    require(total <= budget.max_states, ErrorCode::BudgetExceeded, "projective space too large for the budget");
    std::vector<ProjPoint> out;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        Vector v(k);
        std::uint64_t rem = idx;
        // Most significant coordinate first so the order is lexicographic.
        for (std::size_t i = k; i-- > 0;) {
            v[i] = static_cast<Elem>(rem % f.order());
            rem /= f.order();
        }
        auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
        if (*it == 1) out.push_back({std::move(v)});
    }
    return out;
}

bool is_track(const Field& f, std::span<const Vector> vectors, std::size_t k) {
    require(k >= 2, ErrorCode::InvalidArgument, "tracks need k >= 2");
    require(vectors.size() >= k, ErrorCode::InvalidArgument, "a track in PG(k-1, q) needs at least k points");
    std::vector<ProjPoint> normalized;
    for (const auto& v : vectors) {
        require(v.size() == k, ErrorCode::InvalidArgument, "vector has wrong dimension");
        if (is_zero(v)) return false;
        normalized.push_back(normalize(f, v));
    }
    std::vector<ProjPoint> sorted = normalized;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    std::vector<const Vector*> pool;
    for (const auto& p : normalized) pool.push_back(&p.coords);
    const bool independent = all_subsets(pool, k - 1, nullptr,
                                         [&](const auto& sub) { return subset_rank(f, sub) == k - 1; });
    if (!independent) return false;
    const bool no_hyperplane = all_subsets(pool, k, nullptr, [&](const auto& sub) { return subset_rank(f, sub) == k; });
    return !no_hyperplane;
}

bool is_track(const Field& f, const PointSet& s) {
    std::vector<Vector> vs;
    for (const auto& p : s.points()) vs.push_back(p.coords);
    return is_track(f, vs, s.k());
}

bool is_nk_set(const Field& f, const PointSet& s) {
    require(s.size() > s.k(), ErrorCode::InvalidArgument, "an (n;k)-set needs more than k points");
    if (!is_track(f, s)) return false;
    return all_subsets(pointers(s), s.k() + 1, nullptr, [&](const auto& sub) { return subset_rank(f, sub) == s.k(); });
}

bool extends_as_track(const Field& f, const PointSet& s, const ProjPoint& q) {
    if (s.contains(q)) return false;
    return all_subsets(pointers(s), s.k() - 1, &q.coords,
                       [&](const auto& sub) { return subset_rank(f, sub) == s.k() - 1; });
}

bool extends_as_nk_set(const Field& f, const PointSet& s, const ProjPoint& q) {
    if (!extends_as_track(f, s, q)) return false;
    return all_subsets(pointers(s), s.k() + 1, &q.coords, [&](const auto& sub) { return subset_rank(f, sub) == s.k(); });
}

Extensions extensions(const Field& f, const PointSet& s, Budget budget) {
    require(is_nk_set(f, s), ErrorCode::InvalidArgument, "extensions are defined for (n;k)-sets");
    Extensions out;
    for (const auto& q : projective_space(f, s.k(), budget)) {
        if (s.contains(q)) continue;
        if (!extends_as_track(f, s, q)) continue;
        out.track_extensions.push_back(q);
        if (extends_as_nk_set(f, s, q)) out.nk_set_extensions.push_back(q);
    }
    return out;
}

LongTrackReport verify_long_track(const Field& f, const PointSet& s) {
    require(s.size() > f.order() + s.k(), ErrorCode::HypothesisViolation,
            "long-track statement needs n > q + k (n = " + std::to_string(s.size()) + ")");
    LongTrackReport r;
    r.n = s.size();
    r.k = s.k();
    r.q = f.order();
    r.is_track = is_track(f, s);
    r.is_nk_set = r.is_track && is_nk_set(f, s);
    require(r.implication_holds(), ErrorCode::InternalInvariant, "a long track failed to be an (n;k)-set");
    return r;
}

TrackEquivalence deep_hole_track_equiv(CodeAnalysis& analysis, const Word& w) {
    const LinearCode& code = analysis.code();
    const Field& f = code.field();
    const std::size_t k = code.redundancy();
    require(k >= 3, ErrorCode::HypothesisViolation, "track characterization needs k >= 3");
    require(analysis.covering_radius().radius == static_cast<int>(k) - 1, ErrorCode::HypothesisViolation,
            "track characterization needs covering radius k - 1");
    TrackEquivalence r;
    r.syndrome = code.syndrome(w);
    require(!is_zero(r.syndrome), ErrorCode::InvalidArgument, "syndrome is zero");

    std::vector<Vector> vectors;
    for (std::size_t j = 0; j < code.length(); ++j) vectors.push_back(code.parity_check().column(j));
    vectors.push_back(r.syndrome);
    r.track = is_track(f, vectors, k);
    r.deep_hole = analysis.is_deep_hole(w);
    require(r.track == r.deep_hole, ErrorCode::InternalInvariant, "deep-hole and track tests disagree");
    return r;
}

}  // namespace ellidh
