#include "ellidh/deep_holes.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ellidh/error.hpp"
#include "ellidh/finite_geometry.hpp"
#include "ellidh/riemann_roch.hpp"

namespace ellidh {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

void check_outside(const EvalSet& d, const CurvePoint& p) {
    require(!d.contains(p), ErrorCode::InvalidArgument, "the perturbation point lies in D");
}

void check_k_range(const EvalSet& d, int k) {
    require(k >= 2 && static_cast<std::size_t>(k) + 2 <= d.size(), ErrorCode::InvalidArgument,
            "k must satisfy 2 <= k <= n - 2");
}

// Rows are the functions whose evaluations a residue family word must annihilate.
Matrix residue_constraints(const Curve& curve, const EvalSet& d, int k, const CurvePoint& p) {
    if (p.infinity) return ev_matrix(curve, basis_ko(k - 1), d.points());
    return ev_matrix(curve, basis_ko_minus_p(curve, k, p), d.points());
}

Elem coordinate_sum(const Field& f, const Word& w) {
    Elem s = 0;
    for (Elem e : w) s = f.add(s, e);
    return s;
}

}  // namespace

std::string side_name(Side side) { return side == Side::Functional ? "functional" : "residue"; }

std::string guarantee_name(Guarantee g) { return g == Guarantee::Theorem ? "theorem" : "bfs"; }

std::string verdict_name(Verdict v) { return v == Verdict::Holds ? "HOLDS" : "FAILS"; }

TheoremHypotheses theorem_hypotheses(const Curve& curve, const EvalSet& d, int k, Side side) {
    TheoremHypotheses h;
    h.n = d.size();
    h.q = curve.field().order();
    h.k = k;
    h.k_in_range = k >= 2 && static_cast<std::size_t>(k) + 2 <= h.n;
    h.long_code = h.n >= static_cast<std::size_t>(h.q) + 3;
    h.n_at_least_q_plus_k = k >= 0 && h.n >= h.q + static_cast<std::size_t>(k);
    h.q_prime = curve.field().is_prime_field();
    h.k_at_most_sqrt_q = k >= 0 && static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k) <= h.q;
    const std::size_t dim = side == Side::Functional ? static_cast<std::size_t>(k) : h.n - static_cast<std::size_t>(k);
    h.boundary_dimension = h.k_in_range && dim + 2 == h.n;
    return h;
}

std::uint64_t functional_deep_hole_total(const Curve& curve, const EvalSet& d, int k) {
    const std::uint64_t q = curve.field().order();
    return saturating_mul(saturating_mul(curve.point_count() - d.size(), q - 1), saturating_pow(q, k));
}

std::uint64_t residue_deep_hole_total(const Curve& curve, const EvalSet& d, int k) {
    const std::uint64_t q = curve.field().order();
    return saturating_mul(saturating_mul(curve.point_count() - d.size(), q - 1), saturating_pow(q, d.size() - k));
}

DeepHoleFamily construct_functional_deep_holes(const Curve& curve, const EvalSet& d, int k, const CurvePoint& p) {
    curve.check_point(p);
    check_outside(d, p);
    check_k_range(d, k);
    const Field& f = curve.field();
    const RRFunction h = extension_function(curve, k, p);
    const Vector base = ev_vector(curve, h, d.points());

    DeepHoleFamily fam;
    fam.point = p;
    fam.side = Side::Functional;
    fam.k = k;
    fam.label = h.label;
    fam.guarantee =
        theorem_hypotheses(curve, d, k, Side::Functional).satisfied() ? Guarantee::Theorem : Guarantee::Bfs;
    for (Elem c = 1; c < f.order(); ++c) fam.representatives.push_back(scale(f, c, base));
    fam.coset_count = f.order() - 1;
    fam.word_count = saturating_mul(fam.coset_count, saturating_pow(f.order(), k));
    return fam;
}

Word residue_family_word(const Curve& curve, const EvalSet& d, int k, const CurvePoint& p) {
    curve.check_point(p);
    check_outside(d, p);
    check_k_range(d, k);
    const Field& f = curve.field();
    const Matrix h = parity_check_h(curve, d, k);
    const Matrix solutions = null_space(f, residue_constraints(curve, d, k, p));
    for (std::size_t r = 0; r < solutions.rows(); ++r) {
        Word w = solutions.row_vector(r);
        if (!is_zero(mul_vec(f, h, w))) return w;
    }
    fail(ErrorCode::InternalInvariant, "C_Omega(D, kO - P) is contained in C_Omega(D, kO)");
}

DeepHoleFamily construct_residue_deep_holes(const Curve& curve, const EvalSet& d, int k, const CurvePoint& p,
                                            CodeAnalysis& analysis) {
    const Word w = residue_family_word(curve, d, k, p);
    const LinearCode& code = analysis.code();
    require(code.family() == CodeFamily::Residue && code.family_k() == k && code.length() == d.size(),
            ErrorCode::InvalidArgument, "analysis does not belong to C_Omega(D, kO)");

    DeepHoleFamily fam;
    fam.point = p;
    fam.side = Side::Residue;
    fam.k = k;
    fam.label = p.infinity ? "L((k-1)O)-perp" : "L(kO-P)-perp";
    if (theorem_hypotheses(curve, d, k, Side::Residue).satisfied()) {
        fam.guarantee = Guarantee::Theorem;
    } else {
        require(analysis.covering_radius().radius == k - 1, ErrorCode::HypothesisViolation,
                "covering radius of C_Omega(D, kO) is not k - 1");
        fam.guarantee = Guarantee::Bfs;
    }
    const Field& f = curve.field();
    for (Elem c = 1; c < f.order(); ++c) fam.representatives.push_back(scale(f, c, w));
    fam.coset_count = f.order() - 1;
    fam.word_count = saturating_mul(fam.coset_count, saturating_pow(f.order(), d.size() - k));
    return fam;
}

bool families_pairwise_distinct(const LinearCode& code, const std::vector<DeepHoleFamily>& families) {
    std::set<Vector> seen;
    for (const auto& fam : families)
        for (const auto& w : fam.representatives)
            if (!seen.insert(code.syndrome(w)).second) return false;
    return true;
}

SyndromeIdentity verify_syndrome_identity(const Curve& curve, const EvalSet& d, int k, const Word& w,
                                          const CurvePoint& p) {
    curve.check_point(p);
    check_outside(d, p);
    check_k_range(d, k);
    require(w.size() == d.size(), ErrorCode::InvalidArgument, "word length differs from n");
    const Field& f = curve.field();

    SyndromeIdentity id;
    id.syndrome = mul_vec(f, parity_check_h(curve, d, k), w);
    require(is_zero(mul_vec(f, residue_constraints(curve, d, k, p), w)) && !is_zero(id.syndrome),
            ErrorCode::HypothesisViolation, "word is not in C_Omega(D, kO - P) \\ C_Omega(D, kO)");
    id.b = coordinate_sum(f, w);

    if (p.infinity) {
        id.pattern = SyndromePattern::SingleRow;
        const RRBasis basis = basis_ko(k);
        const auto target = monomial_with_pole_order(k);
        for (std::size_t r = 0; r < basis.size(); ++r)
            if (basis.functions[r].monomial == target) id.row = r;
        bool ok = id.syndrome[id.row] != 0;
        for (std::size_t r = 0; r < id.syndrome.size(); ++r)
            if (r != id.row && id.syndrome[r] != 0) ok = false;
        require(ok, ErrorCode::InternalInvariant, "syndrome is not supported on the pole-order-k row");
    } else {
        id.pattern = SyndromePattern::Scaled;
        require(id.b != 0, ErrorCode::InternalInvariant, "coordinate sum vanished");
        Vector phi;
        for (const auto& fn : basis_ko(k).functions) phi.push_back(evaluate(curve, fn, p));
        id.expected = scale(f, id.b, phi);
        require(id.expected == id.syndrome, ErrorCode::InternalInvariant, "syndrome differs from b phi_k(P)");
    }
    return id;
}

CompletenessReport completeness_check(const Curve& curve, int k, Budget budget) {
    const std::size_t count = curve.point_count();
    const std::uint32_t q = curve.field().order();
    require(count >= static_cast<std::size_t>(q) + 4, ErrorCode::HypothesisViolation,
            "completeness check needs |E| >= q + 4");
    require(k >= 2 && static_cast<std::size_t>(k) + 4 <= count, ErrorCode::HypothesisViolation,
            "completeness check needs 2 <= k <= |E| - 4");

    const EvalSet d = EvalSet::all_but_o(curve);
    CodeAnalysis analysis(functional_code(curve, d, k), budget);
    const CosetTable& table = analysis.table();

    CompletenessReport r;
    r.k = k;
    r.n = d.size();
    r.covering_radius = table.radius();
    const auto deep = enumerate_deep_hole_cosets(table);
    r.deep_hole_cosets = deep.size();

    std::set<Vector> constructed;
    const DeepHoleFamily fam = construct_functional_deep_holes(curve, d, k, CurvePoint::at_infinity());
    for (const auto& w : fam.representatives) constructed.insert(analysis.code().syndrome(w));
    r.constructed_cosets = constructed.size();
    for (const auto& s : constructed)
        if (table.leader_weight(s) == table.radius()) ++r.constructed_deep;

    for (const auto& s : deep) {
        if (!constructed.contains(s)) {
            r.counterexample = coset_representative(analysis.code(), s);
            break;
        }
    }
    const bool exact = r.constructed_deep == r.constructed_cosets && r.deep_hole_cosets == r.constructed_cosets;
    r.verdict = exact ? Verdict::Holds : Verdict::Fails;
    return r;
}

std::vector<std::size_t> coordinate_permutation(const Curve& curve, const EvalSet& d, const Automorphism& aut) {
    const Field& f = curve.field();
    const Automorphism inv = aut.inverse(f);
    std::vector<std::size_t> perm;
    for (const auto& p : d.points()) {
        const std::size_t idx = d.index_of(inv.apply(f, p));
        require(idx < d.size(), ErrorCode::InvalidArgument, "automorphism does not fix D setwise");
        perm.push_back(idx);
    }
    return perm;
}

Word automorphism_action(const Curve& curve, const EvalSet& d, const Automorphism& aut, const Word& w) {
    require(w.size() == d.size(), ErrorCode::InvalidArgument, "word length differs from n");
    const auto perm = coordinate_permutation(curve, d, aut);
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[perm[i]];
    return out;
}

std::vector<FamilyMerge> coincident_families(const Curve& curve, const EvalSet& d, int k) {
    check_k_range(d, k);
    std::vector<FamilyMerge> merges;
    if (static_cast<std::size_t>(k) + 2 != d.size()) return merges;
    const Field& f = curve.field();
    const auto outside = complement_points(curve, d);
    for (std::size_t i = 0; i < outside.size(); ++i) {
        for (std::size_t j = i + 1; j < outside.size(); ++j) {
            EllipticDivisor div;
            for (const auto& p : d.points()) div.add(p, 1);
            div.add(CurvePoint::at_infinity(), -k);
            div.add(outside[i], -1);
            div.add(outside[j], -1);
            const bool principal = is_principal(curve, div);
            const bool same = same_row_space(f, ev_matrix(curve, basis_ko_plus_p(curve, k, outside[i]), d.points()),
                                             ev_matrix(curve, basis_ko_plus_p(curve, k, outside[j]), d.points()));
            require(principal == same, ErrorCode::InternalInvariant, "principality and code equality disagree");
            if (same) merges.push_back({outside[i], outside[j]});
        }
    }
    return merges;
}

std::vector<RsDeepHoleClass> rs_deep_hole_classes(const FieldPtr& field, const std::vector<Elem>& support, int k) {
    require(k >= 1 && static_cast<std::size_t>(k) < support.size(), ErrorCode::InvalidArgument,
            "RS deep-hole classes need 1 <= k < |D|");
    const Field& f = *field;
    for (Elem a : support) f.check(a);
    std::vector<RsDeepHoleClass> out;

    RsDeepHoleClass inf;
    inf.label = "x^" + std::to_string(k);
    Vector base;
    for (Elem a : support) base.push_back(f.pow(a, static_cast<std::uint64_t>(k)));
    for (Elem c = 1; c < f.order(); ++c) inf.words.push_back(scale(f, c, base));
    out.push_back(std::move(inf));

    for (Elem a = 0; a < f.order(); ++a) {
        if (std::find(support.begin(), support.end(), a) != support.end()) continue;
        RsDeepHoleClass cls;
        cls.pole = a;
        cls.label = "1/(x-" + f.to_string(a) + ")";
        Vector v;
        for (Elem x : support) v.push_back(f.inv(f.sub(x, a)));
        for (Elem c = 1; c < f.order(); ++c) cls.words.push_back(scale(f, c, v));
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace ellidh
