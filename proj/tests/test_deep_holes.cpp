#include <doctest.h>

#include <random>
#include <set>

#include "ellidh/deep_holes.hpp"
#include "ellidh/error.hpp"

using namespace ellidh;

namespace {

Curve fixture() { return Curve(Field::make(5), 1, 1); }

const CurvePoint kO = CurvePoint::at_infinity();
const CurvePoint kP0 = CurvePoint::affine(4, 3);

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_CASE("functional family from P = O on the fixture") {
    auto c = fixture();
    const EvalSet d = EvalSet::all_but_o(c);
    const DeepHoleFamily fam = construct_functional_deep_holes(c, d, 2, kO);
    CHECK(fam.label == "y");
    CHECK(fam.guarantee == Guarantee::Theorem);
    REQUIRE(fam.representatives.size() == 4);
    CHECK(fam.representatives[0] == Word{1, 4, 1, 4, 1, 4, 2, 3});
    CHECK(fam.coset_count == 4);
    CHECK(fam.word_count == 100);
    CHECK(functional_deep_hole_total(c, d, 2) == 100);

    CodeAnalysis a(functional_code(c, d, 2));
    for (const auto& w : fam.representatives) {
        CHECK(a.is_deep_hole(w));
        CHECK(a.error_distance(w) == 5);
    }
    CHECK(families_pairwise_distinct(a.code(), {fam}));
}

TEST_CASE("theorem label is withheld at dimension n - 2") {
    auto c = fixture();
    const EvalSet d = EvalSet::all_but_o(c);
    const TheoremHypotheses h = theorem_hypotheses(c, d, 6, Side::Functional);
    CHECK(h.k_in_range);
    CHECK(h.long_code);
    CHECK(h.boundary_dimension);
    CHECK_FALSE(h.satisfied());
    CHECK(construct_functional_deep_holes(c, d, 6, kO).guarantee == Guarantee::Bfs);
    CHECK(theorem_hypotheses(c, d, 2, Side::Residue).boundary_dimension);
    CHECK(theorem_hypotheses(c, d, 5, Side::Functional).satisfied());
}

TEST_CASE("functional families on the seven-point set") {
    auto c = fixture();
    const EvalSet d = EvalSet::all_but(c, {kP0});
    const DeepHoleFamily fam = construct_functional_deep_holes(c, d, 2, kP0);
    CHECK(fam.label == "(y+3)/(x-4)");
    CHECK(fam.guarantee == Guarantee::Bfs);
    for (int k = 2; k <= 4; ++k) {
        const LinearCode code = functional_code(c, d, k);
        std::vector<DeepHoleFamily> fams;
        for (const auto& p : complement_points(c, d)) fams.push_back(construct_functional_deep_holes(c, d, k, p));
        CHECK(families_pairwise_distinct(code, fams));
        // Every representative lies outside the code and inside C_L(D, kO + P).
        for (const auto& f : fams)
            for (const auto& w : f.representatives) CHECK_FALSE(code.contains(w));
    }
}

TEST_CASE("functional family preconditions") {
    auto c = fixture();
    const EvalSet d = EvalSet::all_but_o(c);
    CHECK(code_of([&] { construct_functional_deep_holes(c, d, 2, CurvePoint::affine(0, 1)); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([&] { construct_functional_deep_holes(c, d, 7, kO); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { construct_functional_deep_holes(c, d, 1, kO); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("residue syndromes from P = O sit on the pole-order-k row") {
    auto c = fixture();
    const EvalSet d = EvalSet::all_but_o(c);
    const std::vector<std::pair<int, std::string>> rows = {{3, "y"}, {4, "x^2"}, {5, "xy"}};
    for (const auto& [k, label] : rows) {
        const Word w = residue_family_word(c, d, k, kO);
        const SyndromeIdentity id = verify_syndrome_identity(c, d, k, w, kO);
        CHECK(id.pattern == SyndromePattern::SingleRow);
        CHECK(basis_ko(k).functions[id.row].label == label);
        CHECK(id.row == static_cast<std::size_t>(k - 1));
    }
}

TEST_CASE("residue syndrome for affine P is b phi_k(P)") {
    auto c = fixture();
    const Field& f = c.field();
    const EvalSet d = EvalSet::all_but(c, {kP0});
    const LinearCode code = residue_code(c, d, 3);
    CodeAnalysis a(code);
    CHECK(a.covering_radius().radius == 2);
    const Word base = residue_family_word(c, d, 3, kP0);
    std::mt19937 rng(17);
    for (int i = 0; i < 25; ++i) {
        Vector msg(code.dimension());
        for (auto& e : msg) e = rng() % 5;
        const Word w = add(f, scale(f, 1 + rng() % 4, base), code.encode(msg));
        const SyndromeIdentity id = verify_syndrome_identity(c, d, 3, w, kP0);
        CHECK(id.b != 0);
        CHECK(id.syndrome == scale(f, id.b, Vector{1, 4, 3}));
    }
    // A codeword is not in C_Omega(D, kO - P) \ C_Omega(D, kO).
    CHECK(code_of([&] { verify_syndrome_identity(c, d, 3, code.encode(Vector{1, 0, 0, 0}), kP0); }) ==
          ErrorCode::HypothesisViolation);
}

TEST_CASE("residue families are deep holes where the radius is k - 1") {
    auto c = fixture();
    const EvalSet d = EvalSet::all_but_o(c);
    for (int k = 3; k <= 6; ++k) {
        CodeAnalysis a(residue_code(c, d, k));
        const DeepHoleFamily fam = construct_residue_deep_holes(c, d, k, kO, a);
        CHECK(fam.guarantee == Guarantee::Theorem);
        CHECK(fam.word_count == 4 * saturating_pow(5, 8 - k));
        for (const auto& w : fam.representatives) CHECK(a.is_deep_hole(w));
    }
    // At k = 2 the residue code has dimension n - 2 and radius 2, not 1.
    CodeAnalysis a2(residue_code(c, d, 2));
    CHECK(code_of([&] { construct_residue_deep_holes(c, d, 2, kO, a2); }) == ErrorCode::HypothesisViolation);
}

TEST_CASE("completeness check reports, with a counterexample") {
    auto c = fixture();
    CHECK(code_of([&] { completeness_check(c, 1); }) == ErrorCode::HypothesisViolation);
    CHECK(code_of([&] { completeness_check(c, 6); }) == ErrorCode::HypothesisViolation);
    const CompletenessReport r = completeness_check(c, 2);
    CHECK(r.covering_radius == 5);
    CHECK(r.constructed_cosets == 4);
    CHECK(r.constructed_deep == 4);
    CHECK(r.deep_hole_cosets == 2880);
    CHECK(r.verdict == Verdict::Fails);
    REQUIRE(r.counterexample.has_value());
    const LinearCode code = functional_code(c, EvalSet::all_but_o(c), 2);
    CHECK(error_distance_by_scan(code, *r.counterexample) == 5);
    // Not in the span of the constructed family plus the code.
    Matrix g = code.generator();
    g.append_row(ev_vector(c, extension_function(c, 2, kO), EvalSet::all_but_o(c).points()));
    CHECK_FALSE(in_row_space(c.field(), g, *r.counterexample));
}

TEST_CASE("automorphism action permutes coordinates and preserves distance") {
    auto c = fixture();
    const Field& f = c.field();
    const EvalSet d = EvalSet::all_but_o(c);
    const auto auts = automorphisms_fixing_o(c);
    REQUIRE(auts.size() == 2);
    const Word w{1, 2, 3, 4, 0, 1, 2, 3};
    CHECK(automorphism_action(c, d, auts[0], w) == w);
    CHECK(coordinate_permutation(c, d, auts[1]) == std::vector<std::size_t>{1, 0, 3, 2, 5, 4, 7, 6});

    const Word y = ev_vector(c, basis_ko(3).functions[2], d.points());
    const Word minus_y = scale(f, f.neg(1), y);
    CHECK(automorphism_action(c, d, auts[1], y) == minus_y);

    std::mt19937 rng(23);
    for (int k = 2; k <= 6; ++k) {
        CodeAnalysis a(functional_code(c, d, k));
        for (int i = 0; i < 50; ++i) {
            Word u(8);
            for (auto& e : u) e = rng() % 5;
            CHECK(a.error_distance(automorphism_action(c, d, auts[1], u)) == a.error_distance(u));
        }
    }
    const EvalSet truncated = EvalSet::all_but(c, {kP0});
    CHECK(code_of([&] { automorphism_action(c, truncated, auts[1], Word(7, 0)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("families coincide at k = n - 2 exactly for principal divisors") {
    auto c = fixture();
    // 2 (0,1) = (4,2), so (0,1) + (4,3) + ... : removing A = (0,1) and -2A = (4,3)
    // makes D - 4 O - A - O principal.
    const CurvePoint a = CurvePoint::affine(0, 1);
    const EvalSet d = EvalSet::all_but(c, {a, kP0});
    REQUIRE(d.size() == 6);
    const auto merges = coincident_families(c, d, 4);
    REQUIRE(merges.size() == 1);
    CHECK(merges[0].first == a);
    CHECK(merges[0].second == kO);
    CHECK(coincident_families(c, d, 3).empty());
    CHECK(coincident_families(c, EvalSet::all_but_o(c), 6).empty());
}

TEST_CASE("Reed-Solomon deep-hole classes") {
    auto f = Field::make(5);
    auto classes = rs_deep_hole_classes(f, {1, 2, 3, 4}, 2);
    REQUIRE(classes.size() == 2);
    CHECK_FALSE(classes[0].pole.has_value());
    CHECK(classes[1].pole == Elem{0});
    CHECK(classes[1].label == "1/(x-0)");
    CodeAnalysis a(rs_code(f, {1, 2, 3, 4}, 2));
    CHECK(a.covering_radius().radius == 2);
    for (const auto& cls : classes)
        for (const auto& w : cls.words) CHECK(a.error_distance(w) == 2);

    auto full = rs_deep_hole_classes(f, {0, 1, 2, 3, 4}, 2);
    REQUIRE(full.size() == 1);
    CodeAnalysis b(rs_code(f, {0, 1, 2, 3, 4}, 2));
    for (const auto& w : full[0].words) CHECK(b.error_distance(w) == 3);
    CHECK(b.deep_hole_syndromes().size() == 4);
}
