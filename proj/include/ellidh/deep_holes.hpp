#pragma once

// Explicit deep-hole families of elliptic codes, the residue syndrome
// identity, the completeness checker, automorphism action and RS classes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellidh/ag_codes.hpp"
#include "ellidh/coset_analysis.hpp"
#include "ellidh/elliptic_curve.hpp"

namespace ellidh {

enum class Side { Functional, Residue };

std::string side_name(Side side);

/// "theorem" when the hypotheses below were checked, otherwise "bfs".
enum class Guarantee { Theorem, Bfs };

std::string guarantee_name(Guarantee g);

/// Hypotheses under which the covering radius is n - k - 1 (functional) or
/// k - 1 (residue) and the constructed families are deep holes.
struct TheoremHypotheses {
    std::size_t n = 0;
    std::uint32_t q = 0;
    int k = 0;
    bool k_in_range = false;         // 2 <= k <= n - 2
    bool long_code = false;          // n >= q + 3
    bool n_at_least_q_plus_k = false;
    bool q_prime = false;
    bool k_at_most_sqrt_q = false;
    /// dim = n - 2. The optimality argument needs dim <= n - 3, and on such
    /// codes the radius can exceed the formula, so no label is issued.
    bool boundary_dimension = false;

    bool mds_condition() const { return n_at_least_q_plus_k || q_prime || k_at_most_sqrt_q; }
    bool satisfied() const { return k_in_range && long_code && mds_condition() && !boundary_dimension; }
};

TheoremHypotheses theorem_hypotheses(const Curve& curve, const EvalSet& d, int k, Side side);

struct DeepHoleFamily {
    CurvePoint point;
    Side side = Side::Functional;
    int k = 0;
    Guarantee guarantee = Guarantee::Bfs;
    std::string label;                   // the function or constraint set used
    std::vector<Word> representatives;   // one per coset, q - 1 of them
    std::uint64_t coset_count = 0;
    std::uint64_t word_count = 0;        // coset_count * q^dim, saturating
};

/// ev(c h), c in GF(q)*, with h spanning L(kO + P) / L(kO).
/// Requires P outside D and 2 <= k <= n - 2.
DeepHoleFamily construct_functional_deep_holes(const Curve& curve, const EvalSet& d, int k, const CurvePoint& p);

/// (|E| - n)(q - 1) q^k, saturating.
std::uint64_t functional_deep_hole_total(const Curve& curve, const EvalSet& d, int k);
/// (|E| - n)(q - 1) q^(n-k), saturating.
std::uint64_t residue_deep_hole_total(const Curve& curve, const EvalSet& d, int k);

/// Some word of C_Omega(D, kO - P) outside C_Omega(D, kO).
Word residue_family_word(const Curve& curve, const EvalSet& d, int k, const CurvePoint& p);

/// c v for c in GF(q)*, v = residue_family_word. Requires the residue code's
/// covering radius to be verified as k - 1 (by the hypotheses or by `analysis`).
DeepHoleFamily construct_residue_deep_holes(const Curve& curve, const EvalSet& d, int k, const CurvePoint& p,
                                            CodeAnalysis& analysis);

/// Pairwise distinct syndromes across all representatives of all families.
bool families_pairwise_distinct(const LinearCode& code, const std::vector<DeepHoleFamily>& families);

enum class SyndromePattern { SingleRow, Scaled };

struct SyndromeIdentity {
    Vector syndrome;                // H(k) w^T, rows ascending by pole order
    Elem b = 0;                     // coordinate sum of w
    SyndromePattern pattern = SyndromePattern::SingleRow;
    std::size_t row = 0;            // SingleRow: row of the monomial of pole order k
    Vector expected;                // Scaled: b phi_k(P) in the same row order
};

/// Checks w in C_Omega(D, kO - P) \ C_Omega(D, kO) (HypothesisViolation if not)
/// and the closed form of its syndrome (InternalInvariant if violated).
SyndromeIdentity verify_syndrome_identity(const Curve& curve, const EvalSet& d, int k, const Word& w,
                                          const CurvePoint& p);

enum class Verdict { Holds, Fails };

std::string verdict_name(Verdict v);

struct CompletenessReport {
    int k = 0;
    std::size_t n = 0;
    int covering_radius = 0;
    std::uint64_t deep_hole_cosets = 0;
    std::uint64_t constructed_cosets = 0;
    std::uint64_t constructed_deep = 0;  // constructed cosets that are deep
    Verdict verdict = Verdict::Holds;
    std::optional<Word> counterexample;  // a deep hole outside the constructed cosets
};

/// With D = E \ {O}, compares all deep-hole cosets of C_L(D, kO) with the q - 1
/// cosets built from P = O. A report, never an assertion.
/// Requires |E| >= q + 4 and 2 <= k <= |E| - 4.
CompletenessReport completeness_check(const Curve& curve, int k, Budget budget = {});

/// Position map i -> index of T^{-1}(P_i). Throws InvalidArgument if T does not fix D.
std::vector<std::size_t> coordinate_permutation(const Curve& curve, const EvalSet& d, const Automorphism& aut);

/// The word (w_{index(T^{-1}(P_i))})_i.
Word automorphism_action(const Curve& curve, const EvalSet& d, const Automorphism& aut, const Word& w);

/// A pair of points whose families in C_L(D, kO) coincide (only possible for k = n - 2).
struct FamilyMerge {
    CurvePoint first;
    CurvePoint second;
};

/// Pairs P < Q outside D with D - kO - P - Q principal, each confirmed by
/// equality of C_L(D, kO + P) and C_L(D, kO + Q). Empty unless k = n - 2.
std::vector<FamilyMerge> coincident_families(const Curve& curve, const EvalSet& d, int k);

struct RsDeepHoleClass {
    std::optional<Elem> pole;  // nullopt: the point at infinity
    std::string label;
    std::vector<Word> words;   // c f over c in GF(q)*
};

/// x^k and c / (x - a) for a outside the support. Requires 1 <= k < |support|.
std::vector<RsDeepHoleClass> rs_deep_hole_classes(const FieldPtr& field, const std::vector<Elem>& support, int k);

}  // namespace ellidh
