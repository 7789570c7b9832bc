#pragma once

// Exact minimum distance, covering radius, error distance and deep-hole
// queries.
//
// Two engines decide covering radii:
//  * syndrome BFS: layer w+1 is layer w plus one scaled parity-check column.
//    Gives every coset-leader weight. Needs q^(n-dim) states.
//  * word search: backtracking for a word u with d(u, C) >= w. u is
//    normalized to vanish on an information set, and d(u, C) >= w iff for
//    every position set S with |S| = n-w+1, u_S is outside the row space of
//    G_S. Used when the syndrome space exceeds the budget.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellidh/ag_codes.hpp"

namespace ellidh {

struct Budget {
    /// Cap on syndrome-table states, codeword enumerations and search nodes.
    std::uint64_t max_states = 100'000'000;
};

/// q^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, std::size_t e);

class CosetTable {
public:
    const LinearCode& code() const { return code_; }
    std::uint64_t size() const { return weights_.size(); }
    int radius() const { return radius_; }

    std::uint64_t index_of(const Vector& syndrome) const;
    Vector syndrome_at(std::uint64_t index) const;
    int leader_weight(std::uint64_t index) const { return weights_[index]; }
    int leader_weight(const Vector& syndrome) const { return weights_[index_of(syndrome)]; }
    int error_distance(const Word& u) const;
    /// Number of syndromes with each leader weight 0..radius.
    std::vector<std::uint64_t> weight_distribution() const;

private:
    friend CosetTable build_coset_table(const LinearCode& code, Budget budget);

    LinearCode code_;
    std::uint32_t q_ = 0;
    std::size_t redundancy_ = 0;
    std::vector<std::uint8_t> weights_;
    int radius_ = 0;
};

/// Exhaustive BFS over all q^(n-dim) syndromes. Requires dim >= 1.
CosetTable build_coset_table(const LinearCode& code, Budget budget = {});

/// Smallest nonzero codeword weight by scanning all q^dim codewords.
int min_distance(const LinearCode& code, Budget budget = {});

/// min_c d(u, c) by scanning all codewords.
int error_distance_by_scan(const LinearCode& code, const Word& u, Budget budget = {});

/// A word at distance >= w from the code, or nullopt if none exists.
std::optional<Word> find_word_at_distance(const LinearCode& code, int w, Budget budget = {});

enum class RadiusEngine { SyndromeBfs, WordSearch };

std::string engine_name(RadiusEngine engine);

struct CoveringRadius {
    int radius = 0;
    RadiusEngine engine = RadiusEngine::SyndromeBfs;
    /// A word attaining the radius (always set by WordSearch; BFS leaves it empty).
    std::optional<Word> witness;
};

/// Syndrome BFS when q^(n-dim) fits the budget, word search otherwise.
CoveringRadius compute_covering_radius(const LinearCode& code, Budget budget = {});
int covering_radius(const LinearCode& code, Budget budget = {});

/// Syndromes whose leader weight equals the covering radius.
std::vector<Vector> enumerate_deep_hole_cosets(const CosetTable& table);

/// Some word with the given syndrome.
Word coset_representative(const LinearCode& code, const Vector& syndrome);

/// d - ceil(d / q^dim): covering radius bound for optimal codes.
std::int64_t optimal_code_bound(std::int64_t n, std::int64_t dim, std::int64_t d, std::uint64_t q);

struct DistanceReport {
    std::size_t n = 0;
    std::size_t dim = 0;
    int min_distance = 0;
    int covering_radius = 0;
    bool is_mds = false;
    bool is_near_mds = false;
    RadiusEngine engine = RadiusEngine::SyndromeBfs;
};

/// Caches the coset table and derived values for one code. Not thread-safe
/// while caches are being filled.
class CodeAnalysis {
public:
    explicit CodeAnalysis(LinearCode code, Budget budget = {});

    const LinearCode& code() const { return code_; }
    const Budget& budget() const { return budget_; }
    bool table_feasible() const;

    const CosetTable& table();
    int min_distance();
    const CoveringRadius& covering_radius();
    int error_distance(const Word& u);
    bool is_deep_hole(const Word& u);
    std::vector<Vector> deep_hole_syndromes();
    DistanceReport report();

private:
    LinearCode code_;
    Budget budget_;
    std::optional<CosetTable> table_;
    std::optional<int> min_distance_;
    std::optional<CoveringRadius> radius_;
};

}  // namespace ellidh
