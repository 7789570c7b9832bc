#include "ellidh/coset_analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ellidh/error.hpp"

namespace ellidh {

namespace {

constexpr std::uint8_t kUnvisited = std::numeric_limits<std::uint8_t>::max();

// Visits every codeword x G in odometer order, updating incrementally.
// The callback returns false to stop early.
template <typename Callback>
void for_each_codeword(const LinearCode& code, Budget budget, Callback&& callback) {
    const Field& f = code.field();
    const std::size_t dim = code.dimension();
    const std::size_t n = code.length();
    const std::uint64_t total = saturating_pow(f.order(), dim);
    require(total <= budget.max_states, ErrorCode::BudgetExceeded,
            "codeword scan needs " + std::to_string(total) + " states, budget is " + std::to_string(budget.max_states));
    const Matrix& g = code.generator();
    std::vector<Elem> digits(dim, 0);
    Word word(n, 0);
    if (!callback(word)) return;
    const Elem last = f.order() - 1;
    for (;;) {
        std::size_t i = 0;
        while (i < dim && digits[i] == last) {
            // Wrap q-1 -> 0.
            const Elem delta = f.neg(last);
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, g(i, j)));
            digits[i] = 0;
            ++i;
        }
        if (i == dim) return;
        const Elem delta = f.sub(digits[i] + 1, digits[i]);
        for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, g(i, j)));
        ++digits[i];
        if (!callback(word)) return;
    }
}

std::size_t hamming_distance(const Word& a, const Word& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i)) return std::numeric_limits<std::uint64_t>::max();
        r = r * (n - k + i) / i;
    }
    return r;
}

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

// One "u_S outside rowspace(G_S)" requirement: some listed form must be nonzero.
struct SubsetConstraint {
    std::vector<std::vector<std::pair<std::size_t, Elem>>> forms;  // (search depth, coefficient)
};

class WordSearch {
public:
    WordSearch(const LinearCode& code, int w, Budget budget) : code_(code), f_(code.field()), budget_(budget) {
        const std::size_t n = code.length();
        const EchelonForm e = rref(f_, code.generator());
        std::vector<int> depth(n, -1);
        std::vector<bool> is_pivot(n, false);
        for (auto c : e.pivots) is_pivot[c] = true;
        for (std::size_t pos = 0; pos < n; ++pos) {
            if (is_pivot[pos]) continue;
            depth[pos] = static_cast<int>(rest_.size());
            rest_.push_back(pos);
        }
        by_depth_.resize(rest_.size());

        const auto s = static_cast<std::size_t>(static_cast<int>(n) - w + 1);
        const std::uint64_t subsets = binomial(n, s);
        require(subsets <= budget_.max_states, ErrorCode::BudgetExceeded,
                "word search needs " + std::to_string(subsets) + " subset constraints");

        std::vector<std::size_t> comb(s);
        std::iota(comb.begin(), comb.end(), 0);
        const Matrix& g = code.generator();
        do {
            Matrix gs(g.rows(), s);
            for (std::size_t r = 0; r < g.rows(); ++r)
                for (std::size_t i = 0; i < s; ++i) gs(r, i) = g(r, comb[i]);
            const Matrix z = null_space(f_, gs);
            SubsetConstraint constraint;
            int last = -1;
            for (std::size_t zr = 0; zr < z.rows(); ++zr) {
                std::vector<std::pair<std::size_t, Elem>> form;
                for (std::size_t i = 0; i < s; ++i) {
                    const int d = depth[comb[i]];
                    if (d < 0 || z(zr, i) == 0) continue;
                    form.emplace_back(static_cast<std::size_t>(d), z(zr, i));
                    last = std::max(last, d);
                }
                if (!form.empty()) constraint.forms.push_back(std::move(form));
            }
            if (constraint.forms.empty()) {
                impossible_ = true;
                return;
            }
            by_depth_[static_cast<std::size_t>(last)].push_back(std::move(constraint));
        } while (next_combination(comb, n));
        values_.assign(rest_.size(), 0);
    }

    std::optional<Word> run() {
        if (impossible_) return std::nullopt;
        if (!descend(0, false)) return std::nullopt;
        Word u(code_.length(), 0);
        for (std::size_t d = 0; d < rest_.size(); ++d) u[rest_[d]] = values_[d];
        return u;
    }

private:
    bool satisfied(std::size_t depth) const {
        for (const auto& constraint : by_depth_[depth]) {
            bool ok = false;
            for (const auto& form : constraint.forms) {
                Elem acc = 0;
                for (const auto& [d, coef] : form) acc = f_.add(acc, f_.mul(coef, values_[d]));
                if (acc != 0) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    bool descend(std::size_t depth, bool seen_nonzero) {
        if (depth == rest_.size()) return true;
        // Scaling normalization: the first nonzero free coordinate is 1.
        const Elem limit = seen_nonzero ? f_.order() : 2;
        for (Elem v = 0; v < limit; ++v) {
            require(++nodes_ <= budget_.max_states, ErrorCode::BudgetExceeded,
                    "word search exceeded " + std::to_string(budget_.max_states) + " nodes");
            values_[depth] = v;
            if (satisfied(depth) && descend(depth + 1, seen_nonzero || v != 0)) return true;
        }
        values_[depth] = 0;
        return false;
    }

    const LinearCode& code_;
    const Field& f_;
    Budget budget_;
    std::vector<std::size_t> rest_;
    std::vector<std::vector<SubsetConstraint>> by_depth_;
    std::vector<Elem> values_;
    std::uint64_t nodes_ = 0;
    bool impossible_ = false;
};

}  // namespace

std::uint64_t saturating_pow(std::uint64_t q, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        r *= q;
    }
    return r;
}

std::uint64_t CosetTable::index_of(const Vector& syndrome) const {
    require(syndrome.size() == redundancy_, ErrorCode::InvalidArgument, "syndrome length mismatch");
    std::uint64_t idx = 0;
    for (std::size_t i = redundancy_; i-- > 0;) {
        require(syndrome[i] < q_, ErrorCode::InvalidArgument, "syndrome entry out of range");
        idx = idx * q_ + syndrome[i];
    }
    return idx;
}

Vector CosetTable::syndrome_at(std::uint64_t index) const {
    Vector s(redundancy_);
    for (std::size_t i = 0; i < redundancy_; ++i) {
        s[i] = static_cast<Elem>(index % q_);
        index /= q_;
    }
    return s;
}

int CosetTable::error_distance(const Word& u) const { return leader_weight(code_.syndrome(u)); }

std::vector<std::uint64_t> CosetTable::weight_distribution() const {
    std::vector<std::uint64_t> dist(static_cast<std::size_t>(radius_) + 1, 0);
    for (auto w : weights_) ++dist[w];
    return dist;
}

CosetTable build_coset_table(const LinearCode& code, Budget budget) {
    const Field& f = code.field();
    const std::size_t n = code.length();
    const std::size_t r = code.redundancy();
    require(code.dimension() >= 1, ErrorCode::InvalidArgument, "coset analysis needs a nonzero code");
    require(n < kUnvisited, ErrorCode::InvalidArgument, "code length too large for the coset table");
    const std::uint32_t q = f.order();
    const std::uint64_t total = saturating_pow(q, r);
    require(total <= budget.max_states, ErrorCode::BudgetExceeded,
            "syndrome table needs " + std::to_string(total) + " states, budget is " + std::to_string(budget.max_states));

    CosetTable table;
    table.code_ = code;
    table.q_ = q;
    table.redundancy_ = r;
    table.weights_.assign(total, kUnvisited);
    table.weights_[0] = 0;

    // Scaled columns a * h_j as digit vectors, a = 1..q-1.
    const Matrix& h = code.parity_check();
    std::vector<std::vector<Elem>> steps;
    for (std::size_t j = 0; j < n; ++j) {
        for (Elem a = 1; a < q; ++a) {
            std::vector<Elem> col(r);
            for (std::size_t i = 0; i < r; ++i) col[i] = f.mul(a, h(i, j));
            steps.push_back(std::move(col));
        }
    }

    std::vector<std::uint64_t> frontier{0};
    std::vector<Elem> digits(r);
    int layer = 0;
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t s : frontier) {
            std::uint64_t rem = s;
            for (std::size_t i = 0; i < r; ++i) {
                digits[i] = static_cast<Elem>(rem % q);
                rem /= q;
            }
            for (const auto& step : steps) {
                std::uint64_t idx = 0;
                for (std::size_t i = r; i-- > 0;) idx = idx * q + f.add(digits[i], step[i]);
                if (table.weights_[idx] == kUnvisited) {
                    table.weights_[idx] = static_cast<std::uint8_t>(layer + 1);
                    next.push_back(idx);
                }
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
        ++layer;
    }
    require(std::find(table.weights_.begin(), table.weights_.end(), kUnvisited) == table.weights_.end(),
            ErrorCode::InvalidArgument, "parity-check matrix does not span the syndrome space");
    table.radius_ = layer;
    return table;
}

int min_distance(const LinearCode& code, Budget budget) {
    require(code.dimension() >= 1, ErrorCode::InvalidArgument, "minimum distance of the zero code");
    std::size_t best = code.length();
    bool first = true;
    for_each_codeword(code, budget, [&](const Word& w) {
        if (first) {
            first = false;
            return true;
        }
        best = std::min(best, hamming_weight(w));
        return best > 1;
    });
    return static_cast<int>(best);
}

int error_distance_by_scan(const LinearCode& code, const Word& u, Budget budget) {
    require(u.size() == code.length(), ErrorCode::InvalidArgument, "word length does not match code length");
    std::size_t best = code.length();
    for_each_codeword(code, budget, [&](const Word& c) {
        best = std::min(best, hamming_distance(u, c));
        return best > 0;
    });
    return static_cast<int>(best);
}

std::optional<Word> find_word_at_distance(const LinearCode& code, int w, Budget budget) {
    if (w <= 0) return Word(code.length(), 0);
    if (w > static_cast<int>(code.redundancy())) return std::nullopt;
    if (code.dimension() == 0) return Word(code.length(), 1);
    WordSearch search(code, w, budget);
    return search.run();
}

std::string engine_name(RadiusEngine engine) {
    return engine == RadiusEngine::SyndromeBfs ? "bfs" : "word-search";
}

CoveringRadius compute_covering_radius(const LinearCode& code, Budget budget) {
    const std::uint64_t states = saturating_pow(code.field().order(), code.redundancy());
    if (states <= budget.max_states) return {build_coset_table(code, budget).radius(), RadiusEngine::SyndromeBfs, {}};
    for (int w = static_cast<int>(code.redundancy()); w >= 1; --w) {
        if (auto witness = find_word_at_distance(code, w, budget)) return {w, RadiusEngine::WordSearch, witness};
    }
    return {0, RadiusEngine::WordSearch, Word(code.length(), 0)};
}

int covering_radius(const LinearCode& code, Budget budget) { return compute_covering_radius(code, budget).radius; }

std::vector<Vector> enumerate_deep_hole_cosets(const CosetTable& table) {
    std::vector<Vector> out;
    for (std::uint64_t i = 0; i < table.size(); ++i)
        if (table.leader_weight(i) == table.radius()) out.push_back(table.syndrome_at(i));
    return out;
}

Word coset_representative(const LinearCode& code, const Vector& syndrome) {
    auto x = solve(code.field(), code.parity_check(), syndrome);
    require(x.has_value(), ErrorCode::InvalidArgument, "syndrome outside the column space of the parity check");
    return *x;
}

std::int64_t optimal_code_bound(std::int64_t n, std::int64_t dim, std::int64_t d, std::uint64_t q) {
    require(n >= 0 && dim >= 0 && d >= 0 && q >= 2, ErrorCode::InvalidArgument, "invalid code parameters");
    if (d == 0) return 0;
    const std::uint64_t qk = saturating_pow(q, static_cast<std::size_t>(dim));
    const auto ud = static_cast<std::uint64_t>(d);
    const std::uint64_t ceil_div = ud / qk + (ud % qk != 0 ? 1 : 0);
    return d - static_cast<std::int64_t>(ceil_div);
}

CodeAnalysis::CodeAnalysis(LinearCode code, Budget budget) : code_(std::move(code)), budget_(budget) {}

bool CodeAnalysis::table_feasible() const {
    return code_.dimension() >= 1 && saturating_pow(code_.field().order(), code_.redundancy()) <= budget_.max_states;
}

const CosetTable& CodeAnalysis::table() {
    if (!table_) table_ = build_coset_table(code_, budget_);
    return *table_;
}

int CodeAnalysis::min_distance() {
    if (!min_distance_) min_distance_ = ellidh::min_distance(code_, budget_);
    return *min_distance_;
}

const CoveringRadius& CodeAnalysis::covering_radius() {
    if (!radius_) {
        if (table_feasible()) {
            radius_ = CoveringRadius{table().radius(), RadiusEngine::SyndromeBfs, {}};
        } else {
            radius_ = compute_covering_radius(code_, budget_);
        }
    }
    return *radius_;
}

int CodeAnalysis::error_distance(const Word& u) {
    require(u.size() == code_.length(), ErrorCode::InvalidArgument, "word length does not match code length");
    if (table_feasible()) return table().error_distance(u);
    return error_distance_by_scan(code_, u, budget_);
}

bool CodeAnalysis::is_deep_hole(const Word& u) { return error_distance(u) == covering_radius().radius; }

std::vector<Vector> CodeAnalysis::deep_hole_syndromes() { return enumerate_deep_hole_cosets(table()); }

DistanceReport CodeAnalysis::report() {
    DistanceReport r;
    r.n = code_.length();
    r.dim = code_.dimension();
    r.min_distance = min_distance();
    const auto& cr = covering_radius();
    r.covering_radius = cr.radius;
    r.engine = cr.engine;
    const auto singleton = static_cast<int>(r.n - r.dim + 1);
    require(r.min_distance <= singleton, ErrorCode::InternalInvariant, "Singleton bound violated");
    r.is_mds = r.min_distance == singleton;
    r.is_near_mds = r.min_distance == singleton - 1;
    return r;
}

}  // namespace ellidh
