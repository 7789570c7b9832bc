#pragma once

// Exact arithmetic in GF(q), q = p^m with p an odd prime.
//
// Elements are identified with the integer sum_i c_i p^i of their
// degree-ascending coefficient vector (c_0, ..., c_{m-1}). That integer is the
// `Elem` handle used by all numeric kernels; ordering handles numerically is the
// lexicographic order with the constant term varying fastest. `FieldElement`
// wraps a handle together with its field for checked, operator-style use.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ellidh {

using Elem = std::uint32_t;

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    /// Monic modulus, degree-ascending, length m + 1. Empty for prime fields.
    std::vector<std::uint32_t> modulus;

    std::uint64_t order() const;
    bool operator==(const FieldSpec&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest field order supported; arithmetic is table driven.
inline constexpr std::uint64_t kMaxFieldOrder = 2048;

class Field {
public:
    /// Validates the parameters and builds the arithmetic tables. With m > 1
    /// and no modulus, picks the monic irreducible of degree m whose
    /// non-leading coefficients have the smallest integer encoding.
    static FieldPtr make(std::uint32_t p, std::uint32_t m = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t characteristic() const { return spec_.p; }
    std::uint32_t degree() const { return spec_.m; }
    std::uint32_t order() const { return q_; }
    bool is_prime_field() const { return spec_.m == 1; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// Image of an integer under Z -> GF(p) -> GF(q).
    Elem from_int(std::int64_t value) const;

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    /// Throws DivisionByZero for a = 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// All y with y^2 = a, ascending. Size 0, 1 or 2.
    const std::vector<Elem>& sqrt(Elem a) const { return sqrt_[a]; }
    bool is_square(Elem a) const { return !sqrt_[a].empty(); }

    /// All q elements in canonical order (0, 1, ..., q-1).
    std::vector<Elem> elements() const;

    std::vector<std::uint32_t> coefficients(Elem a) const;
    Elem from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

    bool contains(Elem a) const { return a < q_; }
    void check(Elem a) const;

    std::string to_string(Elem a) const;

private:
    explicit Field(FieldSpec spec);

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
    std::vector<std::vector<Elem>> sqrt_;
};

bool is_prime(std::uint64_t n);

/// Monic irreducibility test over GF(p); coefficients degree-ascending.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Same field: identical object or equal specs.
bool same_field(const Field& a, const Field& b);

/// A field element bound to its field. Arithmetic across different fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    const FieldPtr& field() const { return field_; }
    Elem value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator/(const FieldElement& other) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    std::vector<FieldElement> sqrt() const;

    bool operator==(const FieldElement& other) const;
    std::string to_string() const { return field_->to_string(value_); }

private:
    const Field& checked_peer(const FieldElement& other) const;

    FieldPtr field_;
    Elem value_;
};

}  // namespace ellidh
