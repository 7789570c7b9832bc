#include "ellidh/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "ellidh/error.hpp"

namespace ellidh {

namespace {

using Poly = std::vector<std::uint32_t>;  // degree-ascending over GF(p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(b[i])) % p);
        }
        trim(a);
    }
    return a;
}

// Monic polynomial of degree d whose non-leading coefficients encode `index` in base p.
Poly monic_from_index(std::uint64_t index, std::uint32_t d, std::uint32_t p) {
    Poly poly(d + 1, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
        poly[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    poly[d] = 1;
    return poly;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

std::uint64_t FieldSpec::order() const { return ipow(p, m); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const auto deg = static_cast<std::uint32_t>(f.size() - 1);
    if (deg == 1) return true;
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
        }
    }
    return true;
}

bool same_field(const Field& a, const Field& b) { return &a == &b || a.spec() == b.spec(); }

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    require(is_prime(p), ErrorCode::FieldInvalid, "characteristic " + std::to_string(p) + " is not prime");
    require(p != 2, ErrorCode::FieldInvalid, "characteristic 2 is not supported");
    require(m >= 1, ErrorCode::FieldInvalid, "extension degree must be at least 1");
    FieldSpec spec{p, m, {}};
    require(spec.order() <= kMaxFieldOrder, ErrorCode::FieldInvalid,
            "field order " + std::to_string(spec.order()) + " exceeds supported maximum");

    if (m > 1) {
        if (modulus) {
            Poly mod = *modulus;
            require(mod.size() == m + 1 && mod.back() == 1, ErrorCode::FieldInvalid,
                    "modulus must be monic of degree " + std::to_string(m));
            for (auto c : mod) require(c < p, ErrorCode::FieldInvalid, "modulus coefficient out of range");
            require(is_irreducible_mod_p(mod, p), ErrorCode::FieldInvalid, "modulus is reducible");
            spec.modulus = std::move(mod);
        } else {
            const std::uint64_t count = ipow(p, m);
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                Poly candidate = monic_from_index(idx, m, p);
                if (is_irreducible_mod_p(candidate, p)) {
                    spec.modulus = std::move(candidate);
                    break;
                }
            }
        }
    } else if (modulus && !modulus->empty()) {
        const Poly& mod = *modulus;
        require(mod.size() == 2 && mod[1] == 1 && mod[0] < p, ErrorCode::FieldInvalid,
                "prime-field modulus must be monic linear");
    }
    return FieldPtr(new Field(std::move(spec)));
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    const std::uint32_t p = spec_.p;
    const std::uint32_t m = spec_.m;
    q_ = static_cast<std::uint32_t>(spec_.order());

    std::vector<Poly> coeffs(q_);
    for (Elem a = 0; a < q_; ++a) coeffs[a] = coefficients(a);

    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    sqrt_.assign(q_, {});

    for (Elem a = 0; a < q_; ++a) {
        Poly n(m);
        for (std::uint32_t i = 0; i < m; ++i) n[i] = (p - coeffs[a][i]) % p;
        neg_[a] = from_coefficients(n);
        for (Elem b = 0; b < q_; ++b) {
            Poly s(m);
            for (std::uint32_t i = 0; i < m; ++i) s[i] = (coeffs[a][i] + coeffs[b][i]) % p;
            add_[a * q_ + b] = from_coefficients(s);

            Poly prod(2 * m - 1, 0);
            for (std::uint32_t i = 0; i < m; ++i) {
                for (std::uint32_t j = 0; j < m; ++j) {
                    prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(coeffs[a][i]) * coeffs[b][j]) % p);
                }
            }
            if (m > 1) prod = poly_mod(std::move(prod), spec_.modulus, p);
            prod.resize(m, 0);
            mul_[a * q_ + b] = from_coefficients(prod);
        }
    }
    for (Elem a = 1; a < q_; ++a) {
        for (Elem b = 1; b < q_; ++b) {
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = b;
                break;
            }
        }
    }
    for (Elem y = 0; y < q_; ++y) sqrt_[mul_[y * q_ + y]].push_back(y);
}

Elem Field::from_int(std::int64_t value) const {
    const auto p = static_cast<std::int64_t>(spec_.p);
    return static_cast<Elem>(((value % p) + p) % p);
}

Elem Field::inv(Elem a) const {
    check(a);
    require(a != 0, ErrorCode::DivisionByZero, "inverse of zero");
    return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q_);
    for (Elem a = 0; a < q_; ++a) out[a] = a;
    return out;
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
    std::vector<std::uint32_t> out(spec_.m);
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        out[i] = a % spec_.p;
        a /= spec_.p;
    }
    return out;
}

Elem Field::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
    require(coeffs.size() == spec_.m, ErrorCode::InvalidArgument, "coefficient vector has wrong length");
    Elem value = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        require(coeffs[i] < spec_.p, ErrorCode::InvalidArgument, "coefficient out of range");
        value = value * spec_.p + coeffs[i];
    }
    return value;
}

void Field::check(Elem a) const {
    require(a < q_, ErrorCode::InvalidArgument, "element " + std::to_string(a) + " not in GF(" + std::to_string(q_) + ")");
}

std::string Field::to_string(Elem a) const {
    if (is_prime_field()) return std::to_string(a);
    std::ostringstream os;
    os << '[';
    const auto c = coefficients(a);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    require(field_ != nullptr, ErrorCode::InvalidArgument, "null field");
    field_->check(value_);
}

const Field& FieldElement::checked_peer(const FieldElement& other) const {
    require(same_field(*field_, *other.field_), ErrorCode::FieldMismatch, "operands belong to different fields");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    return {field_, checked_peer(other).add(value_, other.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    return {field_, checked_peer(other).sub(value_, other.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    return {field_, checked_peer(other).mul(value_, other.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
    return {field_, checked_peer(other).div(value_, other.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

std::vector<FieldElement> FieldElement::sqrt() const {
    std::vector<FieldElement> out;
    for (Elem r : field_->sqrt(value_)) out.emplace_back(field_, r);
    return out;
}

bool FieldElement::operator==(const FieldElement& other) const {
    return same_field(*field_, *other.field_) && value_ == other.value_;
}

}  // namespace ellidh
