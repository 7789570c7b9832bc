#pragma once

// Dense linear algebra over GF(q) on Elem handles.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ellidh/finite_field.hpp"

namespace ellidh {

using Vector = std::vector<Elem>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }
    Vector column(std::size_t c) const;
    std::vector<Vector> row_list() const;

    void append_row(std::span<const Elem> values);
    Matrix transpose() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct EchelonForm {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank() const { return pivots.size(); }
};

EchelonForm rref(const Field& f, const Matrix& m);
std::size_t rank(const Field& f, const Matrix& m);
std::size_t rank_of(const Field& f, const std::vector<Vector>& vectors);

/// Basis of {v : m v^T = 0}, one row per free column, in reduced form.
Matrix null_space(const Field& f, const Matrix& m);

/// m v^T.
Vector mul_vec(const Field& f, const Matrix& m, std::span<const Elem> v);
/// x m (row vector times matrix).
Vector vec_mul(const Field& f, std::span<const Elem> x, const Matrix& m);
/// m a^T for every row pair: m * a^T.
Matrix mul_transpose(const Field& f, const Matrix& m, const Matrix& a);

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vector add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vector sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vector scale(const Field& f, Elem c, std::span<const Elem> a);
bool is_zero(std::span<const Elem> v);
std::size_t hamming_weight(std::span<const Elem> v);

/// Some x with m x^T = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Field& f, const Matrix& m, std::span<const Elem> b);

/// Whether v lies in the row space of m.
bool in_row_space(const Field& f, const Matrix& m, std::span<const Elem> v);
/// Equal row spaces.
bool same_row_space(const Field& f, const Matrix& a, const Matrix& b);

}  // namespace ellidh
