#include "ellidh/linalg.hpp"

#include <algorithm>

#include "ellidh/error.hpp"

namespace ellidh {

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, ErrorCode::InvalidArgument, "ragged matrix rows");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<Vector> Matrix::row_list() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
}

void Matrix::append_row(std::span<const Elem> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    require(values.size() == cols_, ErrorCode::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

EchelonForm rref(const Field& f, const Matrix& input) {
    Matrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const Elem inv = f.inv(m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Elem factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(0, m.cols());
    for (std::size_t i = 0; i < r; ++i) reduced.append_row(m.row(i));
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank(); }

std::size_t rank_of(const Field& f, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return 0;
    return rank(f, Matrix::from_rows(vectors, vectors.front().size()));
}

Matrix null_space(const Field& f, const Matrix& m) {
    const EchelonForm e = rref(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    Matrix basis(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
        basis.append_row(v);
    }
    return basis;
}

Vector mul_vec(const Field& f, const Matrix& m, std::span<const Elem> v) {
    require(v.size() == m.cols(), ErrorCode::InvalidArgument, "vector length does not match matrix columns");
    Vector out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(f, m.row(r), v);
    return out;
}

Vector vec_mul(const Field& f, std::span<const Elem> x, const Matrix& m) {
    require(x.size() == m.rows(), ErrorCode::InvalidArgument, "vector length does not match matrix rows");
    Vector out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (x[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(x[r], m(r, c)));
    }
    return out;
}

Matrix mul_transpose(const Field& f, const Matrix& m, const Matrix& a) {
    require(m.cols() == a.cols(), ErrorCode::InvalidArgument, "column count mismatch");
    Matrix out(m.rows(), a.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) out(i, j) = dot(f, m.row(i), a.row(j));
    return out;
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    require(a.size() == b.size(), ErrorCode::InvalidArgument, "dot product length mismatch");
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

Vector add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    require(a.size() == b.size(), ErrorCode::InvalidArgument, "vector length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vector sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    require(a.size() == b.size(), ErrorCode::InvalidArgument, "vector length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

Vector scale(const Field& f, Elem c, std::span<const Elem> a) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

bool is_zero(std::span<const Elem> v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

std::size_t hamming_weight(std::span<const Elem> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

std::optional<Vector> solve(const Field& f, const Matrix& m, std::span<const Elem> b) {
    require(b.size() == m.rows(), ErrorCode::InvalidArgument, "right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const EchelonForm e = rref(f, aug);
    Vector x(m.cols(), 0);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, m.cols());
    }
    return x;
}

bool in_row_space(const Field& f, const Matrix& m, std::span<const Elem> v) {
    if (m.rows() == 0) return is_zero(v);
    Matrix ext = m;
    ext.append_row(v);
    return rank(f, ext) == rank(f, m);
}

bool same_row_space(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    const std::size_t ra = rank(f, a);
    if (ra != rank(f, b)) return false;
    Matrix both = a;
    for (std::size_t r = 0; r < b.rows(); ++r) both.append_row(b.row(r));
    return rank(f, both) == ra;
}

}  // namespace ellidh
