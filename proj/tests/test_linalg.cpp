#include <doctest.h>

#include <random>

#include "ellidh/linalg.hpp"

using namespace ellidh;

namespace {

Matrix random_matrix(std::mt19937& rng, const Field& f, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<Elem> d(0, f.order() - 1);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("rank plus nullity equals the column count") {
    std::mt19937 rng(7);
    for (auto fp : {Field::make(3), Field::make(5), Field::make(3, 2)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = 1 + trial % 5, c = 2 + trial % 6;
            const Matrix m = random_matrix(rng, *fp, r, c);
            const Matrix ns = null_space(*fp, m);
            CHECK(rank(*fp, m) + ns.rows() == c);
            CHECK(rank(*fp, ns) == ns.rows());
            for (std::size_t i = 0; i < ns.rows(); ++i) CHECK(is_zero(mul_vec(*fp, m, ns.row(i))));
        }
    }
}

TEST_CASE("rank of a small matrix over GF(5)") {
    auto f = Field::make(5);
    const Matrix m = Matrix::from_rows({{1, 2, 3}, {0, 1, 1}, {1, 3, 4}}, 3);
    // Row 3 = row 1 + row 2.
    CHECK(rank(*f, m) == 2);
    CHECK(in_row_space(*f, m, Vector{0, 0, 0}));
    CHECK(in_row_space(*f, m, Vector{1, 3, 4}));
}

TEST_CASE("solve returns a preimage when one exists") {
    std::mt19937 rng(11);
    auto f = Field::make(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix a = random_matrix(rng, *f, 3, 5);
        Vector x(5);
        for (auto& e : x) e = rng() % 7;
        const Vector b = mul_vec(*f, a, x);
        auto sol = solve(*f, a, b);
        REQUIRE(sol.has_value());
        CHECK(mul_vec(*f, a, *sol) == b);
    }
    const Matrix zero(2, 2);
    CHECK_FALSE(solve(*f, zero, Vector{1, 0}).has_value());
}

TEST_CASE("row spaces compare independent of basis") {
    auto f = Field::make(5);
    const Matrix a = Matrix::from_rows({{1, 0, 2}, {0, 1, 3}}, 3);
    const Matrix b = Matrix::from_rows({{1, 1, 0}, {2, 1, 2}}, 3);
    CHECK(same_row_space(*f, a, b));
    CHECK_FALSE(same_row_space(*f, a, Matrix::from_rows({{1, 0, 0}, {0, 1, 0}}, 3)));
    CHECK(hamming_weight(Vector{0, 3, 0, 1}) == 2);
}
