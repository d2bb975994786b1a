#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tlr/field.hpp"

namespace tlr {

/// Dense row-major matrix over a GF(2^s). The field is passed to operations
/// rather than stored.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<fe_t> a;  // rows * cols entries

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    fe_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    fe_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static Matrix identity(std::size_t n);

    bool operator==(const Matrix& other) const = default;
};

std::vector<fe_t> matvec(const Field& f, const Matrix& m, const std::vector<fe_t>& x);
Matrix matmul(const Field& f, const Matrix& lhs, const Matrix& rhs);
Matrix transpose(const Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Field& f, const Matrix& m);

/// Indices of a maximal set of linearly independent rows, greedily preferring
/// lower indices (so an identity prefix is always chosen first).
std::vector<std::size_t> independent_rows(const Field& f, const Matrix& m);

}  // namespace tlr
