#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tlr/linear_code.hpp"

namespace tlr {

/// Multi-index <-> flat index, row-major: (i_1, ..., i_t) maps to
/// sum_j i_j * n^(t-j). This single convention governs tensor coordinates,
/// serialization order and the systematic message cells.
std::size_t flat_of(const std::vector<std::size_t>& multi, std::size_t n);
std::vector<std::size_t> multi_of(std::size_t flat, std::size_t n, std::size_t t);

/// The t-fold tensor power of a linear code. Codewords are t-dimensional
/// arrays over [n]^t whose every axis-line lies in the base code; stored
/// flat in row-major order. Rate is (k/n)^t.
struct TensorCode {
    LinearCode base;
    std::size_t t = 1;
    std::size_t n_total = 0;
    std::size_t k_total = 0;

    /// Encode a flat message over [k]^t by applying the base generator along
    /// each axis in turn (mode products; no giant Kronecker matrix).
    std::vector<fe_t> encode(const std::vector<fe_t>& msg) const;

    bool systematic() const { return base.systematic; }

    /// For a systematic base: flat message index (radix k digits) -> flat
    /// codeword coordinate (same digits, radix n). These are the coordinates
    /// that carry the message verbatim.
    std::size_t message_cell(std::size_t msg_flat) const;

    /// Whether a codeword coordinate is a message cell (all digits < k);
    /// returns the flat message index if so.
    std::optional<std::size_t> message_index_of(std::size_t codeword_flat) const;
};

TensorCode tensor_power(const LinearCode& base, std::size_t t);

/// (C1 (x) C2)(M) = G1 * M * G2^T: the two-code tensor product of a k1 x k2
/// message matrix. Columns of the result lie in C1, rows in C2.
Matrix tensor2_encode(const LinearCode& c1, const LinearCode& c2, const Matrix& msg);

/// Materializes the tensor power as an explicit generator matrix, behind the
/// enumeration guard. Row (i_1..i_t), column (j_1..j_t) holds the product of
/// base generator entries.
LinearCode to_linear_code(const TensorCode& code);

}  // namespace tlr
