#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tlr/matrix.hpp"
#include "tlr/rational.hpp"

namespace tlr {

/// Guard for exact enumeration routines: q^k (or any enumeration count) must
/// stay at or below this. Overridable with the TLR_GUARD_MAX environment
/// variable.
std::uint64_t enumeration_guard_max();

/// Throws GuardError unless q^k <= guard; returns q^k.
std::uint64_t checked_message_count(std::uint64_t q, std::size_t k, const char* what);

/// A linear code F_q^k -> F_q^n given by its generator matrix G (n x k),
/// encoding x to G*x. Immutable in spirit: treat as a value.
struct LinearCode {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix generator;  // n x k
    bool systematic = false;
    /// Set when systematization had to reorder coordinates: position j of
    /// this code corresponds to coordinate permutation[j] of the original.
    std::optional<std::vector<std::size_t>> permutation;

    std::vector<fe_t> encode(const std::vector<fe_t>& msg) const;
    Rational rate() const { return Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)); }
};

/// Message with index v in [0, q^k): big-endian base-q digits, so enumeration
/// order equals lexicographic order of message vectors.
std::vector<fe_t> message_from_index(std::uint64_t v, std::uint64_t q, std::size_t k);
std::uint64_t index_from_message(const std::vector<fe_t>& msg, std::uint64_t q);

/// Reed-Solomon [n, k] over GF(q), n <= q, evaluating degree-<k polynomials
/// at the first n field elements in value order.
LinearCode rs_code(FieldPtr field, std::size_t n, std::size_t k);

/// Uniformly random generator entries, resampled until the code is injective
/// (rank k). Deterministic per seed.
LinearCode random_linear_code(FieldPtr field, std::size_t n, std::size_t k, std::uint64_t seed);

LinearCode repetition_code(FieldPtr field, std::size_t n);
LinearCode identity_code(FieldPtr field, std::size_t n);

/// Equivalent code whose generator has an identity top block, permuting
/// coordinates when the first k are not an information set. The permutation
/// (if any) maps new positions to original coordinates.
LinearCode systematize(const LinearCode& code);

/// Exact minimum Hamming weight over nonzero codewords (= minimum distance
/// of a linear code). Enumerates q^k - 1 messages behind the guard.
std::size_t min_distance(const LinearCode& code);
Rational relative_distance(const LinearCode& code);

/// All q^k codewords in message-index order. Shared by the brute-force
/// recovery oracle and the distance routines.
std::vector<std::vector<fe_t>> enumerate_codewords(const LinearCode& code);

}  // namespace tlr
