#pragma once

#include <cstdint>
#include <vector>

#include "tlr/linear_code.hpp"
#include "tlr/list_tuple.hpp"

namespace tlr {

/// Exactly the set { x : dist(C(x), S) <= alpha }, as message vectors sorted
/// in canonical (lexicographic) order. This brute-force oracle grounds every
/// local-recovery guarantee in the project.
std::vector<std::vector<fe_t>> brute_force_list_recover(const LinearCode& code, const ListTuple& tuple,
                                                        const Rational& alpha);

/// Same, against a precomputed codeword table (message-index order). Used by
/// the inner loops of the local recoverers.
std::vector<std::uint64_t> list_recover_indices(const std::vector<std::vector<fe_t>>& codewords,
                                                const ListTuple& tuple, const Rational& alpha);

/// Max observed output-list size over seeded uniformly random tuples.
std::size_t estimate_list_size(const LinearCode& code, const Rational& alpha, std::size_t ell, std::size_t trials,
                               std::uint64_t seed);

enum class CorruptMode { Filled, Sparse };

/// Seeded channel: picks exactly floor(alpha*n) coordinates where the true
/// symbol is excluded and ell distinct decoys stand in; elsewhere the true
/// symbol is present, padded to ell candidates in Filled mode and left alone
/// in Sparse mode. dist(codeword, result) == floor(alpha*n)/n exactly.
ListTuple corrupt_to_lists(const std::vector<fe_t>& codeword, const Field& field, const Rational& alpha,
                           std::size_t ell, std::uint64_t seed, CorruptMode mode);

/// Uniformly random tuple: each coordinate an independent random ell-subset.
ListTuple random_tuple(std::size_t n, const Field& field, std::size_t ell, std::uint64_t seed);

/// Wraps a word as the tuple of singletons, for list decoding (ell = 1).
ListTuple singleton_tuple(const std::vector<fe_t>& word);

}  // namespace tlr
