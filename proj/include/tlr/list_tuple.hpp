#pragma once

#include <cstddef>
#include <vector>

#include "tlr/field.hpp"
#include "tlr/rational.hpp"

namespace tlr {

/// Per-coordinate candidate sets: sets[i] is the sorted set of symbols the
/// channel offers for coordinate i. Channel-produced tuples always have
/// nonempty sets of size <= ell; tuples assembled mid-pipeline (inner
/// recovery in concatenation) may carry empty sets, which every codeword
/// misses by definition.
struct ListTuple {
    std::size_t n = 0;
    std::size_t ell = 0;
    std::vector<std::vector<fe_t>> sets;

    bool operator==(const ListTuple& other) const = default;

    /// True iff `sym` is offered at coordinate i (binary search).
    bool contains(std::size_t i, fe_t sym) const;

    /// Enforces the channel invariants: n sets, each nonempty, sorted,
    /// deduplicated, of size <= ell. Throws ValidationError.
    void validate(const Field& f) const;
};

/// Canonicalizes sets in place: sorts and deduplicates.
void canonicalize(ListTuple& tuple);

/// Recovery parameters (error radius, input list size, optional output
/// bound used for verification).
struct RecoveryParams {
    Rational alpha{0};
    std::size_t ell = 1;
    std::uint64_t list_bound = 0;  // 0 = unknown
};

/// Fraction of coordinates where x_i is not offered: |{i : x_i not in S_i}| / n.
Rational dist_to_lists(const std::vector<fe_t>& x, const ListTuple& tuple);

/// Hamming distance fraction between equal-length words.
Rational dist_words(const std::vector<fe_t>& x, const std::vector<fe_t>& y);

}  // namespace tlr
