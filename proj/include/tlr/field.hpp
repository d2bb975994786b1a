#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tlr/errors.hpp"

namespace tlr {

/// A field element of GF(2^s), s <= 16: the value's bits are the coefficients
/// of a polynomial over GF(2) in the basis {1, x, ..., x^{s-1}}.
using fe_t = std::uint16_t;

/// GF(2^s) with multiplication via discrete-log tables. Addition is XOR.
/// Immutable after construction and safe to share across threads.
class Field {
  public:
    /// Builds the field from a degree-s irreducible polynomial (bit i of
    /// `poly` is the coefficient of x^i). Throws ValidationError for a
    /// reducible polynomial, naming one factor.
    Field(int s, std::uint32_t poly);

    /// The shipped irreducible (in fact primitive) polynomial for GF(2^s).
    static std::uint32_t default_poly(int s);
    static Field with_default_poly(int s) { return Field(s, default_poly(s)); }

    int s() const { return s_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t poly() const { return poly_; }

    fe_t add(fe_t a, fe_t b) const { return a ^ b; }
    fe_t sub(fe_t a, fe_t b) const { return a ^ b; }

    fe_t mul(fe_t a, fe_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return antilog_[e];
    }

    /// Multiplicative inverse; throws ValidationError on 0.
    fe_t inv(fe_t a) const;

    fe_t div(fe_t a, fe_t b) const { return mul(a, inv(b)); }

    /// a^e with a^0 = 1 (also for a = 0).
    fe_t pow(fe_t a, std::uint64_t e) const;

    bool contains(std::uint32_t v) const { return v < q_; }

    bool operator==(const Field& other) const { return s_ == other.s_ && poly_ == other.poly_; }

    const std::vector<fe_t>& log_table() const { return log_; }
    const std::vector<fe_t>& antilog_table() const { return antilog_; }

  private:
    int s_;
    std::uint32_t q_;
    std::uint32_t poly_;
    std::vector<fe_t> log_;      // index a in [1, q), value in [0, q-1)
    std::vector<fe_t> antilog_;  // length q-1, antilog_[log_[a]] == a
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(int s, std::uint32_t poly);
FieldPtr make_field(int s);

/// Carry-less polynomial product reduced mod `poly` (degree s). Used to
/// bootstrap table construction and by tests as an independent multiplier.
fe_t polymul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int s);

}  // namespace tlr
