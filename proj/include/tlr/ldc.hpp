#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tlr/field.hpp"
#include "tlr/oracle.hpp"
#include "tlr/rational.hpp"
#include "tlr/rng.hpp"

namespace tlr {

/// The randomness of one local-decode invocation, pinned down: the exact
/// positions that will be queried (in query order, repeats allowed) plus
/// whatever the combiner needs. Fetching `positions` and calling
/// decode_from_values IS the decode, so plan/execute equivalence holds by
/// construction.
struct LdcPlan {
    std::size_t index = 0;
    std::vector<std::size_t> positions;
};

/// A locally decodable pre-code: any message symbol is recoverable with at
/// most query_bound() reads of a word alpha-close to a codeword, with
/// success probability >= 2/3. Schemes are immutable; each invocation
/// carries its own randomness stream.
class LdcScheme {
  public:
    virtual ~LdcScheme() = default;
    virtual std::string name() const = 0;
    virtual std::size_t message_length() const = 0;
    virtual std::size_t block_length() const = 0;
    virtual std::size_t query_bound() const = 0;
    virtual Rational tolerated_alpha() const = 0;
    virtual std::vector<fe_t> encode(const std::vector<fe_t>& msg) const = 0;
    virtual LdcPlan plan(std::size_t index, Rng& rng) const = 0;
    virtual fe_t decode_from_values(const LdcPlan& plan, const std::vector<fe_t>& values) const = 0;
};

using LdcPtr = std::shared_ptr<const LdcScheme>;

/// Executes a plan against the oracle: at most query_bound() reads.
fe_t ldc_local_decode(const LdcScheme& scheme, std::size_t index, SymbolOracle& oracle, Rng& rng);

/// Rate-1 pipeline stub: encode is the identity, decoding reads position i
/// once, tolerates nothing.
LdcPtr identity_ldc(std::size_t message_length);

/// Classical 2-query scheme: encodes x to all inner products <x, a> over
/// a in F_q^kh; decodes x_i from f(a + e_i) - f(a) at a random a, amplified
/// by majority over `repetitions` (odd) independent probes. Tolerates 1/6.
LdcPtr hadamard_ldc(FieldPtr field, std::size_t message_length, std::size_t repetitions = 5);

}  // namespace tlr
