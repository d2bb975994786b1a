#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "tlr/allr.hpp"
#include "tlr/ldc.hpp"

namespace tlr {

/// A message pre-encoded with a locally decodable code and then carried by a
/// systematic tensor power: F^kh -> F^(n^t). The pre-code's block is laid out
/// over the leading tensor message cells; unused trailing cells are zero.
struct ComposedCode {
    TensorCode tensor;  // systematic base required
    LdcPtr ldc;

    std::size_t message_length() const { return ldc->message_length(); }
    std::size_t block_length() const { return tensor.n_total; }
    std::vector<fe_t> encode(const std::vector<fe_t>& msg) const;

    /// Pre-code position -> tensor codeword coordinate carrying it verbatim
    /// (the systematic bridge).
    std::size_t bridge(std::size_t precode_pos) const { return tensor.message_cell(precode_pos); }
};

ComposedCode make_composed_code(TensorCode tensor, LdcPtr ldc);

struct ComposeParams {
    AllrParams allr;  // eps_tilde, if zero, defaults to alpha_hat * rho^t
};

/// True local list recovery: preprocessing emits one randomized algorithm
/// per tensor advice member; algorithm j decodes message coordinate i by
/// planning the pre-code's queries, answering each planned position through
/// the tensor decoder at the bridged coordinate, and running the pre-code
/// combiner on the guesses. Query bound: ldc queries x tensor queries.
class ComposedRecoverer {
  public:
    ComposedRecoverer(ComposedCode code, ComposeParams params, std::uint64_t seed);

    const ComposedCode& code() const { return code_; }
    const Schedule& schedule() const { return recovery_.schedule; }
    std::uint64_t algorithm_count() const { return recovery_.family->family_size(); }
    std::uint64_t query_bound() const { return code_.ldc->query_bound() * recovery_.family->query_bound(); }
    Rational radius() const { return recovery_.schedule.radius(); }

    DecodeResult run(std::uint64_t member, std::size_t index, ListOracle& oracle, Rng& rng) const;

    const DecoderFamily& tensor_family() const { return *recovery_.family; }

  private:
    ComposedCode code_;
    ComposeParams params_;
    TensorRecovery recovery_;
};

/// Fills in the eps_tilde default and validates length compatibility.
ComposedRecoverer compose_llr(const ComposedCode& code, ComposeParams params, std::uint64_t seed);

struct GlobalizeParams {
    std::size_t reps_list = 0;   // 0 = ceil(log2(algorithm count)), at least 1
    std::size_t reps_coord = 0;  // 0 = ceil(log2(n * count)) rounded up to odd
};

/// Global list recovery from local: re-preprocesses reps_list times, decodes
/// every message coordinate of every emitted algorithm by reps_coord-fold
/// majority vote, and returns the deduplicated canonical message list.
std::vector<std::vector<fe_t>> globalize(const ComposedCode& code, const ComposeParams& params,
                                         const ListTuple& tuple, const GlobalizeParams& gp, std::uint64_t seed);

/// Keeps the messages whose encoding is within alpha of the tuple.
std::vector<std::vector<fe_t>> filter_by_radius(const std::vector<std::vector<fe_t>>& messages,
                                                const std::function<std::vector<fe_t>(const std::vector<fe_t>&)>& enc,
                                                const ListTuple& tuple, const Rational& alpha);

/// Brute-force recovery oracle for a composed code (enumerates all q^kh
/// messages behind the guard).
std::vector<std::vector<fe_t>> brute_force_composed_recover(const ComposedCode& code, const ListTuple& tuple,
                                                            const Rational& alpha);

}  // namespace tlr
