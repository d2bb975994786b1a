#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "tlr/linear_code.hpp"
#include "tlr/list_recovery.hpp"
#include "tlr/oracle.hpp"
#include "tlr/rng.hpp"
#include "tlr/tensor.hpp"

namespace tlr {

struct ScheduleOverrides {
    /// Scales the row-sample size m (the hidden constant in the O(.)).
    double c_m = 1.0;
    /// Scales the per-level epsilon ratio constant (default ratio delta/100).
    Rational c_eps{1};
    /// Forces m at every pairing level (clamped to [1, n]); "all rows" = n.
    std::optional<std::size_t> m_fixed;
    /// Cap on the advice product (family size) before preprocessing refuses.
    std::uint64_t decoder_guard = std::uint64_t{1} << 20;
};

struct ScheduleLevel {
    Rational eps;               // tolerated failure fraction at this level
    Rational alpha;             // recovery radius at this level
    std::size_t m = 0;          // advice rows sampled when pairing (0 at level 1)
    std::uint64_t query_bound;  // per-invocation oracle reads
    double log2_family_bound;   // log2 of the emitted decoder count
};

/// Per-level parameters of the tensor-power recursion. Level 1 is the base
/// code recovered globally; level i pairs the base against level i-1:
///   eps_(i)   = (delta * c_eps / 100)^(t-i) * eps_tilde
///   alpha_(i) = (1/10) * min(alpha_(i-1) * delta, alpha * eps_(i))
///   m_(i)     = ceil(c_m * log2(L / eps_(i)) / (delta * alpha_(i-1) * eps_(i))^2),
///               clamped to [1, n]
///   Q_(i)     = m_(i) * Q_(i-1) + n
struct Schedule {
    std::size_t t = 1;
    std::size_t base_n = 0;
    Rational delta;
    Rational base_alpha;
    std::uint64_t base_list_bound = 0;
    std::vector<ScheduleLevel> levels;  // levels[i-1] holds level i

    const ScheduleLevel& level(std::size_t i) const { return levels[i - 1]; }
    Rational radius() const { return levels.back().alpha; }
    Rational eps_tilde() const { return levels.back().eps; }
    std::uint64_t query_bound() const { return levels.back().query_bound; }
};

Schedule make_schedule(std::size_t t, const Rational& delta, const Rational& alpha, std::uint64_t list_bound,
                       const Rational& eps_tilde, std::size_t n, const ScheduleOverrides& ov = {});

struct DecodeResult {
    fe_t value = 0;
    bool flagged = false;  // a recovery list came back empty; metrics count this as a miss
};

/// A preprocessed family of deterministic local decoders for one word
/// length. member indexes the advice; decoding the same (member, pos) against
/// the same oracle contents always returns the same answer.
class DecoderFamily {
  public:
    virtual ~DecoderFamily() = default;
    virtual std::uint64_t family_size() const = 0;
    virtual std::size_t word_length() const = 0;
    virtual std::uint64_t query_bound() const = 0;
    virtual DecodeResult decode(std::uint64_t member, std::size_t pos, ListOracle& oracle) const = 0;
};

/// Level-1 family: reads the whole word, recovers globally at `alpha`, and
/// member j reports the j-th recovered codeword (canonical order). Members
/// beyond the actual list come back flagged.
class GlobalRecoveryFamily final : public DecoderFamily {
  public:
    GlobalRecoveryFamily(const LinearCode& code, Rational alpha, std::uint64_t list_bound);

    std::uint64_t family_size() const override { return list_bound_; }
    std::size_t word_length() const override { return code_.n; }
    std::uint64_t query_bound() const override { return code_.n; }
    DecodeResult decode(std::uint64_t member, std::size_t pos, ListOracle& oracle) const override;

  private:
    LinearCode code_;
    Rational alpha_;
    std::uint64_t list_bound_;
    std::vector<std::vector<fe_t>> codewords_;
};

using RowFamilyFactory = std::function<std::unique_ptr<DecoderFamily>(std::uint64_t seed)>;

/// The pairwise construction: preprocessing samples m advice rows and runs an
/// independent row family per sampled row; the emitted decoders are indexed
/// by one row-family member per row (family size = row_size^m). A decoder at
/// position (i, i') asks each advice row for its guess at column i', then
/// recovers column i' globally and returns coordinate i of the recovered
/// codeword closest to the guesses on the advice rows (ties to the
/// lexicographically smallest codeword).
class PairRecoveryFamily final : public DecoderFamily {
  public:
    PairRecoveryFamily(const LinearCode& column_code, Rational column_alpha, const RowFamilyFactory& row_factory,
                       std::size_t row_length, std::size_t m, std::uint64_t seed, std::uint64_t decoder_guard);

    std::uint64_t family_size() const override { return family_size_; }
    std::size_t word_length() const override { return column_code_.n * row_length_; }
    std::uint64_t query_bound() const override;
    DecodeResult decode(std::uint64_t member, std::size_t pos, ListOracle& oracle) const override;

    const std::vector<std::size_t>& advice_rows() const { return rows_; }
    std::uint64_t row_family_size() const { return child_size_; }

    /// The advice a member index denotes: the sampled rows with one
    /// row-family choice each.
    struct Advice {
        std::vector<std::size_t> rows;
        std::vector<std::uint64_t> choices;
    };
    Advice advice_of(std::uint64_t member) const;

    /// Max-over-advice agreement with a planted word, computed with shared
    /// row/column work instead of family_size independent invocations.
    /// Equivalent to running empirical_agreement for every member.
    struct Sweep {
        std::uint64_t best_member = 0;
        Rational best_agreement{0};
    };
    Sweep sweep_best_agreement(const std::vector<fe_t>& planted, const ListTuple& tuple) const;

  private:
    std::vector<std::uint64_t> advice_digits(std::uint64_t member) const;

    LinearCode column_code_;
    Rational column_alpha_;
    std::vector<std::vector<fe_t>> column_codewords_;
    std::size_t row_length_;
    std::vector<std::size_t> rows_;                         // sorted advice rows
    std::vector<std::unique_ptr<DecoderFamily>> children_;  // one per advice row
    std::uint64_t child_size_ = 1;
    std::uint64_t family_size_ = 1;
};

struct AllrParams {
    RecoveryParams base;  // the base code's (alpha, ell, L) recovery triple
    Rational eps_tilde;
    ScheduleOverrides overrides{};
};

/// The full recursion: a recoverer for the t-fold tensor power, with level-1
/// the brute-force global recoverer of the base code. Preprocessing
/// randomness is derived per level and per advice row from `seed`.
struct TensorRecovery {
    TensorCode code;
    Schedule schedule;
    std::shared_ptr<const DecoderFamily> family;
};

TensorRecovery build_tensor_recovery(const LinearCode& base, std::size_t t, const AllrParams& params,
                                     std::uint64_t seed);

/// Fraction of coordinates where the decoder's output equals the planted
/// word; flagged invocations count as misses.
Rational empirical_agreement(const DecoderFamily& family, std::uint64_t member, const std::vector<fe_t>& planted,
                             const ListTuple& tuple);

}  // namespace tlr
