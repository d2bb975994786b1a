#include "tlr/ldc.hpp"

#include <algorithm>
#include <map>

#include "tlr/linear_code.hpp"

namespace tlr {

fe_t ldc_local_decode(const LdcScheme& scheme, std::size_t index, SymbolOracle& oracle, Rng& rng) {
    const LdcPlan p = scheme.plan(index, rng);
    std::vector<fe_t> values;
    values.reserve(p.positions.size());
    for (std::size_t pos : p.positions) values.push_back(oracle.query(pos));
    return scheme.decode_from_values(p, values);
}

namespace {

class IdentityLdc final : public LdcScheme {
  public:
    explicit IdentityLdc(std::size_t len) : len_(len) {
        if (len < 1) throw ValidationError("identity ldc: message length must be >= 1");
    }
    std::string name() const override { return "identity"; }
    std::size_t message_length() const override { return len_; }
    std::size_t block_length() const override { return len_; }
    std::size_t query_bound() const override { return 1; }
    Rational tolerated_alpha() const override { return Rational(0); }
    std::vector<fe_t> encode(const std::vector<fe_t>& msg) const override {
        if (msg.size() != len_) throw ValidationError("identity ldc: message length mismatch");
        return msg;
    }
    LdcPlan plan(std::size_t index, Rng&) const override {
        if (index >= len_) throw ValidationError("identity ldc: index out of range");
        return {index, {index}};
    }
    fe_t decode_from_values(const LdcPlan&, const std::vector<fe_t>& values) const override {
        if (values.size() != 1) throw ValidationError("identity ldc: expected one value");
        return values[0];
    }

  private:
    std::size_t len_;
};

class HadamardLdc final : public LdcScheme {
  public:
    HadamardLdc(FieldPtr field, std::size_t kh, std::size_t reps) : field_(std::move(field)), kh_(kh), reps_(reps) {
        if (kh < 1) throw ValidationError("hadamard ldc: message length must be >= 1");
        if (reps < 1 || reps % 2 == 0) throw ValidationError("hadamard ldc: repetitions must be odd and >= 1");
        block_ = static_cast<std::size_t>(checked_message_count(field_->q(), kh, "hadamard_ldc"));
    }

    std::string name() const override { return "hadamard"; }
    std::size_t message_length() const override { return kh_; }
    std::size_t block_length() const override { return block_; }
    std::size_t query_bound() const override { return 2 * reps_; }
    Rational tolerated_alpha() const override { return Rational(1, 6); }

    std::vector<fe_t> encode(const std::vector<fe_t>& msg) const override {
        if (msg.size() != kh_) throw ValidationError("hadamard ldc: message length mismatch");
        std::vector<fe_t> out(block_, 0);
        for (std::size_t v = 0; v < block_; ++v) {
            const auto a = message_from_index(v, field_->q(), kh_);
            fe_t acc = 0;
            for (std::size_t j = 0; j < kh_; ++j) acc = field_->add(acc, field_->mul(msg[j], a[j]));
            out[v] = acc;
        }
        return out;
    }

    LdcPlan plan(std::size_t index, Rng& rng) const override {
        if (index >= kh_) throw ValidationError("hadamard ldc: index out of range");
        // Component `index` occupies s bits at offset (kh-1-index)*s of the
        // big-endian position packing, so adding e_index flips that low bit.
        const std::size_t flip = std::size_t{1} << ((kh_ - 1 - index) * static_cast<std::size_t>(field_->s()));
        LdcPlan p;
        p.index = index;
        p.positions.reserve(2 * reps_);
        for (std::size_t rep = 0; rep < reps_; ++rep) {
            const std::size_t a = static_cast<std::size_t>(rng.below(block_));
            p.positions.push_back(a);
            p.positions.push_back(a ^ flip);
        }
        return p;
    }

    fe_t decode_from_values(const LdcPlan& p, const std::vector<fe_t>& values) const override {
        if (values.size() != p.positions.size() || values.size() != 2 * reps_)
            throw ValidationError("hadamard ldc: value count mismatch");
        std::map<fe_t, std::size_t> votes;
        for (std::size_t rep = 0; rep < reps_; ++rep) {
            const fe_t diff = field_->sub(values[2 * rep + 1], values[2 * rep]);
            ++votes[diff];
        }
        fe_t best = 0;
        std::size_t best_count = 0;
        for (const auto& [sym, count] : votes) {
            if (count > best_count) {  // map order makes ties go to the smallest symbol
                best = sym;
                best_count = count;
            }
        }
        return best;
    }

  private:
    FieldPtr field_;
    std::size_t kh_;
    std::size_t reps_;
    std::size_t block_;
};

}  // namespace

LdcPtr identity_ldc(std::size_t message_length) { return std::make_shared<const IdentityLdc>(message_length); }

LdcPtr hadamard_ldc(FieldPtr field, std::size_t message_length, std::size_t repetitions) {
    return std::make_shared<const HadamardLdc>(std::move(field), message_length, repetitions);
}

}  // namespace tlr
