#include "tlr/compose.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tlr {

std::vector<fe_t> ComposedCode::encode(const std::vector<fe_t>& msg) const {
    const auto inner = ldc->encode(msg);
    std::vector<fe_t> padded(tensor.k_total, 0);
    // Row-major message cells: pre-code position p lands at tensor message
    // index p, trailing cells stay zero.
    std::copy(inner.begin(), inner.end(), padded.begin());
    return tensor.encode(padded);
}

ComposedCode make_composed_code(TensorCode tensor, LdcPtr ldc) {
    if (!tensor.systematic())
        throw ValidationError("composed code: tensor base must be systematic (systematize it first)");
    if (ldc->block_length() > tensor.k_total)
        throw ValidationError("composed code: pre-code block length " + std::to_string(ldc->block_length()) +
                              " does not fit the tensor message space " + std::to_string(tensor.k_total));
    ComposedCode code;
    code.tensor = std::move(tensor);
    code.ldc = std::move(ldc);
    return code;
}

ComposedRecoverer::ComposedRecoverer(ComposedCode code, ComposeParams params, std::uint64_t seed)
    : code_(std::move(code)), params_(params),
      recovery_(build_tensor_recovery(code_.tensor.base, code_.tensor.t, params_.allr, seed)) {}

DecodeResult ComposedRecoverer::run(std::uint64_t member, std::size_t index, ListOracle& oracle, Rng& rng) const {
    if (index >= code_.message_length()) throw ValidationError("composed recoverer: index out of range");
    const LdcPlan plan = code_.ldc->plan(index, rng);
    std::vector<fe_t> values;
    values.reserve(plan.positions.size());
    bool flagged = false;
    for (std::size_t pos : plan.positions) {
        const auto res = recovery_.family->decode(member, code_.bridge(pos), oracle);
        flagged = flagged || res.flagged;
        values.push_back(res.value);
    }
    return {code_.ldc->decode_from_values(plan, values), flagged};
}

ComposedRecoverer compose_llr(const ComposedCode& code, ComposeParams params, std::uint64_t seed) {
    if (params.allr.eps_tilde == Rational(0)) {
        // Default eps_tilde = alpha_hat * rho^t: the pre-code must absorb the
        // tensor decoder's failure fraction after restriction to the message
        // cells dilutes the budget by rate^t.
        params.allr.eps_tilde = code.ldc->tolerated_alpha() *
                                rational_pow(code.tensor.base.rate(), static_cast<unsigned>(code.tensor.t));
    }
    return ComposedRecoverer(code, params, seed);
}

namespace {

std::size_t default_reps_list(std::uint64_t count) {
    std::size_t reps = 1;
    while ((std::uint64_t{1} << reps) < count) ++reps;
    return std::max<std::size_t>(reps, 1);
}

std::size_t default_reps_coord(std::uint64_t count, std::size_t n) {
    std::size_t reps = 1;
    while ((std::uint64_t{1} << reps) < count * n) ++reps;
    if (reps % 2 == 0) ++reps;
    return reps;
}

}  // namespace

std::vector<std::vector<fe_t>> globalize(const ComposedCode& code, const ComposeParams& params,
                                         const ListTuple& tuple, const GlobalizeParams& gp, std::uint64_t seed) {
    std::vector<std::vector<fe_t>> out;
    std::size_t reps_list = gp.reps_list;
    std::size_t reps_coord = gp.reps_coord;

    for (std::size_t run = 0;; ++run) {
        const ComposedRecoverer rec = compose_llr(code, params, split_seed(seed, {0x91, run}));
        if (run == 0) {
            if (reps_list == 0) reps_list = default_reps_list(rec.algorithm_count());
            if (reps_coord == 0) reps_coord = default_reps_coord(rec.algorithm_count(), code.block_length());
            if (reps_coord % 2 == 0) throw ValidationError("globalize: reps_coord must be odd");
        }
        const std::size_t kh = code.message_length();
        for (std::uint64_t member = 0; member < rec.algorithm_count(); ++member) {
            std::vector<fe_t> msg(kh, 0);
            for (std::size_t i = 0; i < kh; ++i) {
                std::map<fe_t, std::size_t> votes;
                for (std::size_t rep = 0; rep < reps_coord; ++rep) {
                    TupleOracle oracle(tuple);
                    Rng rng(split_seed(seed, {0x9e, run, member, i, rep}));
                    ++votes[rec.run(member, i, oracle, rng).value];
                }
                fe_t best = 0;
                std::size_t best_count = 0;
                for (const auto& [sym, count] : votes)
                    if (count > best_count) {
                        best = sym;
                        best_count = count;
                    }
                msg[i] = best;
            }
            out.push_back(std::move(msg));
        }
        if (run + 1 >= reps_list) break;
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<fe_t>> filter_by_radius(const std::vector<std::vector<fe_t>>& messages,
                                                const std::function<std::vector<fe_t>(const std::vector<fe_t>&)>& enc,
                                                const ListTuple& tuple, const Rational& alpha) {
    std::vector<std::vector<fe_t>> out;
    for (const auto& msg : messages)
        if (dist_to_lists(enc(msg), tuple) <= alpha) out.push_back(msg);
    return out;
}

std::vector<std::vector<fe_t>> brute_force_composed_recover(const ComposedCode& code, const ListTuple& tuple,
                                                            const Rational& alpha) {
    const Field& f = *code.tensor.base.field;
    const std::uint64_t count = checked_message_count(f.q(), code.message_length(), "brute_force_composed_recover");
    std::vector<std::vector<fe_t>> out;
    for (std::uint64_t v = 0; v < count; ++v) {
        auto msg = message_from_index(v, f.q(), code.message_length());
        if (dist_to_lists(code.encode(msg), tuple) <= alpha) out.push_back(std::move(msg));
    }
    return out;
}

}  // namespace tlr
