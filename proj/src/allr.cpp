#include "tlr/allr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tlr {

Schedule make_schedule(std::size_t t, const Rational& delta, const Rational& alpha, std::uint64_t list_bound,
                       const Rational& eps_tilde, std::size_t n, const ScheduleOverrides& ov) {
    if (t < 1) throw ValidationError("schedule: t must be >= 1");
    if (delta <= Rational(0) || delta > Rational(1)) throw ValidationError("schedule: delta outside (0, 1]");
    if (alpha <= Rational(0) || alpha > Rational(1)) throw ValidationError("schedule: alpha outside (0, 1]");
    if (eps_tilde <= Rational(0) || eps_tilde > Rational(1))
        throw ValidationError(
            "schedule: eps_tilde outside (0, 1] (a pre-code tolerating zero corruption yields a vacuous schedule; "
            "pass an explicit positive eps_tilde)");
    if (list_bound < 1) throw ValidationError("schedule: list bound must be >= 1");
    if (ov.c_eps <= Rational(0) || ov.c_eps > Rational(100)) throw ValidationError("schedule: c_eps outside (0, 100]");
    if (ov.c_m <= 0) throw ValidationError("schedule: c_m must be positive");

    Schedule sched;
    sched.t = t;
    sched.base_n = n;
    sched.delta = delta;
    sched.base_alpha = alpha;
    sched.base_list_bound = list_bound;
    sched.levels.resize(t);

    const Rational ratio = delta * ov.c_eps / Rational(100);
    for (std::size_t i = 1; i <= t; ++i) {
        sched.levels[i - 1].eps = rational_pow(ratio, static_cast<unsigned>(t - i)) * eps_tilde;
        // Downstream products pair these denominators with the alpha ones
        // (~40x smaller); 2^40 here keeps every product inside int64.
        if (sched.levels[i - 1].eps.denominator() > (std::int64_t{1} << 40))
            throw ValidationError("schedule: t too deep for exact rational arithmetic at these parameters");
    }

    // Level 1: the base code is recovered globally, so the radius, query
    // count and family size are the base code's own.
    sched.levels[0].alpha = alpha;
    sched.levels[0].m = 0;
    sched.levels[0].query_bound = n;
    sched.levels[0].log2_family_bound = std::log2(static_cast<double>(list_bound));

    for (std::size_t i = 2; i <= t; ++i) {
        auto& lv = sched.levels[i - 1];
        const auto& prev = sched.levels[i - 2];
        lv.alpha = Rational(1, 10) * std::min(prev.alpha * delta, alpha * lv.eps);

        std::size_t m;
        if (ov.m_fixed) {
            m = *ov.m_fixed;
        } else {
            const double denom = to_double(delta * prev.alpha * lv.eps);
            const double raw =
                ov.c_m * std::log2(static_cast<double>(list_bound) / to_double(lv.eps)) / (denom * denom);
            m = static_cast<std::size_t>(std::ceil(raw));
        }
        lv.m = std::clamp<std::size_t>(m, 1, n);
        lv.query_bound = lv.m * prev.query_bound + n;
        lv.log2_family_bound = static_cast<double>(lv.m) * prev.log2_family_bound;
    }

    if (sched.radius() <= Rational(0))
        throw ValidationError("schedule: vacuous radius (alpha_(t) <= 0); loosen eps_tilde or alpha");
    return sched;
}

GlobalRecoveryFamily::GlobalRecoveryFamily(const LinearCode& code, Rational alpha, std::uint64_t list_bound)
    : code_(code), alpha_(alpha), list_bound_(list_bound), codewords_(enumerate_codewords(code)) {
    if (list_bound_ < 1) throw ValidationError("global recovery family: list bound must be >= 1");
}

DecodeResult GlobalRecoveryFamily::decode(std::uint64_t member, std::size_t pos, ListOracle& oracle) const {
    if (member >= list_bound_) throw ValidationError("global recovery family: member out of range");
    if (pos >= code_.n) throw ValidationError("global recovery family: position out of range");
    ListTuple seen;
    seen.n = code_.n;
    seen.ell = 1;
    seen.sets.resize(code_.n);
    for (std::size_t i = 0; i < code_.n; ++i) {
        seen.sets[i] = oracle.query(i);
        seen.ell = std::max(seen.ell, seen.sets[i].size());
    }
    const auto hits = list_recover_indices(codewords_, seen, alpha_);
    if (member >= hits.size()) return {0, true};
    return {codewords_[hits[member]][pos], false};
}

PairRecoveryFamily::PairRecoveryFamily(const LinearCode& column_code, Rational column_alpha,
                                       const RowFamilyFactory& row_factory, std::size_t row_length, std::size_t m,
                                       std::uint64_t seed, std::uint64_t decoder_guard)
    : column_code_(column_code),
      column_alpha_(column_alpha),
      column_codewords_(enumerate_codewords(column_code)),
      row_length_(row_length) {
    if (m > column_code_.n) throw ValidationError("pair recovery: m exceeds the number of rows");

    Rng rng(split_seed(seed, {0xa11, 0x70b5}));
    rows_ = rng.sample_distinct(column_code_.n, m);
    children_.reserve(m);
    for (std::size_t idx = 0; idx < m; ++idx)
        children_.push_back(row_factory(split_seed(seed, {0xa11, 0x90b, rows_[idx], idx})));

    child_size_ = children_.empty() ? 1 : children_.front()->family_size();
    for (const auto& child : children_) {
        if (child->family_size() != child_size_)
            throw ValidationError("pair recovery: advice rows disagree on family size");
        if (child->word_length() != row_length_)
            throw ValidationError("pair recovery: row family length != row length");
    }
    family_size_ = 1;
    for (std::size_t idx = 0; idx < m; ++idx) {
        if (child_size_ != 0 && family_size_ > decoder_guard / child_size_)
            throw GuardError("pair recovery: advice product (L')^m exceeds the decoder guard");
        family_size_ *= child_size_;
    }
}

std::uint64_t PairRecoveryFamily::query_bound() const {
    const std::uint64_t child_q = children_.empty() ? 0 : children_.front()->query_bound();
    return static_cast<std::uint64_t>(children_.size()) * child_q + column_code_.n;
}

std::vector<std::uint64_t> PairRecoveryFamily::advice_digits(std::uint64_t member) const {
    // Digit idx selects the row-family member for advice row rows_[idx];
    // digit 0 is least significant.
    std::vector<std::uint64_t> digits(children_.size(), 0);
    for (std::size_t idx = 0; idx < children_.size(); ++idx) {
        digits[idx] = member % child_size_;
        member /= child_size_;
    }
    return digits;
}

PairRecoveryFamily::Advice PairRecoveryFamily::advice_of(std::uint64_t member) const {
    if (member >= family_size_) throw ValidationError("pair recovery: member out of range");
    return {rows_, advice_digits(member)};
}

DecodeResult PairRecoveryFamily::decode(std::uint64_t member, std::size_t pos, ListOracle& oracle) const {
    if (member >= family_size_) throw ValidationError("pair recovery: member out of range");
    if (pos >= word_length()) throw ValidationError("pair recovery: position out of range");
    const std::size_t row = pos / row_length_;
    const std::size_t col = pos % row_length_;
    const auto digits = advice_digits(member);

    // Advice guesses for the cells (r, col), one per sampled row.
    std::vector<fe_t> guesses(children_.size(), 0);
    for (std::size_t idx = 0; idx < children_.size(); ++idx) {
        RowSlice row_oracle(oracle, rows_[idx], row_length_);
        guesses[idx] = children_[idx]->decode(digits[idx], col, row_oracle).value;
    }

    // Recover the column globally.
    ListTuple column;
    column.n = column_code_.n;
    column.ell = 1;
    column.sets.resize(column.n);
    ColSlice col_oracle(oracle, col, row_length_);
    for (std::size_t i = 0; i < column.n; ++i) {
        column.sets[i] = col_oracle.query(i);
        column.ell = std::max(column.ell, column.sets[i].size());
    }
    const auto hits = list_recover_indices(column_codewords_, column, column_alpha_);
    if (hits.empty()) return {0, true};

    // Closest to the advice on the sampled rows; ties to the smallest word.
    const std::vector<fe_t>* best = nullptr;
    std::size_t best_dist = 0;
    for (std::uint64_t idx : hits) {
        const auto& cand = column_codewords_[idx];
        std::size_t dist = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (cand[rows_[r]] != guesses[r]) ++dist;
        if (best == nullptr || dist < best_dist || (dist == best_dist && cand < *best)) {
            best = &cand;
            best_dist = dist;
        }
    }
    return {(*best)[row], false};
}

PairRecoveryFamily::Sweep PairRecoveryFamily::sweep_best_agreement(const std::vector<fe_t>& planted,
                                                                   const ListTuple& tuple) const {
    if (planted.size() != word_length() || tuple.n != word_length())
        throw ValidationError("sweep: planted word / tuple length mismatch");
    const std::size_t n_rows = column_code_.n;
    const std::size_t m = children_.size();

    // Row answers once per (advice row, row member, column), instead of per
    // advice vector: answers[col][idx][j].
    TupleOracle scratch(tuple);
    std::vector<std::vector<std::vector<fe_t>>> answers(row_length_);
    for (std::size_t col = 0; col < row_length_; ++col) {
        answers[col].assign(m, std::vector<fe_t>(child_size_, 0));
        for (std::size_t idx = 0; idx < m; ++idx) {
            RowSlice row_oracle(scratch, rows_[idx], row_length_);
            for (std::uint64_t j = 0; j < child_size_; ++j)
                answers[col][idx][j] = children_[idx]->decode(j, col, row_oracle).value;
        }
    }

    // Column lists and per-candidate agreement with the planted word.
    struct Candidate {
        const std::vector<fe_t>* word;
        std::size_t planted_matches;
    };
    std::vector<std::vector<Candidate>> columns(row_length_);
    for (std::size_t col = 0; col < row_length_; ++col) {
        ListTuple column;
        column.n = n_rows;
        column.ell = 1;
        column.sets.resize(n_rows);
        for (std::size_t i = 0; i < n_rows; ++i) {
            column.sets[i] = tuple.sets[i * row_length_ + col];
            column.ell = std::max(column.ell, column.sets[i].size());
        }
        for (std::uint64_t idx : list_recover_indices(column_codewords_, column, column_alpha_)) {
            const auto& cand = column_codewords_[idx];
            std::size_t matches = 0;
            for (std::size_t i = 0; i < n_rows; ++i)
                if (cand[i] == planted[i * row_length_ + col]) ++matches;
            columns[col].push_back({&cand, matches});
        }
    }

    Sweep out;
    const std::int64_t total = static_cast<std::int64_t>(word_length());
    for (std::uint64_t member = 0; member < family_size_; ++member) {
        const auto digits = advice_digits(member);
        std::int64_t agree = 0;
        for (std::size_t col = 0; col < row_length_; ++col) {
            const Candidate* best = nullptr;
            std::size_t best_dist = 0;
            for (const auto& cand : columns[col]) {
                std::size_t dist = 0;
                for (std::size_t idx = 0; idx < m; ++idx)
                    if ((*cand.word)[rows_[idx]] != answers[col][idx][digits[idx]]) ++dist;
                if (best == nullptr || dist < best_dist || (dist == best_dist && *cand.word < *best->word)) {
                    best = &cand;
                    best_dist = dist;
                }
            }
            if (best != nullptr) agree += static_cast<std::int64_t>(best->planted_matches);
        }
        const Rational agreement(agree, total);
        if (member == 0 || agreement > out.best_agreement) {
            out.best_member = member;
            out.best_agreement = agreement;
        }
    }
    return out;
}

namespace {

std::unique_ptr<DecoderFamily> build_level(const LinearCode& base, const Schedule& sched, std::size_t level,
                                           std::uint64_t seed, std::uint64_t decoder_guard) {
    if (level == 1)
        return std::make_unique<GlobalRecoveryFamily>(base, sched.base_alpha, sched.base_list_bound);
    std::size_t row_length = 1;
    for (std::size_t i = 1; i < level; ++i) row_length *= base.n;
    RowFamilyFactory factory = [&base, &sched, level, decoder_guard](std::uint64_t child_seed) {
        return build_level(base, sched, level - 1, child_seed, decoder_guard);
    };
    return std::make_unique<PairRecoveryFamily>(base, sched.base_alpha, factory, row_length, sched.level(level).m,
                                                split_seed(seed, {0x1e7e1, level}), decoder_guard);
}

}  // namespace

TensorRecovery build_tensor_recovery(const LinearCode& base, std::size_t t, const AllrParams& params,
                                     std::uint64_t seed) {
    TensorRecovery rec;
    rec.code = tensor_power(base, t);
    const Rational delta = relative_distance(base);
    rec.schedule = make_schedule(t, delta, params.base.alpha, params.base.list_bound, params.eps_tilde,
                                 base.n, params.overrides);
    rec.family = build_level(base, rec.schedule, t, seed, params.overrides.decoder_guard);
    return rec;
}

Rational empirical_agreement(const DecoderFamily& family, std::uint64_t member, const std::vector<fe_t>& planted,
                             const ListTuple& tuple) {
    if (planted.size() != family.word_length() || tuple.n != family.word_length())
        throw ValidationError("empirical_agreement: length mismatch");
    std::int64_t agree = 0;
    for (std::size_t pos = 0; pos < planted.size(); ++pos) {
        TupleOracle oracle(tuple);
        const auto res = family.decode(member, pos, oracle);
        if (!res.flagged && res.value == planted[pos]) ++agree;
    }
    return Rational(agree, static_cast<std::int64_t>(planted.size()));
}

}  // namespace tlr
