#include "tlr/list_recovery.hpp"

#include <algorithm>
#include <string>

#include "tlr/rng.hpp"

namespace tlr {

std::vector<std::vector<fe_t>> brute_force_list_recover(const LinearCode& code, const ListTuple& tuple,
                                                        const Rational& alpha) {
    if (tuple.n != code.n) throw ValidationError("list recover: tuple length != block length");
    const std::uint64_t count = checked_message_count(code.field->q(), code.k, "brute_force_list_recover");
    const std::int64_t budget = floor_mul(alpha, static_cast<std::int64_t>(code.n));
    std::vector<std::vector<fe_t>> out;
    for (std::uint64_t v = 0; v < count; ++v) {
        auto msg = message_from_index(v, code.field->q(), code.k);
        const auto w = code.encode(msg);
        std::int64_t violations = 0;
        for (std::size_t i = 0; i < w.size() && violations <= budget; ++i)
            if (!tuple.contains(i, w[i])) ++violations;
        if (violations <= budget) out.push_back(std::move(msg));
    }
    return out;  // already in canonical (lexicographic) order
}

std::vector<std::uint64_t> list_recover_indices(const std::vector<std::vector<fe_t>>& codewords,
                                                const ListTuple& tuple, const Rational& alpha) {
    std::vector<std::uint64_t> out;
    if (codewords.empty()) return out;
    const std::int64_t budget = floor_mul(alpha, static_cast<std::int64_t>(codewords.front().size()));
    for (std::uint64_t v = 0; v < codewords.size(); ++v) {
        const auto& w = codewords[v];
        std::int64_t violations = 0;
        for (std::size_t i = 0; i < w.size() && violations <= budget; ++i)
            if (!tuple.contains(i, w[i])) ++violations;
        if (violations <= budget) out.push_back(v);
    }
    return out;
}

std::size_t estimate_list_size(const LinearCode& code, const Rational& alpha, std::size_t ell, std::size_t trials,
                               std::uint64_t seed) {
    checked_message_count(code.field->q(), code.k, "estimate_list_size");
    std::size_t best = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto tuple = random_tuple(code.n, *code.field, ell, split_seed(seed, {0x715, trial}));
        best = std::max(best, brute_force_list_recover(code, tuple, alpha).size());
    }
    return best;
}

ListTuple corrupt_to_lists(const std::vector<fe_t>& codeword, const Field& field, const Rational& alpha,
                           std::size_t ell, std::uint64_t seed, CorruptMode mode) {
    const std::size_t n = codeword.size();
    if (alpha < Rational(0) || alpha > Rational(1)) throw ValidationError("corrupt_to_lists: alpha outside [0, 1]");
    if (ell < 1) throw ValidationError("corrupt_to_lists: ell must be >= 1");
    if (ell > field.q()) throw ValidationError("corrupt_to_lists: ell exceeds alphabet size");
    const std::size_t corruptions = static_cast<std::size_t>(floor_mul(alpha, static_cast<std::int64_t>(n)));
    if (corruptions > 0 && ell >= field.q())
        throw ValidationError("corrupt_to_lists: cannot pick " + std::to_string(ell) +
                              " distinct decoys excluding the true symbol over an alphabet of size " +
                              std::to_string(field.q()));

    Rng rng(split_seed(seed, {0xc042}));
    const auto corrupted = rng.sample_distinct(n, corruptions);

    ListTuple tuple;
    tuple.n = n;
    tuple.ell = ell;
    tuple.sets.resize(n);
    std::size_t next_corrupt = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool bad = next_corrupt < corrupted.size() && corrupted[next_corrupt] == i;
        if (bad) ++next_corrupt;
        auto& set = tuple.sets[i];
        if (bad) {
            // ell distinct decoys, true symbol excluded.
            while (set.size() < ell) {
                const fe_t cand = static_cast<fe_t>(rng.below(field.q()));
                if (cand == codeword[i]) continue;
                if (std::find(set.begin(), set.end(), cand) != set.end()) continue;
                set.push_back(cand);
            }
        } else {
            set.push_back(codeword[i]);
            if (mode == CorruptMode::Filled) {
                while (set.size() < ell) {
                    const fe_t cand = static_cast<fe_t>(rng.below(field.q()));
                    if (std::find(set.begin(), set.end(), cand) != set.end()) continue;
                    set.push_back(cand);
                }
            }
        }
        std::sort(set.begin(), set.end());
    }
    return tuple;
}

ListTuple random_tuple(std::size_t n, const Field& field, std::size_t ell, std::uint64_t seed) {
    if (ell < 1 || ell > field.q()) throw ValidationError("random_tuple: need 1 <= ell <= q");
    Rng rng(split_seed(seed, {0x7a9d}));
    ListTuple tuple;
    tuple.n = n;
    tuple.ell = ell;
    tuple.sets.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& set = tuple.sets[i];
        while (set.size() < ell) {
            const fe_t cand = static_cast<fe_t>(rng.below(field.q()));
            if (std::find(set.begin(), set.end(), cand) == set.end()) set.push_back(cand);
        }
        std::sort(set.begin(), set.end());
    }
    return tuple;
}

ListTuple singleton_tuple(const std::vector<fe_t>& word) {
    ListTuple tuple;
    tuple.n = word.size();
    tuple.ell = 1;
    tuple.sets.resize(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) tuple.sets[i] = {word[i]};
    return tuple;
}

}  // namespace tlr
