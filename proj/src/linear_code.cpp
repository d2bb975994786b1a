#include "tlr/linear_code.hpp"

#include <cstdlib>
#include <string>

#include "tlr/rng.hpp"

namespace tlr {

std::uint64_t enumeration_guard_max() {
    static const std::uint64_t cached = [] {
        if (const char* env = std::getenv("TLR_GUARD_MAX")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{1} << 24;
    }();
    return cached;
}

std::uint64_t checked_message_count(std::uint64_t q, std::size_t k, const char* what) {
    const std::uint64_t guard = enumeration_guard_max();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (count > guard / q)
            throw GuardError(std::string(what) + ": q^k exceeds enumeration guard (" + std::to_string(guard) +
                             "); use sampling instead or raise TLR_GUARD_MAX");
        count *= q;
    }
    if (count > guard)
        throw GuardError(std::string(what) + ": q^k exceeds enumeration guard (" + std::to_string(guard) +
                         "); use sampling instead or raise TLR_GUARD_MAX");
    return count;
}

std::vector<fe_t> LinearCode::encode(const std::vector<fe_t>& msg) const {
    if (msg.size() != k)
        throw ValidationError("encode: message length " + std::to_string(msg.size()) + " != k " + std::to_string(k));
    return matvec(*field, generator, msg);
}

std::vector<fe_t> message_from_index(std::uint64_t v, std::uint64_t q, std::size_t k) {
    std::vector<fe_t> msg(k, 0);
    for (std::size_t j = k; j-- > 0;) {
        msg[j] = static_cast<fe_t>(v % q);
        v /= q;
    }
    return msg;
}

std::uint64_t index_from_message(const std::vector<fe_t>& msg, std::uint64_t q) {
    std::uint64_t v = 0;
    for (fe_t d : msg) v = v * q + d;
    return v;
}

LinearCode rs_code(FieldPtr field, std::size_t n, std::size_t k) {
    if (n > field->q())
        throw ValidationError("rs_code: block length " + std::to_string(n) + " exceeds field size " +
                              std::to_string(field->q()));
    if (k > n) throw ValidationError("rs_code: k > n");
    LinearCode code;
    code.field = field;
    code.n = n;
    code.k = k;
    code.generator = Matrix(n, k);
    // Vandermonde rows: coordinate i evaluates at the field element of value i.
    for (std::size_t i = 0; i < n; ++i) {
        fe_t p = 1;
        for (std::size_t j = 0; j < k; ++j) {
            code.generator.at(i, j) = p;
            p = field->mul(p, static_cast<fe_t>(i));
        }
    }
    code.systematic = (k > 0 && n > 0 && [&] {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (code.generator.at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }());
    return code;
}

LinearCode random_linear_code(FieldPtr field, std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) throw ValidationError("random_linear_code: k > n");
    Rng rng(split_seed(seed, {0x9c0de}));
    for (int attempt = 0; attempt < 100; ++attempt) {
        LinearCode code;
        code.field = field;
        code.n = n;
        code.k = k;
        code.generator = Matrix(n, k);
        for (auto& e : code.generator.a) e = static_cast<fe_t>(rng.below(field->q()));
        if (rank(*field, code.generator) == k) {
            code.systematic = false;
            return code;
        }
    }
    throw ValidationError("random_linear_code: no full-rank generator in 100 attempts");
}

LinearCode repetition_code(FieldPtr field, std::size_t n) {
    LinearCode code;
    code.field = field;
    code.n = n;
    code.k = 1;
    code.generator = Matrix(n, 1);
    for (std::size_t i = 0; i < n; ++i) code.generator.at(i, 0) = 1;
    code.systematic = true;
    return code;
}

LinearCode identity_code(FieldPtr field, std::size_t n) {
    LinearCode code;
    code.field = field;
    code.n = n;
    code.k = n;
    code.generator = Matrix::identity(n);
    code.systematic = true;
    return code;
}

LinearCode systematize(const LinearCode& code) {
    const Field& f = *code.field;
    const auto info_rows = independent_rows(f, code.generator);
    if (info_rows.size() != code.k)
        throw ValidationError("systematize: generator rank " + std::to_string(info_rows.size()) + " < k " +
                              std::to_string(code.k));

    bool identity_perm = true;
    for (std::size_t i = 0; i < code.k; ++i)
        if (info_rows[i] != i) identity_perm = false;

    std::vector<std::size_t> perm;
    perm.reserve(code.n);
    perm.assign(info_rows.begin(), info_rows.end());
    if (!identity_perm) {
        std::vector<bool> used(code.n, false);
        for (std::size_t r : info_rows) used[r] = true;
        for (std::size_t r = 0; r < code.n; ++r)
            if (!used[r]) perm.push_back(r);
    } else {
        for (std::size_t r = code.k; r < code.n; ++r) perm.push_back(r);
    }

    Matrix permuted(code.n, code.k);
    for (std::size_t i = 0; i < code.n; ++i)
        for (std::size_t j = 0; j < code.k; ++j) permuted.at(i, j) = code.generator.at(perm[i], j);

    Matrix top(code.k, code.k);
    for (std::size_t i = 0; i < code.k; ++i)
        for (std::size_t j = 0; j < code.k; ++j) top.at(i, j) = permuted.at(i, j);
    const auto top_inv = inverse(f, top);
    if (!top_inv) throw ValidationError("systematize: information set rows are singular");

    LinearCode out;
    out.field = code.field;
    out.n = code.n;
    out.k = code.k;
    out.generator = matmul(f, permuted, *top_inv);
    out.systematic = true;
    if (!identity_perm) out.permutation = perm;
    return out;
}

std::vector<std::vector<fe_t>> enumerate_codewords(const LinearCode& code) {
    const std::uint64_t count = checked_message_count(code.field->q(), code.k, "enumerate_codewords");
    std::vector<std::vector<fe_t>> words;
    words.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v)
        words.push_back(code.encode(message_from_index(v, code.field->q(), code.k)));
    return words;
}

std::size_t min_distance(const LinearCode& code) {
    const std::uint64_t count = checked_message_count(code.field->q(), code.k, "min_distance");
    std::size_t best = code.n + 1;
    for (std::uint64_t v = 1; v < count; ++v) {
        const auto w = code.encode(message_from_index(v, code.field->q(), code.k));
        std::size_t weight = 0;
        for (fe_t x : w)
            if (x != 0) ++weight;
        if (weight < best) best = weight;
    }
    if (best > code.n) throw ValidationError("min_distance: code has no nonzero codewords (k = 0)");
    return best;
}

Rational relative_distance(const LinearCode& code) {
    return Rational(static_cast<std::int64_t>(min_distance(code)), static_cast<std::int64_t>(code.n));
}

}  // namespace tlr
