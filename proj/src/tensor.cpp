#include "tlr/tensor.hpp"

#include <string>

namespace tlr {

std::size_t flat_of(const std::vector<std::size_t>& multi, std::size_t n) {
    std::size_t flat = 0;
    for (std::size_t d : multi) {
        if (d >= n) throw ValidationError("flat_of: component out of range");
        flat = flat * n + d;
    }
    return flat;
}

std::vector<std::size_t> multi_of(std::size_t flat, std::size_t n, std::size_t t) {
    std::vector<std::size_t> multi(t, 0);
    for (std::size_t j = t; j-- > 0;) {
        multi[j] = flat % n;
        flat /= n;
    }
    if (flat != 0) throw ValidationError("multi_of: flat index out of range");
    return multi;
}

namespace {

std::size_t checked_pow(std::size_t base, std::size_t e, const char* what) {
    const std::uint64_t guard = enumeration_guard_max();
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (base != 0 && acc > guard / base)
            throw GuardError(std::string(what) + ": n^t exceeds enumeration guard");
        acc *= base;
    }
    return static_cast<std::size_t>(acc);
}

}  // namespace

TensorCode tensor_power(const LinearCode& base, std::size_t t) {
    if (t < 1) throw ValidationError("tensor_power: t must be >= 1");
    TensorCode code;
    code.base = base;
    code.t = t;
    code.n_total = checked_pow(base.n, t, "tensor_power");
    code.k_total = checked_pow(base.k, t, "tensor_power");
    return code;
}

std::vector<fe_t> TensorCode::encode(const std::vector<fe_t>& msg) const {
    if (msg.size() != k_total)
        throw ValidationError("tensor encode: message length " + std::to_string(msg.size()) + " != k^t " +
                              std::to_string(k_total));
    const Field& f = *base.field;
    const std::size_t n = base.n, k = base.k;

    std::vector<fe_t> cur = msg;
    // dims[axis] is k until that axis has been encoded, n afterwards.
    std::vector<std::size_t> dims(t, k);
    for (std::size_t axis = 0; axis < t; ++axis) {
        std::size_t stride = 1;  // elements between consecutive axis values
        for (std::size_t j = axis + 1; j < t; ++j) stride *= dims[j];
        std::size_t blocks = 1;  // slices before the axis
        for (std::size_t j = 0; j < axis; ++j) blocks *= dims[j];

        std::vector<fe_t> next(cur.size() / k * n, 0);
        std::vector<fe_t> line(k), enc;
        for (std::size_t b = 0; b < blocks; ++b) {
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t in_base = b * k * stride + off;
                for (std::size_t j = 0; j < k; ++j) line[j] = cur[in_base + j * stride];
                enc = matvec(f, base.generator, line);
                const std::size_t out_base = b * n * stride + off;
                for (std::size_t i = 0; i < n; ++i) next[out_base + i * stride] = enc[i];
            }
        }
        cur = std::move(next);
        dims[axis] = n;
    }
    return cur;
}

std::size_t TensorCode::message_cell(std::size_t msg_flat) const {
    const auto digits = multi_of(msg_flat, base.k, t);
    return flat_of(digits, base.n);
}

std::optional<std::size_t> TensorCode::message_index_of(std::size_t codeword_flat) const {
    const auto digits = multi_of(codeword_flat, base.n, t);
    for (std::size_t d : digits)
        if (d >= base.k) return std::nullopt;
    return flat_of(digits, base.k);
}

Matrix tensor2_encode(const LinearCode& c1, const LinearCode& c2, const Matrix& msg) {
    if (msg.rows != c1.k || msg.cols != c2.k)
        throw ValidationError("tensor2_encode: message must be k1 x k2");
    if (!(*c1.field == *c2.field)) throw ValidationError("tensor2_encode: codes over different fields");
    const Field& f = *c1.field;
    return matmul(f, matmul(f, c1.generator, msg), transpose(c2.generator));
}

LinearCode to_linear_code(const TensorCode& code) {
    const std::uint64_t guard = enumeration_guard_max();
    if (static_cast<std::uint64_t>(code.n_total) * code.k_total > guard)
        throw GuardError("to_linear_code: materialized generator exceeds guard");
    const Field& f = *code.base.field;
    LinearCode out;
    out.field = code.base.field;
    out.n = code.n_total;
    out.k = code.k_total;
    out.generator = Matrix(code.n_total, code.k_total);
    for (std::size_t i = 0; i < code.n_total; ++i) {
        const auto im = multi_of(i, code.base.n, code.t);
        for (std::size_t j = 0; j < code.k_total; ++j) {
            const auto jm = multi_of(j, code.base.k, code.t);
            fe_t v = 1;
            for (std::size_t axis = 0; axis < code.t && v != 0; ++axis)
                v = f.mul(v, code.base.generator.at(im[axis], jm[axis]));
            out.generator.at(i, j) = v;
        }
    }
    // The message cells of a tensor power are scattered, not a prefix, so the
    // flat form is systematic (in the prefix sense) only when it happens to be.
    out.systematic = true;
    for (std::size_t i = 0; i < out.k && out.systematic; ++i)
        for (std::size_t j = 0; j < out.k; ++j)
            if (out.generator.at(i, j) != (i == j ? 1 : 0)) {
                out.systematic = false;
                break;
            }
    return out;
}

}  // namespace tlr
