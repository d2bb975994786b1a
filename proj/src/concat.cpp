#include "tlr/concat.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tlr/entropy.hpp"
#include "tlr/rng.hpp"

namespace tlr {

Rational ConcatCode::rate() const {
    return Rational(static_cast<std::int64_t>(message_bits()), static_cast<std::int64_t>(block_bits()));
}

std::vector<fe_t> expand_symbol(fe_t symbol, std::size_t s) {
    std::vector<fe_t> bits(s, 0);
    for (std::size_t u = 0; u < s; ++u) bits[u] = static_cast<fe_t>((symbol >> u) & 1u);
    return bits;
}

fe_t pack_symbol(const std::vector<fe_t>& bits) {
    fe_t v = 0;
    for (std::size_t u = 0; u < bits.size(); ++u) {
        if (bits[u] > 1) throw ValidationError("pack_symbol: non-binary coefficient");
        v = static_cast<fe_t>(v | (bits[u] << u));
    }
    return v;
}

std::vector<fe_t> ConcatCode::encode(const std::vector<fe_t>& message_bits_in) const {
    if (message_bits_in.size() != message_bits())
        throw ValidationError("concat encode: expected " + std::to_string(message_bits()) + " message bits");
    const std::size_t sym_bits = s();
    std::vector<fe_t> outer_msg(outer.k, 0);
    for (std::size_t j = 0; j < outer.k; ++j) {
        std::vector<fe_t> bits(message_bits_in.begin() + static_cast<std::ptrdiff_t>(j * sym_bits),
                               message_bits_in.begin() + static_cast<std::ptrdiff_t>((j + 1) * sym_bits));
        outer_msg[j] = pack_symbol(bits);
    }
    const auto outer_word = outer.encode(outer_msg);
    std::vector<fe_t> out;
    out.reserve(block_bits());
    for (std::size_t i = 0; i < outer.n; ++i) {
        const auto block = inners[i].encode(expand_symbol(outer_word[i], sym_bits));
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

ConcatCode make_concat(LinearCode outer, std::vector<LinearCode> inners) {
    if (inners.size() != outer.n) throw ValidationError("concat: need one inner code per outer coordinate");
    const std::size_t sym_bits = static_cast<std::size_t>(outer.field->s());
    const std::size_t n_in = inners.front().n;
    for (const auto& inner : inners) {
        if (inner.field->q() != 2) throw ValidationError("concat: inner codes must be binary");
        if (inner.k != sym_bits) throw ValidationError("concat: inner message length must equal the outer exponent");
        if (inner.n != n_in) throw ValidationError("concat: inner codes must share one block length");
    }
    ConcatCode code;
    code.outer = std::move(outer);
    code.inners = std::move(inners);
    return code;
}

ConcatCode thommesen_sample(const LinearCode& outer, const Rational& rho_in, std::uint64_t seed) {
    if (rho_in <= Rational(0) || rho_in > Rational(1)) throw ValidationError("thommesen: rho_in outside (0, 1]");
    const std::size_t sym_bits = static_cast<std::size_t>(outer.field->s());
    const Rational len = Rational(static_cast<std::int64_t>(sym_bits)) / rho_in;
    if (len.denominator() != 1)
        throw ValidationError("thommesen: s/rho_in = " + to_string(len) + " is not an integer block length");
    const std::size_t n_in = static_cast<std::size_t>(len.numerator());

    const FieldPtr f2 = make_field(1);
    std::vector<LinearCode> inners;
    inners.reserve(outer.n);
    for (std::size_t i = 0; i < outer.n; ++i) {
        Rng rng(split_seed(seed, {0x7801, i}));
        LinearCode inner;
        inner.field = f2;
        inner.n = n_in;
        inner.k = sym_bits;
        inner.generator = Matrix(n_in, sym_bits);
        for (auto& e : inner.generator.a) e = static_cast<fe_t>(rng.below(2));
        inners.push_back(std::move(inner));
    }
    return make_concat(outer, std::move(inners));
}

LinearCode concat_to_linear_code(const ConcatCode& code) {
    LinearCode out;
    out.field = make_field(1);
    out.n = code.block_bits();
    out.k = code.message_bits();
    out.generator = Matrix(out.n, out.k);
    std::vector<fe_t> unit(out.k, 0);
    for (std::size_t j = 0; j < out.k; ++j) {
        unit[j] = 1;
        const auto col = code.encode(unit);
        unit[j] = 0;
        for (std::size_t i = 0; i < out.n; ++i) out.generator.at(i, j) = col[i];
    }
    return out;
}

Rational relative_weight(const std::vector<fe_t>& word) {
    if (word.empty()) throw ValidationError("relative_weight: empty word");
    std::int64_t nz = 0;
    for (fe_t v : word)
        if (v != 0) ++nz;
    return Rational(nz, static_cast<std::int64_t>(word.size()));
}

namespace {

ListTuple slice_block(const ListTuple& fine, std::size_t block, std::size_t n_in) {
    ListTuple out;
    out.n = n_in;
    out.ell = fine.ell;
    out.sets.assign(fine.sets.begin() + static_cast<std::ptrdiff_t>(block * n_in),
                    fine.sets.begin() + static_cast<std::ptrdiff_t>((block + 1) * n_in));
    return out;
}

}  // namespace

std::vector<std::vector<fe_t>> concat_list_recover(const ConcatCode& code, const ListTuple& fine,
                                                   const ConcatRecoverParams& params,
                                                   const OuterRecoverFn& outer_recover) {
    if (fine.n != code.block_bits()) throw ValidationError("concat recover: tuple length != block length");
    const std::size_t n_in = code.n_in();
    const std::size_t ell_out = params.ell_out == 0 ? code.outer.field->q() : params.ell_out;

    // Per block: brute-force inner recovery to an outer-symbol candidate set.
    ListTuple outer_tuple;
    outer_tuple.n = code.outer.n;
    outer_tuple.ell = ell_out;
    outer_tuple.sets.resize(code.outer.n);
    for (std::size_t i = 0; i < code.outer.n; ++i) {
        const auto block_tuple = slice_block(fine, i, n_in);
        const auto inner_msgs = brute_force_list_recover(code.inners[i], block_tuple, params.alpha_in);
        std::set<fe_t> symbols;
        for (const auto& bits : inner_msgs) symbols.insert(pack_symbol(bits));
        if (symbols.size() > ell_out)
            throw ValidationError("concat recover: inner list of block " + std::to_string(i) + " has " +
                                  std::to_string(symbols.size()) + " candidates, exceeding ell_out " +
                                  std::to_string(ell_out));
        outer_tuple.sets[i].assign(symbols.begin(), symbols.end());
    }

    std::vector<std::vector<fe_t>> outer_msgs;
    if (outer_recover)
        outer_msgs = outer_recover(outer_tuple, params.alpha_out);
    else
        outer_msgs = brute_force_list_recover(code.outer, outer_tuple, params.alpha_out);

    // Report messages as bit vectors.
    std::vector<std::vector<fe_t>> out;
    out.reserve(outer_msgs.size());
    const std::size_t sym_bits = code.s();
    for (const auto& msg : outer_msgs) {
        std::vector<fe_t> bits;
        bits.reserve(code.message_bits());
        for (fe_t sym : msg) {
            const auto expanded = expand_symbol(sym, sym_bits);
            bits.insert(bits.end(), expanded.begin(), expanded.end());
        }
        out.push_back(std::move(bits));
    }
    return out;
}

std::size_t blocks_exceeding(const ConcatCode& code, const std::vector<fe_t>& codeword, const ListTuple& fine,
                             const Rational& alpha_in) {
    if (codeword.size() != code.block_bits() || fine.n != code.block_bits())
        throw ValidationError("blocks_exceeding: length mismatch");
    const std::size_t n_in = code.n_in();
    std::size_t bad = 0;
    for (std::size_t i = 0; i < code.outer.n; ++i) {
        std::int64_t violations = 0;
        for (std::size_t j = 0; j < n_in; ++j)
            if (!fine.contains(i * n_in + j, codeword[i * n_in + j])) ++violations;
        if (Rational(violations, static_cast<std::int64_t>(n_in)) > alpha_in) ++bad;
    }
    return bad;
}

GvDecodeResult gv_unique_decode(const ConcatCode& code, const std::vector<fe_t>& received,
                                const GvDecodeParams& params) {
    if (received.size() != code.block_bits()) throw ValidationError("gv decode: received length != block length");
    const std::size_t d = params.distance ? *params.distance : min_distance(concat_to_linear_code(code));
    if (d == 0) throw ValidationError("gv decode: code has minimum distance 0 (non-injective sample)");
    const std::size_t budget = (d - 1) / 2;
    const std::size_t n_in = code.n_in();

    ConcatRecoverParams rp;
    rp.alpha_in = params.alpha_in.value_or(Rational(1, 2));
    if (params.alpha_out) {
        rp.alpha_out = *params.alpha_out;
    } else {
        // With at most `budget` errors, a block needs more than
        // floor(alpha_in * n_in) of them to lose its true symbol, so at most
        // budget / (floor(alpha_in * n_in) + 1) blocks can fail.
        const std::int64_t per_block = floor_mul(rp.alpha_in, static_cast<std::int64_t>(n_in)) + 1;
        rp.alpha_out = Rational(static_cast<std::int64_t>(budget) / per_block,
                                static_cast<std::int64_t>(code.outer.n));
    }
    rp.ell_out = params.ell_out;

    const auto candidates = concat_list_recover(code, singleton_tuple(received), rp);

    GvDecodeResult result;
    result.list_size = candidates.size();
    bool found = false;
    for (const auto& msg : candidates) {
        const auto word = code.encode(msg);
        std::size_t errors = 0;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i] != received[i]) ++errors;
        if (errors <= budget) {
            // Two codewords within (d-1)/2 of the same word would contradict
            // the definition of d.
            if (found) throw std::logic_error("gv decode: two candidates within half the minimum distance");
            result.ok = true;
            result.message = msg;
            result.errors = errors;
            found = true;
        }
    }
    return result;
}

GvFeasibility gv_feasibility(double rho, double eps, double c) {
    if (rho <= 0.0 || rho >= 1.0) throw ValidationError("gv feasibility: rho outside (0, 1)");
    if (eps <= 0.0 || eps >= 1.0) throw ValidationError("gv feasibility: eps outside (0, 1)");
    if (c <= 0.0) throw ValidationError("gv feasibility: c must be positive");
    GvFeasibility out;
    out.rho = rho;
    out.eps = eps;
    out.c = c;
    out.rho_in = theta_inv(rho + eps / 2.0);
    out.rho_out = rho / out.rho_in;
    if (out.rho_out > 1.0) throw ValidationError("gv feasibility: rho_out exceeds 1; rho too large for this eps");
    const double inner_arg = 1.0 - out.rho_in - eps;
    const double inner_radius = inner_arg > 0.0 ? h2_inv(inner_arg) : 0.0;
    out.decode_radius = (1.0 - out.rho_out - 2.0 * eps * eps / c) * inner_radius;
    out.half_distance = (h2_inv(1.0 - rho) - eps) / 2.0;
    out.feasible = out.decode_radius >= out.half_distance;
    return out;
}

}  // namespace tlr
