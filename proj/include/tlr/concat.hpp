#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tlr/linear_code.hpp"
#include "tlr/list_recovery.hpp"

namespace tlr {

/// Concatenation of an outer code over GF(2^s) with one binary inner code
/// per outer coordinate (all [n_in, s] over GF(2)). Outer symbols and bit
/// blocks are identified through the coefficient basis {1, x, ..., x^{s-1}}:
/// bit u of a symbol value is the coefficient of x^u.
struct ConcatCode {
    LinearCode outer;
    std::vector<LinearCode> inners;  // outer.n codes, each k = s over GF(2)

    std::size_t s() const { return static_cast<std::size_t>(outer.field->s()); }
    std::size_t n_in() const { return inners.front().n; }
    std::size_t message_bits() const { return outer.k * s(); }
    std::size_t block_bits() const { return outer.n * n_in(); }
    Rational rate() const;

    /// Bits in, bits out: pack message bits into outer symbols, outer-encode,
    /// expand each outer symbol, inner-encode per coordinate, concatenate.
    std::vector<fe_t> encode(const std::vector<fe_t>& message_bits_in) const;
};

ConcatCode make_concat(LinearCode outer, std::vector<LinearCode> inners);

/// Outer symbol <-> coefficient bits.
std::vector<fe_t> expand_symbol(fe_t symbol, std::size_t s);
fe_t pack_symbol(const std::vector<fe_t>& bits);

/// Random concatenation: an independent uniformly random (unrestricted, so
/// possibly non-injective) binary [s/rho_in, s] inner per outer coordinate.
ConcatCode thommesen_sample(const LinearCode& outer, const Rational& rho_in, std::uint64_t seed);

/// The concatenated code as an explicit binary generator matrix.
LinearCode concat_to_linear_code(const ConcatCode& code);

/// Fraction of non-zero coordinates.
Rational relative_weight(const std::vector<fe_t>& word);

using OuterRecoverFn =
    std::function<std::vector<std::vector<fe_t>>(const ListTuple& outer_tuple, const Rational& alpha_out)>;

struct ConcatRecoverParams {
    Rational alpha_in;        // per-block inner recovery radius
    Rational alpha_out;       // outer recovery radius
    std::size_t ell_out = 0;  // inner output-list cap (0 = outer alphabet size)
};

/// Inner-then-outer list recovery: brute-force recover each bit block at
/// alpha_in into a set of outer symbol candidates, then run the outer
/// recoverer on the resulting tuple at alpha_out. A block whose candidate
/// set exceeds ell_out raises a ValidationError naming it. Output messages
/// are bit vectors in canonical order.
std::vector<std::vector<fe_t>> concat_list_recover(const ConcatCode& code, const ListTuple& fine,
                                                   const ConcatRecoverParams& params,
                                                   const OuterRecoverFn& outer_recover = {});

/// Number of blocks whose inner violation fraction exceeds alpha_in (the
/// combinatorial quantity behind the concatenation radius argument).
std::size_t blocks_exceeding(const ConcatCode& code, const std::vector<fe_t>& codeword, const ListTuple& fine,
                             const Rational& alpha_in);

struct GvDecodeParams {
    std::optional<std::size_t> distance;  // precomputed exact min distance
    std::optional<Rational> alpha_in;     // default 1/2
    std::optional<Rational> alpha_out;    // default derived from the error budget
    std::size_t ell_out = 0;
};

struct GvDecodeResult {
    bool ok = false;
    std::vector<fe_t> message;   // message bits when ok
    std::size_t errors = 0;      // Hamming distance of the returned codeword to `received`
    std::size_t list_size = 0;   // size of the list-decoding stage output
};

/// Unique decoding up to half the exact minimum distance: list-decode via
/// concat_list_recover on the singleton lists of `received`, re-encode the
/// candidates, and return the unique one within (d-1)/2 errors.
GvDecodeResult gv_unique_decode(const ConcatCode& code, const std::vector<fe_t>& received,
                                const GvDecodeParams& params = {});

struct GvFeasibility {
    double rho = 0, eps = 0, c = 0;
    double rho_in = 0, rho_out = 0;
    double decode_radius = 0;   // (1 - rho_out - 2 eps^2/c) * H2^{-1}(1 - rho_in - eps)
    double half_distance = 0;   // (H2^{-1}(1 - rho) - eps) / 2
    bool feasible = false;
};

/// Numeric check that the list-decoding radius of the random concatenation
/// covers half its distance at rate rho and slack eps; c is the universal
/// constant, supplied by the caller.
GvFeasibility gv_feasibility(double rho, double eps, double c);

}  // namespace tlr
