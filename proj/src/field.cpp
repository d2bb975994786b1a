#include "tlr/field.hpp"

#include <array>
#include <string>

namespace tlr {

namespace {

int poly_degree(std::uint32_t p) {
    int d = -1;
    for (int i = 0; i < 32; ++i)
        if (p & (1u << i)) d = i;
    return d;
}

// Remainder of a mod b over GF(2)[x].
std::uint32_t poly_rem(std::uint32_t a, std::uint32_t b) {
    const int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

std::string poly_str(std::uint32_t p) {
    std::string out;
    bool first = true;
    for (int i = poly_degree(p); i >= 0; --i) {
        if (!(p & (1u << i))) continue;
        if (!first) out += "+";
        first = false;
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "x";
        else
            out += "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

// Trial division by every polynomial of degree 1..s/2; returns a factor or 0.
std::uint32_t find_factor(std::uint32_t poly, int s) {
    for (int d = 1; 2 * d <= s; ++d) {
        for (std::uint32_t f = (1u << d); f < (1u << (d + 1)); ++f) {
            if (poly_rem(poly, f) == 0) return f;
        }
    }
    return 0;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

fe_t polymul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int s) {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1u) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    // Reduce (degree can be up to 2s-2).
    for (int i = 2 * s - 2; i >= s; --i) {
        if (acc & (std::uint64_t{1} << i)) acc ^= std::uint64_t{poly} << (i - s);
    }
    return static_cast<fe_t>(acc);
}

std::uint32_t Field::default_poly(int s) {
    // Primitive polynomials over GF(2), one per degree.
    static constexpr std::array<std::uint32_t, 17> table = {
        0,      0x3,    0x7,    0xB,    0x13,   0x25,   0x43,    0x89,   0x11D,
        0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003,  0x1100B};
    if (s < 1 || s > 16) throw ValidationError("field exponent s must be in [1, 16], got " + std::to_string(s));
    return table[static_cast<std::size_t>(s)];
}

Field::Field(int s, std::uint32_t poly) : s_(s), poly_(poly) {
    if (s < 1 || s > 16) throw ValidationError("field exponent s must be in [1, 16], got " + std::to_string(s));
    if (poly_degree(poly) != s)
        throw ValidationError("modulus polynomial must have degree exactly " + std::to_string(s) + ", got " +
                              poly_str(poly));
    if (std::uint32_t f = find_factor(poly, s); f != 0)
        throw ValidationError("modulus polynomial " + poly_str(poly) + " is reducible: divisible by " + poly_str(f));

    q_ = 1u << s;
    log_.assign(q_, 0);
    antilog_.assign(q_ - 1, 0);

    if (q_ == 2) {
        antilog_[0] = 1;
        log_[1] = 0;
        return;
    }

    // Tables are powers of a multiplicative generator. For an irreducible but
    // non-primitive modulus x itself has a short orbit, so search for a
    // generator by order test.
    const std::uint32_t group = q_ - 1;
    const auto primes = prime_factors(group);
    fe_t gen = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (std::uint32_t p : primes) {
            // cand^(group/p) == 1 would mean the order divides group/p.
            std::uint32_t e = group / p;
            fe_t acc = 1, base = static_cast<fe_t>(cand);
            while (e) {
                if (e & 1u) acc = polymul_mod(acc, base, poly_, s_);
                base = polymul_mod(base, base, poly_, s_);
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = static_cast<fe_t>(cand);
            break;
        }
    }
    if (gen == 0) throw ValidationError("no multiplicative generator found; modulus is not irreducible");

    fe_t v = 1;
    for (std::uint32_t e = 0; e < group; ++e) {
        antilog_[e] = v;
        log_[v] = static_cast<fe_t>(e);
        v = polymul_mod(v, gen, poly_, s_);
    }
    if (v != 1) throw ValidationError("generator orbit did not close; modulus is not irreducible");
}

fe_t Field::inv(fe_t a) const {
    if (a == 0) throw ValidationError("division by zero in GF(2^" + std::to_string(s_) + ")");
    if (a == 1) return 1;
    return antilog_[(q_ - 1) - log_[a]];
}

fe_t Field::pow(fe_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return antilog_[le];
}

FieldPtr make_field(int s, std::uint32_t poly) { return std::make_shared<const Field>(s, poly); }

FieldPtr make_field(int s) { return std::make_shared<const Field>(s, Field::default_poly(s)); }

}  // namespace tlr
