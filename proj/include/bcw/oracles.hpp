#pragma once

// Three slow reference computations of the coefficient word of F_{p,q}
// (= Phi_pq for prime p, q). None of them touches the BCW precomputation or
// assembly code; they exist to be compared against it.
//
//   division   (x^{pq}-1)(x-1) / ((x^p-1)(x^q-1)) by exact long division
//   semigroup  1 + (x-1) * sum of x^g over the gaps g of <p, q>
//   shift_add  sum_{i=0}^{p-2} S^{iq} c, with c the length-(m+1) periodic
//              extension of 1(-1)0^{p-2} and S the one-step shift

#include <cstdint>
#include <string>
#include <vector>

#include "bcw/engine.hpp"
#include "bcw/int_poly.hpp"
#include "bcw/word.hpp"

namespace bcw {

namespace detail {

template <class IntRange>
Word checked_word(const IntRange& coeffs, const char* oracle)
{
    std::vector<Symbol> out;
    out.reserve(coeffs.size());
    std::uint64_t e = 0;
    for (auto c : coeffs) {
        if (!is_symbol_value(c))
            throw AlphabetViolation(std::string(oracle) + " oracle: coefficient " +
                                    std::to_string(c) + " at x^" + std::to_string(e));
        out.push_back(static_cast<Symbol>(c));
        ++e;
    }
    return Word(std::move(out));
}

} // namespace detail

inline CoeffWord oracle_division(std::uint64_t p, std::uint64_t q, Kind kind = Kind::semigroup)
{
    const auto pair = PairInput::make(p, q, kind);
    const auto num = poly_mul(IntPoly::x_pow_minus_one(p * q), IntPoly::x_pow_minus_one(1));
    const auto den = poly_mul(IntPoly::x_pow_minus_one(p), IntPoly::x_pow_minus_one(q));
    const auto quotient = poly_divexact(num, den);

    const std::uint64_t m = pair.output_length() - 1;
    if (quotient.degree() != m)
        throw AlphabetViolation("division oracle: quotient degree differs from (p-1)(q-1)");
    std::vector<Coefficient> dense(m + 1, 0);
    for (const auto& t : quotient.terms())
        dense[t.exponent] = t.coefficient;
    return CoeffWord{pair, detail::checked_word(dense, "division")};
}

/// Gaps of the numerical semigroup generated by coprime p < q, ascending.
/// In residue class c mod p the smallest member is the unique b*q with
/// b < p and b*q = c (mod p); n is a member iff it is at least that value.
inline std::vector<std::uint64_t> semigroup_gaps(std::uint64_t p, std::uint64_t q)
{
    const auto pair = PairInput::make(p, q, Kind::semigroup);
    std::vector<std::uint64_t> smallest(p, 0);
    for (std::uint64_t b = 0; b < p; ++b)
        smallest[(b * q) % p] = b * q;
    // Every n > pq - p - q is a member, so scanning [0, (p-1)(q-1)) suffices.
    const std::uint64_t bound = pair.output_length() - 1;
    std::vector<std::uint64_t> gaps;
    gaps.reserve(bound / 2);
    for (std::uint64_t n = 0, residue = 0; n < bound; ++n) {
        if (n < smallest[residue])
            gaps.push_back(n);
        if (++residue == p)
            residue = 0;
    }
    return gaps;
}

inline CoeffWord oracle_semigroup(std::uint64_t p, std::uint64_t q, Kind kind = Kind::semigroup)
{
    const auto pair = PairInput::make(p, q, kind);
    const std::uint64_t m = pair.output_length() - 1;
    std::vector<std::int64_t> dense(m + 1, 0);
    dense[0] = 1;
    for (std::uint64_t g : semigroup_gaps(p, q)) {
        // (x - 1) x^g
        dense[g + 1] += 1;
        dense[g] -= 1;
    }
    return CoeffWord{pair, detail::checked_word(dense, "semigroup")};
}

inline CoeffWord oracle_shift_add(std::uint64_t p, std::uint64_t q, Kind kind = Kind::semigroup)
{
    const auto pair = PairInput::make(p, q, kind);
    const std::uint64_t m = pair.output_length() - 1;

    std::vector<Symbol> period(p, Symbol::zero);
    period[0] = Symbol::plus;
    period[1] = Symbol::minus;
    const Word c = fractional_power(Word(std::move(period)), m + 1);
    const auto cs = c.symbols();

    // At most p-1 terms of magnitude 1 land on any entry, far inside int32.
    std::vector<std::int32_t> acc(m + 1, 0);
    for (std::uint64_t i = 0; i + 2 <= p; ++i) {
        const std::uint64_t shift = i * q;
        if (shift > m)
            break;
        std::int32_t* dst = acc.data() + shift;
        const std::uint64_t len = m + 1 - shift;
        for (std::uint64_t j = 0; j < len; ++j)
            dst[j] += to_int(cs[j]);
    }
    return CoeffWord{pair, detail::checked_word(acc, "shift-add")};
}

} // namespace bcw
