#pragma once

// Sparse exact-integer polynomials, just enough for the division oracle.
// Coefficients are 64-bit with overflow-checked arithmetic: a result is either
// exact or an ArithmeticOverflow is thrown, never a wrapped value.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bcw/error.hpp"

namespace bcw {

using Coefficient = std::int64_t;

namespace detail {

inline Coefficient checked_add(Coefficient a, Coefficient b)
{
    Coefficient out;
    if (__builtin_add_overflow(a, b, &out))
        throw ArithmeticOverflow("integer overflow in polynomial addition");
    return out;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b)
{
    Coefficient out;
    if (__builtin_mul_overflow(a, b, &out))
        throw ArithmeticOverflow("integer overflow in polynomial multiplication");
    return out;
}

inline Coefficient checked_sub(Coefficient a, Coefficient b)
{
    Coefficient out;
    if (__builtin_sub_overflow(a, b, &out))
        throw ArithmeticOverflow("integer overflow in polynomial subtraction");
    return out;
}

} // namespace detail

struct Term {
    std::uint64_t exponent;
    Coefficient coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Terms are kept sorted by ascending exponent with no zero coefficients.
class IntPoly {
  public:
    IntPoly() = default;

    /// Accepts terms in any order; equal exponents are summed, zeros dropped.
    explicit IntPoly(std::vector<Term> terms)
    {
        std::map<std::uint64_t, Coefficient> merged;
        for (const auto& t : terms) {
            auto& slot = merged[t.exponent];
            slot = detail::checked_add(slot, t.coefficient);
        }
        for (const auto& [e, c] : merged) {
            if (c != 0)
                terms_.push_back({e, c});
        }
    }

    static IntPoly monomial(Coefficient c, std::uint64_t e) { return IntPoly({{e, c}}); }

    /// x^n - 1
    static IntPoly x_pow_minus_one(std::uint64_t n) { return IntPoly({{n, 1}, {0, -1}}); }

    /// Dense coefficients, constant term first.
    template <class IntRange>
    static IntPoly from_dense(const IntRange& coeffs)
    {
        std::vector<Term> terms;
        std::uint64_t e = 0;
        for (auto c : coeffs) {
            if (c != 0)
                terms.push_back({e, static_cast<Coefficient>(c)});
            ++e;
        }
        return IntPoly(std::move(terms));
    }

    bool is_zero() const noexcept { return terms_.empty(); }

    /// Empty for the zero polynomial.
    std::optional<std::uint64_t> degree() const noexcept
    {
        if (terms_.empty())
            return std::nullopt;
        return terms_.back().exponent;
    }

    Coefficient coefficient(std::uint64_t e) const noexcept
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, std::uint64_t x) { return t.exponent < x; });
        return it != terms_.end() && it->exponent == e ? it->coefficient : 0;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

  private:
    struct sorted_tag {};
    IntPoly(sorted_tag, std::vector<Term> terms) : terms_(std::move(terms)) {}
    friend IntPoly poly_divexact(const IntPoly& num, const IntPoly& den);

    std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& f)
{
    if (f.is_zero())
        return os << '0';
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        os << (first ? "" : " ") << (it->coefficient < 0 ? "-" : (first ? "" : "+"));
        const auto mag = it->coefficient < 0 ? -static_cast<unsigned __int128>(it->coefficient)
                                             : static_cast<unsigned __int128>(it->coefficient);
        if (mag != 1 || it->exponent == 0)
            os << static_cast<unsigned long long>(mag);
        if (it->exponent > 0)
            os << "x";
        if (it->exponent > 1)
            os << '^' << it->exponent;
        first = false;
    }
    return os;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b)
{
    std::vector<Term> products;
    products.reserve(a.terms().size() * b.terms().size());
    for (const auto& s : a.terms()) {
        for (const auto& t : b.terms()) {
            if (t.exponent > UINT64_MAX - s.exponent)
                throw ArithmeticOverflow("exponent overflow in polynomial multiplication");
            products.push_back(
                {s.exponent + t.exponent, detail::checked_mul(s.coefficient, t.coefficient)});
        }
    }
    return IntPoly(std::move(products));
}

/// Upper bound on the numerator degree the dense working remainder may span.
inline constexpr std::uint64_t kMaxDivisionDegree = std::uint64_t{1} << 30;

/// Schoolbook long division from the top exponent down. The remainder is kept
/// densely; the divisor is walked sparsely, so each quotient term costs one
/// pass over the divisor's nonzero terms.
inline IntPoly poly_divexact(const IntPoly& num, const IntPoly& den)
{
    if (den.is_zero())
        throw InexactDivision("division by the zero polynomial");
    if (num.is_zero())
        return IntPoly{};
    const std::uint64_t num_deg = *num.degree();
    const std::uint64_t den_deg = *den.degree();
    if (num_deg < den_deg)
        throw InexactDivision("numerator degree is below divisor degree");
    if (num_deg > kMaxDivisionDegree)
        throw ArithmeticOverflow("numerator degree " + std::to_string(num_deg) +
                                 " exceeds the dense division limit");

    std::vector<Coefficient> rem(num_deg + 1, 0);
    for (const auto& t : num.terms())
        rem[t.exponent] = t.coefficient;

    const Coefficient lead = den.terms().back().coefficient;
    std::vector<Term> quotient;
    for (std::uint64_t e = num_deg + 1; e-- > den_deg;) {
        const Coefficient c = rem[e];
        if (c == 0)
            continue;
        if (c % lead != 0)
            throw InexactDivision("leading coefficient " + std::to_string(c) +
                                  " is not divisible by " + std::to_string(lead));
        const Coefficient qc = c / lead;
        const std::uint64_t shift = e - den_deg;
        quotient.push_back({shift, qc});
        for (const auto& t : den.terms()) {
            auto& slot = rem[shift + t.exponent];
            slot = detail::checked_sub(slot, detail::checked_mul(qc, t.coefficient));
        }
    }
    for (std::uint64_t e = 0; e < den_deg; ++e) {
        if (rem[e] != 0)
            throw InexactDivision("nonzero remainder at x^" + std::to_string(e));
    }
    std::reverse(quotient.begin(), quotient.end());
    return IntPoly(IntPoly::sorted_tag{}, std::move(quotient));
}

} // namespace bcw
