#pragma once

// The two-phase BCW construction.
//
// Precomputation depends only on (p, r = q mod p): with d_0 = 1(-1)0^{p-2} and
// d_i = sigma^r(d_{i-1}), the partial sums omega_i = d_0 + ... + d_i stay in
// the ternary alphabet. The coefficient word of Phi_pq (or of the semigroup
// polynomial F_{p,q} for any coprime pair) is then
//
//     omega_0^{q/p} . omega_1^{q/p} ... omega_{p-3}^{q/p} . omega_{p-2}^{(q-p+2)/p}
//
// which the assembly phase writes out with Theta(pq) symbol copies.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcw/error.hpp"
#include "bcw/parallel.hpp"
#include "bcw/primality.hpp"
#include "bcw/word.hpp"

namespace bcw {

enum class Kind { cyclotomic, semigroup };

inline std::string_view to_string(Kind kind)
{
    return kind == Kind::cyclotomic ? "cyclotomic" : "semigroup";
}

inline Kind parse_kind(std::string_view text)
{
    if (text == "cyclotomic")
        return Kind::cyclotomic;
    if (text == "semigroup")
        return Kind::semigroup;
    throw InvalidPair("unknown kind '" + std::string(text) + "'");
}

/// Largest coefficient word the engine will materialize, in symbols.
inline constexpr std::uint64_t kMaxOutputLength = std::uint64_t{1} << 32;

/// A validated (p, q) pair together with s = floor(q/p) and r = q mod p.
class PairInput {
  public:
    static PairInput make(std::uint64_t p, std::uint64_t q, Kind kind,
                          std::uint64_t max_output_length = kMaxOutputLength)
    {
        const auto pair_text = "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
        if (p < 2)
            throw InvalidPair("p must be at least 2, got " + pair_text);
        if (q <= p)
            throw InvalidPair("q must exceed p, got " + pair_text);
        if (std::gcd(p, q) != 1)
            throw InvalidPair("p and q are not coprime: " + pair_text);
        if (kind == Kind::cyclotomic && !(is_prime(p) && is_prime(q)))
            throw InvalidPair("cyclotomic kind needs two primes: " + pair_text);
        const auto len = static_cast<unsigned __int128>(p - 1) * (q - 1) + 1;
        if (len > max_output_length)
            throw OutputTooLarge("output length for " + pair_text + " exceeds the cap of " +
                                 std::to_string(max_output_length) + " symbols");
        return PairInput(p, q, kind);
    }

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t quotient() const noexcept { return q_ / p_; }
    std::uint64_t remainder() const noexcept { return q_ % p_; }
    Kind kind() const noexcept { return kind_; }
    /// phi(pq) + 1 = (p-1)(q-1) + 1
    std::uint64_t output_length() const noexcept { return (p_ - 1) * (q_ - 1) + 1; }

    friend bool operator==(const PairInput&, const PairInput&) = default;

  private:
    PairInput(std::uint64_t p, std::uint64_t q, Kind kind) : p_(p), q_(q), kind_(kind) {}

    std::uint64_t p_;
    std::uint64_t q_;
    Kind kind_;
};

/// d_0 = 1 (-1) 0^{p-2}
inline Word base_word(std::uint64_t p)
{
    std::vector<Symbol> symbols(p, Symbol::zero);
    symbols.at(0) = Symbol::plus;
    symbols.at(1) = Symbol::minus;
    return Word(std::move(symbols));
}

class PrecompTable;
inline PrecompTable precompute(std::uint64_t p, std::uint64_t r);

/// O_{p,r}: the words omega_0..omega_{p-2} and their length-r prefixes.
class PrecompTable {
  public:
    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t r() const noexcept { return r_; }
    const std::vector<Word>& omegas() const noexcept { return omegas_; }
    const std::vector<Word>& prefixes() const noexcept { return prefixes_; }

    friend bool operator==(const PrecompTable&, const PrecompTable&) = default;

  private:
    friend PrecompTable precompute(std::uint64_t p, std::uint64_t r);

    PrecompTable(std::uint64_t p, std::uint64_t r, std::vector<Word> omegas,
                 std::vector<Word> prefixes)
        : p_(p), r_(r), omegas_(std::move(omegas)), prefixes_(std::move(prefixes))
    {
    }

    std::uint64_t p_;
    std::uint64_t r_;
    std::vector<Word> omegas_;
    std::vector<Word> prefixes_;
};

inline void check_residue(std::uint64_t p, std::uint64_t r)
{
    if (p < 2)
        throw InvalidPair("p must be at least 2, got " + std::to_string(p));
    if (r < 1 || r >= p)
        throw InvalidPair("r = " + std::to_string(r) + " is outside [1, " + std::to_string(p - 1) +
                          "]");
    if (std::gcd(p, r) != 1)
        throw InvalidPair("gcd(" + std::to_string(p) + ", " + std::to_string(r) + ") != 1");
    if (static_cast<unsigned __int128>(p) * (p - 1) > kMaxOutputLength)
        throw OutputTooLarge("p = " + std::to_string(p) + " is too large to precompute");
}

/// Precomputation phase: Theta(p) word operations on words of length p.
inline PrecompTable precompute(std::uint64_t p, std::uint64_t r)
{
    check_residue(p, r);
    std::vector<Word> omegas;
    std::vector<Word> prefixes;
    omegas.reserve(p - 1);
    prefixes.reserve(p - 1);

    Word d = base_word(p);
    omegas.push_back(d);
    for (std::uint64_t i = 1; i + 1 < p; ++i) {
        d = rotate_left(d, r);
        omegas.push_back(internal_add(omegas.back(), d));
    }
    for (const auto& omega : omegas)
        prefixes.push_back(truncate(omega, r));
    return PrecompTable(p, r, std::move(omegas), std::move(prefixes));
}

/// O_p: one PrecompTable per residue r in [1, p-1] coprime to p.
struct TotalTable {
    std::uint64_t p = 0;
    std::map<std::uint64_t, PrecompTable> entries;

    const PrecompTable& at(std::uint64_t r) const { return entries.at(r); }
};

inline std::vector<std::uint64_t> coprime_residues(std::uint64_t p)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 1; r < p; ++r) {
        if (std::gcd(p, r) == 1)
            out.push_back(r);
    }
    return out;
}

inline TotalTable precompute_total(std::uint64_t p, unsigned jobs = 1)
{
    if (p < 2)
        throw InvalidPair("p must be at least 2, got " + std::to_string(p));
    const auto residues = coprime_residues(p);
    auto tables = parallel_map(residues.size(), jobs, [&](std::size_t i) {
        return std::optional<PrecompTable>(precompute(p, residues[i]));
    });
    TotalTable total{p, {}};
    for (std::size_t i = 0; i < residues.size(); ++i)
        total.entries.emplace(residues[i], std::move(*tables[i]));
    return total;
}

/// The coefficient word a_pq (constant term first) of Phi_pq or F_{p,q}.
struct CoeffWord {
    PairInput pair;
    Word word;

    friend bool operator==(const CoeffWord&, const CoeffWord&) = default;
};

/// Concatenation phase. Writes the final (p-1)(q-1)+1 symbols directly; the
/// last block is omega_{p-2}^{(q-p+2)/p} instead of a full q-block that
/// would then lose its last p-2 symbols.
inline CoeffWord assemble(const PairInput& pair, const PrecompTable& table)
{
    if (table.p() != pair.p() || table.r() != pair.remainder())
        throw TableMismatch("table (p=" + std::to_string(table.p()) + ", r=" +
                            std::to_string(table.r()) + ") does not match pair (p=" +
                            std::to_string(pair.p()) + ", r=" + std::to_string(pair.remainder()) +
                            ")");
    const std::uint64_t p = pair.p();
    const std::uint64_t q = pair.q();
    const std::uint64_t s = pair.quotient();

    std::vector<Symbol> out;
    out.reserve(pair.output_length());
    const auto& omegas = table.omegas();
    for (std::uint64_t i = 0; i + 2 < p; ++i) {
        const auto omega = omegas[i].symbols();
        for (std::uint64_t copy = 0; copy < s; ++copy)
            out.insert(out.end(), omega.begin(), omega.end());
        const auto prefix = table.prefixes()[i].symbols();
        out.insert(out.end(), prefix.begin(), prefix.end());
    }
    append_fractional_power(out, omegas[p - 2].symbols(), q - p + 2);

    // (p-2) q + (q-p+2) = (p-1)(q-1) + 1
    if (out.size() != pair.output_length())
        throw std::logic_error("assemble produced " + std::to_string(out.size()) +
                               " symbols, expected " + std::to_string(pair.output_length()));
    return CoeffWord{pair, Word(std::move(out))};
}

inline CoeffWord compute(std::uint64_t p, std::uint64_t q, Kind kind)
{
    const auto pair = PairInput::make(p, q, kind);
    return assemble(pair, precompute(pair.p(), pair.remainder()));
}

} // namespace bcw
