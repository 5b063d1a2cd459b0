#pragma once

// Words over the ternary alphabet {-1, 0, +1} and the handful of operations
// the BCW construction is written in: concatenation, (fractional) powers,
// left circular permutation, truncation and internal addition.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcw/error.hpp"

namespace bcw {

enum class Symbol : std::int8_t { minus = -1, zero = 0, plus = 1 };

constexpr int to_int(Symbol s) noexcept { return static_cast<int>(s); }

constexpr bool is_symbol_value(long long v) noexcept { return v >= -1 && v <= 1; }

inline Symbol to_symbol(long long v)
{
    if (!is_symbol_value(v))
        throw WordDomainError("value " + std::to_string(v) + " is not in {-1, 0, 1}");
    return static_cast<Symbol>(v);
}

/// A finite word over {-1, 0, +1}. The empty word is a valid value.
class Word {
  public:
    using value_type = Symbol;
    using const_iterator = std::vector<Symbol>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    /// Convenience for literals: Word{1, -1, 0}. Throws on values outside the alphabet.
    Word(std::initializer_list<int> values)
    {
        symbols_.reserve(values.size());
        for (int v : values)
            symbols_.push_back(to_symbol(v));
    }

    template <class IntRange>
    static Word from_ints(const IntRange& values)
    {
        std::vector<Symbol> out;
        for (auto v : values)
            out.push_back(to_symbol(static_cast<long long>(v)));
        return Word(std::move(out));
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    int at(std::size_t i) const { return to_int(symbols_.at(i)); }

    const_iterator begin() const noexcept { return symbols_.begin(); }
    const_iterator end() const noexcept { return symbols_.end(); }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// Integer sum of all symbols.
    long long symbol_sum() const noexcept
    {
        return std::accumulate(symbols_.begin(), symbols_.end(), 0LL,
                               [](long long acc, Symbol s) { return acc + to_int(s); });
    }

    std::vector<int> to_ints() const
    {
        std::vector<int> out(symbols_.size());
        std::transform(symbols_.begin(), symbols_.end(), out.begin(), to_int);
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;

  private:
    std::vector<Symbol> symbols_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w)
{
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            os << ',';
        os << to_int(w[i]);
    }
    return os << ']';
}

/// u·v
inline Word concat(const Word& u, const Word& v)
{
    std::vector<Symbol> out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return Word(std::move(out));
}

/// Appends v^{k/|v|} to out: floor(k/|v|) full copies of v, then its prefix
/// of length k mod |v|. Shared by fractional_power and the assembly phase.
inline void append_fractional_power(std::vector<Symbol>& out, std::span<const Symbol> v,
                                    std::size_t k)
{
    if (k == 0)
        return;
    if (v.empty())
        throw WordDomainError("fractional power of the empty word with k > 0");
    const std::size_t p = v.size();
    for (std::size_t full = k / p; full > 0; --full)
        out.insert(out.end(), v.begin(), v.end());
    out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k % p));
}

/// v^{k/p} with p = |v|: the length-k prefix of the periodic word v v v ...
inline Word fractional_power(const Word& v, std::size_t k)
{
    std::vector<Symbol> out;
    out.reserve(k);
    append_fractional_power(out, v.symbols(), k);
    return Word(std::move(out));
}

/// Integer power v^s (s full copies).
inline Word power(const Word& v, std::size_t s)
{
    if (v.empty())
        return Word{};
    return fractional_power(v, s * v.size());
}

/// sigma^t(v), sigma moving the first symbol to the end. t is reduced mod |v|.
inline Word rotate_left(const Word& v, std::uint64_t t)
{
    if (v.empty())
        throw WordDomainError("rotate_left of the empty word");
    const auto shift = static_cast<std::ptrdiff_t>(t % v.size());
    std::vector<Symbol> out(v.size());
    std::rotate_copy(v.begin(), v.begin() + shift, v.end(), out.begin());
    return Word(std::move(out));
}

/// Prefix of length k.
inline Word truncate(const Word& v, std::size_t k)
{
    if (k > v.size())
        throw WordDomainError("truncate: k = " + std::to_string(k) + " exceeds length " +
                              std::to_string(v.size()));
    return Word(std::vector<Symbol>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k)));
}

/// Componentwise sum that must stay inside the alphabet.
inline Word internal_add(const Word& u, const Word& v)
{
    if (u.size() != v.size())
        throw WordDomainError("internal_add: lengths " + std::to_string(u.size()) + " and " +
                              std::to_string(v.size()) + " differ");
    std::vector<Symbol> out(u.size());
    const auto a = u.symbols();
    const auto b = v.symbols();
    // Branch-free so the loop vectorizes; the position is located only on failure.
    unsigned bad = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int sum = to_int(a[i]) + to_int(b[i]);
        bad |= static_cast<unsigned>(sum + 1) > 2u;
        out[i] = static_cast<Symbol>(sum);
    }
    if (bad) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            const int sum = to_int(a[i]) + to_int(b[i]);
            if (!is_symbol_value(sum))
                throw AdditionOverflow("internal_add: symbol sum " + std::to_string(sum) +
                                       " at position " + std::to_string(i));
        }
    }
    return Word(std::move(out));
}

} // namespace bcw
