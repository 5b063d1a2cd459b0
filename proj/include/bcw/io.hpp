#pragma once

// Plain-text encodings.
//
// Table file (one per (p, r)):
//     bcw-table 1 <p> <r>
//     <omega_0 as p space-separated symbols>
//     ...
//     <omega_{p-2}>
//
// Dense coefficient word:
//     <p> <q> <len>
//     <len space-separated symbols, constant term first>
//
// Sparse coefficient word: one "<exponent> <sign>" line per nonzero entry.

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "bcw/analysis.hpp"
#include "bcw/engine.hpp"
#include "bcw/error.hpp"
#include "bcw/word.hpp"

namespace bcw {

inline constexpr const char* kTableMagic = "bcw-table";
inline constexpr int kTableFormatVersion = 1;

namespace detail {

inline void write_symbols(std::ostream& os, std::span<const Symbol> symbols)
{
    // Hot path for multi-megabyte dense output: build the line in one buffer.
    std::string line;
    line.reserve(symbols.size() * 3);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i)
            line.push_back(' ');
        switch (symbols[i]) {
        case Symbol::minus: line += "-1"; break;
        case Symbol::zero: line.push_back('0'); break;
        case Symbol::plus: line.push_back('1'); break;
        }
    }
    os << line << '\n';
}

inline std::vector<Symbol> read_symbols(std::istream& is, std::uint64_t count, const char* what)
{
    std::vector<Symbol> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        long long v;
        if (!(is >> v))
            throw FormatError(std::string(what) + ": expected " + std::to_string(count) +
                              " symbols, found " + std::to_string(i));
        if (!is_symbol_value(v))
            throw FormatError(std::string(what) + ": symbol " + std::to_string(v) +
                              " outside {-1, 0, 1}");
        out.push_back(static_cast<Symbol>(v));
    }
    return out;
}

inline void expect_end(std::istream& is, const char* what)
{
    std::string extra;
    if (is >> extra)
        throw FormatError(std::string(what) + ": trailing content '" + extra + "'");
}

} // namespace detail

inline void write_table(std::ostream& os, const PrecompTable& table)
{
    os << kTableMagic << ' ' << kTableFormatVersion << ' ' << table.p() << ' ' << table.r()
       << '\n';
    for (const auto& omega : table.omegas())
        detail::write_symbols(os, omega.symbols());
}

inline std::string serialize_table(const PrecompTable& table)
{
    std::ostringstream os;
    write_table(os, table);
    return os.str();
}

/// Parses a table file. The body must equal the omegas recomputed for the
/// header's (p, r); anything else is reported as a FormatError.
inline PrecompTable read_table(std::istream& is)
{
    std::string magic;
    int version = 0;
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    if (!(is >> magic >> version >> p >> r) || magic != kTableMagic)
        throw FormatError("table: bad header");
    if (version != kTableFormatVersion)
        throw FormatError("table: unsupported format version " + std::to_string(version));
    try {
        check_residue(p, r);
    } catch (const InvalidPair& e) {
        throw FormatError(std::string("table: ") + e.what());
    }
    std::vector<Word> omegas;
    omegas.reserve(p - 1);
    for (std::uint64_t i = 0; i + 1 < p; ++i)
        omegas.emplace_back(detail::read_symbols(is, p, "table"));
    detail::expect_end(is, "table");

    auto table = precompute(p, r);
    if (table.omegas() != omegas)
        throw FormatError("table: body differs from the words determined by p = " +
                          std::to_string(p) + ", r = " + std::to_string(r));
    return table;
}

inline PrecompTable parse_table(const std::string& text)
{
    std::istringstream is(text);
    return read_table(is);
}

inline void write_dense(std::ostream& os, const CoeffWord& w)
{
    os << w.pair.p() << ' ' << w.pair.q() << ' ' << w.word.size() << '\n';
    detail::write_symbols(os, w.word.symbols());
}

inline std::string format_dense(const CoeffWord& w)
{
    std::ostringstream os;
    write_dense(os, w);
    return os.str();
}

/// Rebuilds a CoeffWord from dense text. The header must name a valid pair
/// of the given kind and a length of (p-1)(q-1)+1.
inline CoeffWord read_dense(std::istream& is, Kind kind)
{
    std::uint64_t p = 0, q = 0, len = 0;
    if (!(is >> p >> q >> len))
        throw FormatError("dense: bad header");
    const auto pair = PairInput::make(p, q, kind);
    if (len != pair.output_length())
        throw FormatError("dense: length " + std::to_string(len) + " != (p-1)(q-1)+1 = " +
                          std::to_string(pair.output_length()));
    Word word(detail::read_symbols(is, len, "dense"));
    detail::expect_end(is, "dense");
    return CoeffWord{pair, std::move(word)};
}

inline CoeffWord parse_dense(const std::string& text, Kind kind)
{
    std::istringstream is(text);
    return read_dense(is, kind);
}

inline void write_sparse(std::ostream& os, const CoeffWord& w)
{
    std::string out;
    for (const auto& t : support(w)) {
        out += std::to_string(t.exponent);
        out += t.sign > 0 ? " 1\n" : " -1\n";
    }
    os << out;
}

inline std::string format_sparse(const CoeffWord& w)
{
    std::ostringstream os;
    write_sparse(os, w);
    return os.str();
}

/// "ω_0^{q/p}·ω_1^{q/p}·…·ω_{p-2}^{(q-p+2)/p}" with the numbers filled in.
inline std::string compact_formula(const PairInput& pair)
{
    const auto p = pair.p();
    const auto q = pair.q();
    std::string out;
    for (std::uint64_t i = 0; i + 1 < p; ++i) {
        if (i)
            out += "·";
        const auto numerator = i + 2 < p ? q : q - p + 2;
        out += "ω_" + std::to_string(i) + "^{" + std::to_string(numerator) + "/" +
               std::to_string(p) + "}";
    }
    return out;
}

/// The compact representation: the p-1 words omega_i and the fractional-power
/// formula that expands them into the coefficient word.
inline void write_compact(std::ostream& os, const PairInput& pair, const PrecompTable& table)
{
    if (table.p() != pair.p() || table.r() != pair.remainder())
        throw TableMismatch("compact output: table does not match the pair");
    os << "p=" << pair.p() << " q=" << pair.q() << " s=" << pair.quotient()
       << " r=" << pair.remainder() << " kind=" << to_string(pair.kind())
       << " len=" << pair.output_length() << '\n';
    for (std::size_t i = 0; i < table.omegas().size(); ++i) {
        os << "ω_" << i << " = ";
        detail::write_symbols(os, table.omegas()[i].symbols());
    }
    os << "a = " << compact_formula(pair) << '\n';
}

} // namespace bcw
