#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bcw/engine.hpp"
#include "bcw/word.hpp"

namespace bcw {

struct SupportTerm {
    std::uint64_t exponent;
    int sign;

    friend bool operator==(const SupportTerm&, const SupportTerm&) = default;
};

/// Nonzero entries of w in increasing exponent order.
inline std::vector<SupportTerm> support(const Word& w)
{
    std::vector<SupportTerm> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != Symbol::zero)
            out.push_back({i, to_int(w[i])});
    }
    return out;
}

inline std::vector<SupportTerm> support(const CoeffWord& w) { return support(w.word); }

inline bool is_palindromic(const Word& w)
{
    const auto s = w.symbols();
    for (std::size_t i = 0, j = s.size(); i < j--; ++i) {
        if (s[i] != s[j])
            return false;
    }
    return true;
}

/// Nonzero symbols read +1, -1, +1, ... and the last one is +1.
inline bool is_alternating(const Word& w)
{
    Symbol expected = Symbol::plus;
    bool any = false;
    for (Symbol s : w) {
        if (s == Symbol::zero)
            continue;
        if (s != expected)
            return false;
        expected = expected == Symbol::plus ? Symbol::minus : Symbol::plus;
        any = true;
    }
    return any && expected == Symbol::minus;
}

struct GapReport {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    Kind kind = Kind::cyclotomic;
    std::uint64_t max_gap = 0;
    std::uint64_t max_gap_count = 0;
    std::uint64_t support_size = 0;
    bool palindromic = false;
    bool alternating = false;

    friend bool operator==(const GapReport&, const GapReport&) = default;
};

/// g(f) = max over consecutive support exponents of their difference, 0 for
/// fewer than two terms; max_gap_count is the number of places attaining it.
/// The pair fields stay zero for a bare word.
inline GapReport gap_report(const Word& w)
{
    GapReport report;
    report.palindromic = is_palindromic(w);
    report.alternating = is_alternating(w);

    std::optional<std::uint64_t> previous;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Symbol::zero)
            continue;
        ++report.support_size;
        if (previous) {
            const std::uint64_t gap = i - *previous;
            if (gap > report.max_gap) {
                report.max_gap = gap;
                report.max_gap_count = 1;
            } else if (gap == report.max_gap) {
                ++report.max_gap_count;
            }
        }
        previous = i;
    }
    return report;
}

inline GapReport gap_report(const CoeffWord& w)
{
    GapReport report = gap_report(w.word);
    report.p = w.pair.p();
    report.q = w.pair.q();
    report.kind = w.pair.kind();
    return report;
}

inline constexpr const char* kGapCsvHeader =
    "p,q,kind,max_gap,max_gap_count,support_size,palindromic,alternating";

inline std::string to_csv_row(const GapReport& r)
{
    std::ostringstream os;
    os << r.p << ',' << r.q << ',' << to_string(r.kind) << ',' << r.max_gap << ','
       << r.max_gap_count << ',' << r.support_size << ',' << (r.palindromic ? "true" : "false")
       << ',' << (r.alternating ? "true" : "false");
    return os.str();
}

/// Deviations of a report from the known structure of F_{p,q}: max gap p-1,
/// attained 2*floor(q/p) times, palindromic, alternating. Empty when all hold.
/// Findings are returned, not thrown; callers decide whether they are fatal.
inline std::vector<std::string> gap_claim_findings(const GapReport& r)
{
    std::vector<std::string> findings;
    const auto tag = "(" + std::to_string(r.p) + ", " + std::to_string(r.q) + "): ";
    if (r.max_gap != r.p - 1)
        findings.push_back(tag + "max_gap = " + std::to_string(r.max_gap) + ", expected " +
                           std::to_string(r.p - 1));
    const std::uint64_t expected_count = 2 * (r.q / r.p);
    if (r.max_gap_count != expected_count)
        findings.push_back(tag + "max_gap_count = " + std::to_string(r.max_gap_count) +
                           ", expected " + std::to_string(expected_count));
    if (!r.palindromic)
        findings.push_back(tag + "word is not palindromic");
    if (!r.alternating)
        findings.push_back(tag + "nonzero signs do not alternate");
    return findings;
}

/// First violated CoeffWord invariant, if any: length (p-1)(q-1)+1, +1 at both
/// ends, palindromic, symbol sum 1, alternating nonzero signs.
inline std::optional<std::string> coeff_word_violation(const CoeffWord& w)
{
    const auto& word = w.word;
    if (word.size() != w.pair.output_length())
        return "length " + std::to_string(word.size()) + " != (p-1)(q-1)+1 = " +
               std::to_string(w.pair.output_length());
    if (word[0] != Symbol::plus || word[word.size() - 1] != Symbol::plus)
        return std::string("endpoints are not +1");
    if (!is_palindromic(word))
        return std::string("not palindromic");
    if (word.symbol_sum() != 1)
        return "symbol sum " + std::to_string(word.symbol_sum()) + " != 1";
    if (!is_alternating(word))
        return std::string("nonzero signs do not alternate");
    return std::nullopt;
}

} // namespace bcw
