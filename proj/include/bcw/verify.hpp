#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bcw/analysis.hpp"
#include "bcw/engine.hpp"
#include "bcw/oracles.hpp"
#include "bcw/parallel.hpp"
#include "bcw/primality.hpp"

namespace bcw {

struct PairCase {
    std::uint64_t p;
    std::uint64_t q;
    Kind kind;

    friend bool operator==(const PairCase&, const PairCase&) = default;
};

/// Every coprime 2 <= p < q with pq <= max_pq, ordered by (p, q). Prime pairs
/// are tagged cyclotomic, the rest semigroup.
inline std::vector<PairCase> pairs_up_to(std::uint64_t max_pq)
{
    std::vector<PairCase> out;
    for (std::uint64_t p = 2; p * (p + 1) <= max_pq; ++p) {
        const bool p_prime = is_prime(p);
        for (std::uint64_t q = p + 1; p * q <= max_pq; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            out.push_back({p, q, p_prime && is_prime(q) ? Kind::cyclotomic : Kind::semigroup});
        }
    }
    return out;
}

struct VerifyResult {
    PairCase pair{};
    bool ok = true;
    std::string detail;  // what diverged, empty when ok
    std::optional<std::uint64_t> index;  // first divergent symbol
};

namespace detail {

inline std::optional<std::uint64_t> first_difference(const Word& a, const Word& b)
{
    const auto n = std::min(a.size(), b.size());
    for (std::uint64_t i = 0; i < n; ++i) {
        if (a[i] != b[i])
            return i;
    }
    if (a.size() != b.size())
        return n;
    return std::nullopt;
}

} // namespace detail

/// BCW against all three oracles, plus the CoeffWord invariants. Oracle
/// exceptions (alphabet violations, inexact division) count as failures.
inline VerifyResult verify_pair(const PairCase& pc)
{
    VerifyResult result;
    result.pair = pc;
    try {
        const auto bcw_word = compute(pc.p, pc.q, pc.kind);
        if (auto violation = coeff_word_violation(bcw_word)) {
            result.ok = false;
            result.detail = "invariant: " + *violation;
            return result;
        }
        struct Named {
            const char* name;
            CoeffWord (*fn)(std::uint64_t, std::uint64_t, Kind);
        };
        for (const Named oracle : {Named{"division", oracle_division},
                                   Named{"semigroup", oracle_semigroup},
                                   Named{"shift-add", oracle_shift_add}}) {
            const auto expected = oracle.fn(pc.p, pc.q, pc.kind);
            if (auto at = detail::first_difference(bcw_word.word, expected.word)) {
                result.ok = false;
                result.index = at;
                result.detail = std::string(oracle.name) + " oracle differs at index " +
                                std::to_string(*at);
                return result;
            }
        }
    } catch (const Error& e) {
        result.ok = false;
        result.detail = e.what();
    }
    return result;
}

struct VerifySummary {
    std::size_t checked = 0;
    std::optional<VerifyResult> first_failure;  // lowest (p, q) that failed

    bool ok() const noexcept { return !first_failure; }
};

inline VerifySummary verify_pairs(const std::vector<PairCase>& pairs, unsigned jobs = 1)
{
    const auto results =
        parallel_map(pairs.size(), jobs, [&](std::size_t i) { return verify_pair(pairs[i]); });
    VerifySummary summary;
    summary.checked = results.size();
    for (const auto& r : results) {
        if (!r.ok) {
            summary.first_failure = r;
            break;
        }
    }
    return summary;
}

} // namespace bcw
