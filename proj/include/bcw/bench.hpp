#pragma once

// Timing harness for the two BCW phases. Each point is run `repeats` times on
// a monotonic clock and the median of each phase is kept.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bcw/engine.hpp"
#include "bcw/oracles.hpp"
#include "bcw/primality.hpp"

namespace bcw {

struct BenchRecord {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t output_length = 0;
    std::chrono::nanoseconds precompute_time{0};
    std::chrono::nanoseconds assemble_time{0};
    std::optional<std::chrono::nanoseconds> oracle_time;

    double ns_per_symbol() const
    {
        return static_cast<double>(assemble_time.count()) / static_cast<double>(output_length);
    }
};

struct BenchOptions {
    Kind kind = Kind::cyclotomic;
    unsigned repeats = 3;
    bool with_oracle = false;
    /// Pairs with a longer output skip the oracle.
    std::uint64_t oracle_max_length = std::uint64_t{1} << 20;
};

namespace detail {

inline std::chrono::nanoseconds median(std::vector<std::chrono::nanoseconds> xs)
{
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

// Keeps the optimizer from discarding a computed word.
inline void consume(const Word& w)
{
    static volatile std::size_t sink;
    const std::size_t v = w.size() + (w.empty() ? 0 : static_cast<std::size_t>(to_int(w[w.size() / 2]) + 1));
    sink = sink + v;
}

} // namespace detail

inline BenchRecord bench_pair(std::uint64_t p, std::uint64_t q, const BenchOptions& options = {})
{
    using clock = std::chrono::steady_clock;
    const auto pair = PairInput::make(p, q, options.kind);
    const unsigned repeats = std::max(1u, options.repeats);

    std::vector<std::chrono::nanoseconds> pre, asm_, orc;
    for (unsigned k = 0; k < repeats; ++k) {
        const auto t0 = clock::now();
        const auto table = precompute(pair.p(), pair.remainder());
        const auto t1 = clock::now();
        const auto word = assemble(pair, table);
        const auto t2 = clock::now();
        detail::consume(word.word);
        pre.push_back(t1 - t0);
        asm_.push_back(t2 - t1);
    }
    BenchRecord record{p, q, pair.output_length(), detail::median(pre), detail::median(asm_), {}};

    if (options.with_oracle && pair.output_length() <= options.oracle_max_length) {
        for (unsigned k = 0; k < repeats; ++k) {
            const auto t0 = clock::now();
            const auto word = oracle_division(p, q, options.kind);
            orc.push_back(clock::now() - t0);
            detail::consume(word.word);
        }
        record.oracle_time = detail::median(orc);
    }
    return record;
}

/// Primes spaced roughly geometrically over [q_min, q_max], each above p.
inline std::vector<std::uint64_t> geometric_primes(std::uint64_t p, std::uint64_t q_min,
                                                   std::uint64_t q_max, unsigned points)
{
    std::vector<std::uint64_t> out;
    if (points == 0 || q_max < q_min)
        return out;
    const double lo = std::log(static_cast<double>(std::max(q_min, p + 1)));
    const double hi = std::log(static_cast<double>(q_max));
    for (unsigned i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        const auto target = static_cast<std::uint64_t>(std::llround(std::exp(lo + t * (hi - lo))));
        const auto q = next_prime(std::max(target, p + 1));
        if (out.empty() || q > out.back())
            out.push_back(q);
    }
    return out;
}

inline constexpr const char* kBenchCsvHeader =
    "p,q,output_len,precompute_ns,assemble_ns,oracle_ns";

inline std::string to_csv_row(const BenchRecord& r)
{
    std::ostringstream os;
    os << r.p << ',' << r.q << ',' << r.output_length << ',' << r.precompute_time.count() << ','
       << r.assemble_time.count() << ',';
    if (r.oracle_time)
        os << r.oracle_time->count();
    return os.str();
}

struct ScalingSummary {
    std::size_t points = 0;
    double size_span = 0;  // largest / smallest output length
    double min_ns_per_symbol = 0;
    double max_ns_per_symbol = 0;
    double ratio = 0;  // max / min time per symbol
    double endpoint_ratio = 0;  // smallest vs largest instance, >= 1
    bool monotonic = false;  // total time non-decreasing in pq
    double slope_ns_per_symbol = 0;  // least-squares fit assemble_ns ~ a + b * len
    double intercept_ns = 0;
    double r_squared = 0;
};

/// Empty when there are no records.
inline std::optional<ScalingSummary> summarize(std::vector<BenchRecord> records)
{
    if (records.empty())
        return std::nullopt;
    std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        return a.p * a.q < b.p * b.q;
    });
    ScalingSummary s;
    s.points = records.size();
    s.size_span = static_cast<double>(records.back().output_length) /
                  static_cast<double>(records.front().output_length);
    s.min_ns_per_symbol = s.max_ns_per_symbol = records.front().ns_per_symbol();
    s.monotonic = true;
    for (std::size_t i = 0; i < records.size(); ++i) {
        s.min_ns_per_symbol = std::min(s.min_ns_per_symbol, records[i].ns_per_symbol());
        s.max_ns_per_symbol = std::max(s.max_ns_per_symbol, records[i].ns_per_symbol());
        if (i > 0) {
            const auto prev = records[i - 1].precompute_time + records[i - 1].assemble_time;
            const auto cur = records[i].precompute_time + records[i].assemble_time;
            if (cur < prev)
                s.monotonic = false;
        }
    }
    s.ratio = s.min_ns_per_symbol > 0 ? s.max_ns_per_symbol / s.min_ns_per_symbol : INFINITY;
    const double lo = std::min(records.front().ns_per_symbol(), records.back().ns_per_symbol());
    const double hi = std::max(records.front().ns_per_symbol(), records.back().ns_per_symbol());
    s.endpoint_ratio = lo > 0 ? hi / lo : INFINITY;

    const double n = static_cast<double>(records.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& r : records) {
        const double x = static_cast<double>(r.output_length);
        const double y = static_cast<double>(r.assemble_time.count());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double denom = n * sxx - sx * sx;
    if (denom > 0) {
        s.slope_ns_per_symbol = (n * sxy - sx * sy) / denom;
        s.intercept_ns = (sy - s.slope_ns_per_symbol * sx) / n;
        const double ss_tot = syy - sy * sy / n;
        const double ss_res = syy - s.intercept_ns * sy - s.slope_ns_per_symbol * sxy;
        s.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    }
    return s;
}

inline void write_summary(std::ostream& os, const std::optional<ScalingSummary>& s)
{
    if (!s) {
        os << "no data\n";
        return;
    }
    os << "points: " << s->points << '\n'
       << "output size span: " << s->size_span << "x\n"
       << "assemble ns/symbol: min " << s->min_ns_per_symbol << ", max " << s->max_ns_per_symbol
       << ", ratio " << s->ratio << '\n'
       << "smallest vs largest ns/symbol ratio: " << s->endpoint_ratio << '\n'
       << "total time monotonic in pq: " << (s->monotonic ? "yes" : "no") << '\n'
       << "linear fit: assemble_ns = " << s->intercept_ns << " + " << s->slope_ns_per_symbol
       << " * len (R^2 = " << s->r_squared << ")\n";
}

} // namespace bcw
