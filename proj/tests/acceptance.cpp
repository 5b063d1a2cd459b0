// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bcw/bcw.hpp"
#include "reference.hpp"

namespace {

using clock_type = std::chrono::steady_clock;
using bcw::Kind;

// Pinned thresholds.
constexpr std::uint64_t kMaxPq = 30000;                  // criteria 1, 4, 5
constexpr double kOracleBudgetSeconds = 120.0;           // criterion 1
constexpr int kStructurePairs = 500;                     // criterion 2
constexpr std::uint64_t kMaxPrecomputeP = 503;           // criteria 3, 8
constexpr std::uint64_t kBenchP = 101;                   // criterion 6
constexpr std::uint64_t kBenchQMin = 1000;
constexpr std::uint64_t kBenchQMax = 100000;
constexpr unsigned kBenchPoints = 7;
constexpr unsigned kBenchRepeats = 15;
constexpr double kMinSizeSpan = 64.0;
constexpr double kMaxPerSymbolRatio = 4.0;
constexpr std::uint64_t kReuseP0 = 101;                  // criterion 7
constexpr std::uint64_t kReuseResidue = 7;
constexpr std::size_t kReusePrimes = 50;
constexpr double kMaxPrecomputeShare = 0.01;
constexpr int kRoundTripTables = 400;                    // criterion 8
constexpr int kRoundTripWords = 200;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const Outcome& o, double seconds)
{
    std::printf("[%s] %s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += !o.pass;
}

template <class Fn>
void run(const char* id, const char* title, Fn&& fn)
{
    const auto t0 = clock_type::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    report(id, title, o,
           std::chrono::duration<double>(clock_type::now() - t0).count());
}

// Criteria 1, 4 and 5 share one sweep over the exhaustive range.
struct SweepResult {
    std::size_t pairs = 0;
    std::size_t prime_pairs = 0;
    std::size_t divergences = 0;
    std::string first_divergence;
    std::size_t invariant_violations = 0;
    std::string first_violation;
    std::size_t gap_violations = 0;
    std::string first_gap_violation;
    double seconds = 0;
};

SweepResult sweep()
{
    SweepResult s;
    const auto t0 = clock_type::now();
    for (const auto& pc : bcw::pairs_up_to(kMaxPq)) {
        ++s.pairs;
        s.prime_pairs += pc.kind == Kind::cyclotomic;
        const auto w = bcw::compute(pc.p, pc.q, pc.kind);
        const auto tag = "(" + std::to_string(pc.p) + ", " + std::to_string(pc.q) + ")";

        const bool agree = w.word == bcw::oracle_division(pc.p, pc.q, pc.kind).word &&
                           w.word == bcw::oracle_semigroup(pc.p, pc.q, pc.kind).word &&
                           w.word == bcw::oracle_shift_add(pc.p, pc.q, pc.kind).word;
        if (!agree && s.divergences++ == 0)
            s.first_divergence = tag;

        if (auto v = bcw::coeff_word_violation(w); v && s.invariant_violations++ == 0)
            s.first_violation = tag + " " + *v;

        const auto findings = bcw::gap_claim_findings(bcw::gap_report(w));
        if (!findings.empty() && s.gap_violations++ == 0)
            s.first_gap_violation = findings.front();
    }
    s.seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    return s;
}

Outcome criterion_structure()
{
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<std::uint64_t> p_dist(2, 150);
    int checked = 0;
    while (checked < kStructurePairs) {
        const auto p = p_dist(rng);
        const auto q = std::uniform_int_distribution<std::uint64_t>(p + 1, 40 * p + 50)(rng);
        if (std::gcd(p, q) != 1)
            continue;
        const auto kind =
            bcw::is_prime(p) && bcw::is_prime(q) ? Kind::cyclotomic : Kind::semigroup;
        const auto pair = bcw::PairInput::make(p, q, kind);
        const auto table = bcw::precompute(p, pair.remainder());
        const auto word = bcw::assemble(pair, table).word;
        const auto via_bpq = bcw::reference::bpq_truncated(pair, table);
        const auto via_powers = bcw::reference::fractional_power_form(pair, table);
        const auto tag = "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
        if (via_bpq != via_powers)
            return {false, "assembly forms differ at " + tag};
        if (word != via_powers)
            return {false, "assemble() differs from the fractional-power form at " + tag};
        if (word.size() != (p - 1) * (q - 1) + 1)
            return {false, "length mismatch at " + tag};
        ++checked;
    }
    return {true, std::to_string(checked) + " random pairs, both forms identical, lengths (p-1)(q-1)+1"};
}

Outcome criterion_internal_addition()
{
    std::size_t tables = 0;
    for (std::uint64_t p = 2; p <= kMaxPrecomputeP; ++p) {
        for (std::uint64_t r : bcw::coprime_residues(p)) {
            bcw::PrecompTable table = [&] {
                try {
                    return bcw::precompute(p, r);
                } catch (const bcw::AdditionOverflow& e) {
                    throw std::runtime_error("AdditionOverflow at (p=" + std::to_string(p) +
                                             ", r=" + std::to_string(r) + "): " + e.what());
                }
            }();
            for (std::size_t i = 0; i < table.omegas().size(); ++i) {
                if (table.omegas()[i].symbol_sum() != 0)
                    return {false, "omega_" + std::to_string(i) + " of (p=" + std::to_string(p) +
                                       ", r=" + std::to_string(r) + ") has nonzero sum"};
            }
            ++tables;
        }
    }
    return {true, std::to_string(tables) + " tables (all valid (p, r), p <= 503), no overflow, all sums 0"};
}

Outcome criterion_scaling()
{
    bcw::BenchOptions options;
    options.repeats = kBenchRepeats;
    std::vector<bcw::BenchRecord> records;
    for (auto q : bcw::geometric_primes(kBenchP, kBenchQMin, kBenchQMax, kBenchPoints))
        records.push_back(bcw::bench_pair(kBenchP, q, options));
    const auto s = bcw::summarize(records);
    if (!s)
        return {false, "no bench data"};
    std::ostringstream detail;
    detail << s->points << " points p=" << kBenchP << ", size span " << s->size_span
           << "x, ns/symbol smallest vs largest ratio " << s->endpoint_ratio << " (limit "
           << kMaxPerSymbolRatio << "), grid min/max ratio " << s->ratio << ", monotonic "
           << (s->monotonic ? "yes" : "no");
    const bool pass =
        s->size_span >= kMinSizeSpan && s->endpoint_ratio <= kMaxPerSymbolRatio && s->monotonic;
    return {pass, detail.str()};
}

Outcome criterion_reuse()
{
    bcw::TableRequest req;
    req.p0 = kReuseP0;
    req.mode = bcw::TableMode::fixed_r;
    req.r = kReuseResidue;
    for (std::uint64_t q = kReuseP0 * kReuseP0; req.q_list.size() < kReusePrimes; ++q) {
        if (q % kReuseP0 == kReuseResidue && bcw::is_prime(q))
            req.q_list.push_back(q);
    }
    bcw::TableCache cache(kReuseP0);
    const auto summary = bcw::run_table(req, cache);
    const double pre = static_cast<double>(summary.precompute_time.count());
    const double total = pre + static_cast<double>(summary.compute_time.count());
    const double share = total > 0 ? pre / total : 1.0;
    std::ostringstream detail;
    detail << summary.entries.size() << " primes q = " << kReuseResidue << " mod " << kReuseP0
           << " from " << req.q_list.front() << " to " << req.q_list.back()
           << ", precompute calls " << summary.precompute_calls << ", failures "
           << summary.failures() << ", precompute share " << 100.0 * share << "% (limit "
           << 100.0 * kMaxPrecomputeShare << "%)";
    const bool pass = summary.entries.size() == kReusePrimes && summary.failures() == 0 &&
                      summary.precompute_calls == 1 && share < kMaxPrecomputeShare;
    return {pass, detail.str()};
}

Outcome criterion_round_trip()
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::uint64_t> p_dist(2, kMaxPrecomputeP);
    int tables = 0;
    // Every prime p <= 503 with a random residue, then random (p, r) pairs.
    for (std::uint64_t p = 2; p <= kMaxPrecomputeP; ++p) {
        if (!bcw::is_prime(p))
            continue;
        const auto residues = bcw::coprime_residues(p);
        const auto r = residues[rng() % residues.size()];
        const auto t = bcw::precompute(p, r);
        if (bcw::parse_table(bcw::serialize_table(t)) != t)
            return {false, "table round trip failed for (p=" + std::to_string(p) + ", r=" +
                               std::to_string(r) + ")"};
        ++tables;
    }
    while (tables < kRoundTripTables) {
        const auto p = p_dist(rng);
        const auto residues = bcw::coprime_residues(p);
        const auto r = residues[rng() % residues.size()];
        const auto t = bcw::precompute(p, r);
        const auto text = bcw::serialize_table(t);
        if (bcw::parse_table(text) != t || bcw::serialize_table(bcw::parse_table(text)) != text)
            return {false, "table round trip failed for (p=" + std::to_string(p) + ", r=" +
                               std::to_string(r) + ")"};
        ++tables;
    }

    int words = 0;
    while (words < kRoundTripWords) {
        const auto p = p_dist(rng);
        const auto q = std::uniform_int_distribution<std::uint64_t>(p + 1, p + 1500)(rng);
        if (std::gcd(p, q) != 1)
            continue;
        const auto kind =
            bcw::is_prime(p) && bcw::is_prime(q) ? Kind::cyclotomic : Kind::semigroup;
        const auto w = bcw::compute(p, q, kind);
        const auto text = bcw::format_dense(w);
        const auto back = bcw::parse_dense(text, kind);
        if (back != w || bcw::format_dense(back) != text)
            return {false, "dense round trip failed for (" + std::to_string(p) + ", " +
                               std::to_string(q) + ")"};
        ++words;
    }
    return {true, std::to_string(tables) + " tables and " + std::to_string(words) +
                      " dense words (p <= 503) round-trip bit-exactly"};
}

} // namespace

int main()
{
    std::printf("acceptance suite\n");
    std::fflush(stdout);

    const auto t0 = clock_type::now();
    SweepResult s;
    std::string sweep_error;
    try {
        s = sweep();
    } catch (const std::exception& e) {
        sweep_error = e.what();
    }
    const double sweep_seconds = std::chrono::duration<double>(clock_type::now() - t0).count();

    auto sweep_outcome = [&](std::size_t bad, const std::string& first, const std::string& ok) {
        if (!sweep_error.empty())
            return Outcome{false, "exception: " + sweep_error};
        if (bad)
            return Outcome{false, std::to_string(bad) + " violations, first " + first};
        return Outcome{true, ok};
    };

    {
        auto o = sweep_outcome(s.divergences, s.first_divergence,
                               std::to_string(s.pairs) + " pairs with pq <= 30000 (" +
                                   std::to_string(s.prime_pairs) + " prime, " +
                                   std::to_string(s.pairs - s.prime_pairs) +
                                   " semigroup), 0 divergences from 3 oracles");
        if (o.pass && s.seconds > kOracleBudgetSeconds) {
            o.pass = false;
            o.detail += ", but exceeded the 120 s budget";
        }
        report("C1", "oracle equivalence", o, sweep_seconds);
    }
    run("C2", "assembly forms and length", criterion_structure);
    run("C3", "internal addition", criterion_internal_addition);
    report("C4", "alphabet, alternation, palindromy, sum",
           sweep_outcome(s.invariant_violations, s.first_violation,
                         std::to_string(s.pairs) + " words, 0 violations"),
           0.0);
    report("C5", "maximum gap p-1 attained 2*floor(q/p) times",
           sweep_outcome(s.gap_violations, s.first_gap_violation,
                         std::to_string(s.pairs) + " words, 0 violations"),
           0.0);
    run("C6", "linear scaling", criterion_scaling);
    run("C7", "precomputation reuse", criterion_reuse);
    run("C8", "serialization round trip", criterion_round_trip);

    std::printf("%s: %d of 8 criteria failed\n", failures ? "FAILED" : "PASSED", failures);
    return failures ? 1 : 0;
}
