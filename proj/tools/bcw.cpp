// bcw: coefficient words of binary cyclotomic and two-generator semigroup
// polynomials.
//
//   bcw compute P Q [--kind K] [--format dense|sparse|compact] [--out FILE]
//   bcw table P0 [--mode fixed_r|list|all_primes] [--r R] [--q Q,...] [--q-max N]
//                [--out DIR] [--tables DIR] [--jobs N]
//   bcw verify (--max-pq N | --pair P Q) [--kind K] [--jobs N]
//   bcw bench [--p P...] [--q Q...] [--q-range MIN MAX POINTS] [--oracle] [--out FILE]
//   bcw gaps (--p P --q-max N | --pair P Q | --max-pq N) [--kind K] [--assert] [--out FILE]
//
// Exit status: 0 success, 1 invalid input, 2 verification or assertion failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bcw/bcw.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitFailed = 2;

/// stdout, or the file named by --out.
class Output {
  public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw bcw::Error("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    bool is_file() const { return file_ != nullptr; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

struct Common {
    std::string kind = "cyclotomic";
    std::string out;
    unsigned jobs = 1;
};

bcw::Kind kind_of(const Common& c) { return bcw::parse_kind(c.kind); }

void add_kind(CLI::App* cmd, Common& c)
{
    cmd->add_option("--kind", c.kind, "cyclotomic (p, q prime) or semigroup (p, q coprime)")
        ->check(CLI::IsMember({"cyclotomic", "semigroup"}))
        ->capture_default_str();
}

// ---- compute ---------------------------------------------------------------

struct ComputeArgs {
    Common common;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::string format = "dense";
    std::uint64_t max_len = std::uint64_t{1} << 28;
};

int run_compute(const ComputeArgs& a)
{
    const auto pair = bcw::PairInput::make(a.p, a.q, kind_of(a.common), a.max_len);
    const auto table = bcw::precompute(pair.p(), pair.remainder());
    Output out(a.common.out);
    if (a.format == "compact") {
        bcw::write_compact(out.stream(), pair, table);
    } else {
        const auto word = bcw::assemble(pair, table);
        if (a.format == "sparse")
            bcw::write_sparse(out.stream(), word);
        else
            bcw::write_dense(out.stream(), word);
    }
    return kExitOk;
}

// ---- table -----------------------------------------------------------------

struct TableArgs {
    Common common;
    std::uint64_t p0 = 0;
    std::string mode;
    std::optional<std::uint64_t> r;
    std::vector<std::uint64_t> q_list;
    std::uint64_t q_max = 0;
    std::string tables_dir;
};

int run_table(const TableArgs& a)
{
    bcw::TableRequest req;
    req.p0 = a.p0;
    req.kind = kind_of(a.common);
    req.r = a.r;
    req.q_list = a.q_list;
    req.q_max = a.q_max;
    req.jobs = a.common.jobs;
    if (!a.common.out.empty())
        req.out_dir = a.common.out;

    if (a.mode.empty())
        req.mode = a.r ? bcw::TableMode::fixed_r
                       : (a.q_max ? bcw::TableMode::all_primes : bcw::TableMode::list);
    else
        req.mode = a.mode == "fixed_r" ? bcw::TableMode::fixed_r
                   : a.mode == "list"  ? bcw::TableMode::list
                                       : bcw::TableMode::all_primes;
    if (req.mode == bcw::TableMode::all_primes && a.q_max == 0)
        throw bcw::InvalidPair("all_primes mode needs --q-max");
    if (req.mode != bcw::TableMode::all_primes && a.q_list.empty())
        throw bcw::InvalidPair("this mode needs --q");

    std::optional<std::filesystem::path> tables_dir;
    if (!a.tables_dir.empty())
        tables_dir = a.tables_dir;
    else if (req.out_dir)
        tables_dir = *req.out_dir / "tables";
    bcw::TableCache cache(a.p0, tables_dir);
    const auto summary = bcw::run_table(req, cache);

    for (const auto& e : summary.entries) {
        std::cout << "(" << summary.p0 << ", " << e.q << ") ";
        if (e.error)
            std::cout << "error: " << *e.error << '\n';
        else
            std::cout << "len " << e.output_length << ", assemble " << e.assemble_time.count()
                      << " ns" << (e.file ? ", " + e.file->string() : std::string()) << '\n';
    }
    const auto pre = summary.precompute_time.count();
    const auto comp = summary.compute_time.count();
    std::cout << "pairs: " << summary.entries.size() << " (" << summary.failures()
              << " failed)\n"
              << "precompute calls: " << summary.precompute_calls
              << ", tables loaded from disk: " << summary.disk_loads << '\n'
              << "precompute " << pre << " ns, compute " << comp << " ns";
    if (pre + comp > 0)
        std::cout << " (precompute share " << 100.0 * static_cast<double>(pre) /
                                                  static_cast<double>(pre + comp)
                  << "%)";
    std::cout << '\n';
    return summary.failures() ? kExitInvalid : kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    Common common;
    std::uint64_t max_pq = 0;
    std::vector<std::uint64_t> pair;
};

int run_verify(const VerifyArgs& a)
{
    std::vector<bcw::PairCase> pairs;
    if (!a.pair.empty()) {
        const auto kind = kind_of(a.common);
        bcw::PairInput::make(a.pair[0], a.pair[1], kind);
        pairs.push_back({a.pair[0], a.pair[1], kind});
    } else {
        pairs = bcw::pairs_up_to(a.max_pq);
    }
    const auto summary = bcw::verify_pairs(pairs, a.common.jobs);
    if (summary.ok()) {
        std::cout << "OK: " << summary.checked << " pairs verified\n";
        return kExitOk;
    }
    const auto& f = *summary.first_failure;
    std::cout << "FAIL: (" << f.pair.p << ", " << f.pair.q << ") " << bcw::to_string(f.pair.kind)
              << ": " << f.detail << '\n';
    return kExitFailed;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
    Common common;
    std::vector<std::uint64_t> ps;
    std::vector<std::uint64_t> qs;
    std::vector<std::uint64_t> q_range;
    bool oracle = false;
    std::uint64_t oracle_max_len = std::uint64_t{1} << 20;
    unsigned repeats = 3;
};

int run_bench(const BenchArgs& a)
{
    bcw::BenchOptions options;
    options.kind = kind_of(a.common);
    options.repeats = a.repeats;
    options.with_oracle = a.oracle;
    options.oracle_max_length = a.oracle_max_len;

    std::vector<bcw::BenchRecord> records;
    for (auto p : a.ps) {
        auto qs = a.qs;
        if (a.q_range.size() == 3) {
            const auto extra = bcw::geometric_primes(p, a.q_range[0], a.q_range[1],
                                                     static_cast<unsigned>(a.q_range[2]));
            qs.insert(qs.end(), extra.begin(), extra.end());
        }
        for (auto q : qs)
            records.push_back(bcw::bench_pair(p, q, options));
    }

    Output out(a.common.out);
    out.stream() << bcw::kBenchCsvHeader << '\n';
    for (const auto& r : records)
        out.stream() << bcw::to_csv_row(r) << '\n';
    bcw::write_summary(out.is_file() ? std::cout : std::cerr, bcw::summarize(records));
    return kExitOk;
}

// ---- gaps ------------------------------------------------------------------

struct GapsArgs {
    Common common;
    std::uint64_t p = 0;
    std::uint64_t q_max = 0;
    std::vector<std::uint64_t> pair;
    std::uint64_t max_pq = 0;
    bool assert_claims = false;
};

int run_gaps(const GapsArgs& a)
{
    std::vector<bcw::PairCase> pairs;
    const auto kind = kind_of(a.common);
    if (!a.pair.empty()) {
        bcw::PairInput::make(a.pair[0], a.pair[1], kind);
        pairs.push_back({a.pair[0], a.pair[1], kind});
    } else if (a.max_pq) {
        pairs = bcw::pairs_up_to(a.max_pq);
    } else {
        if (a.p < 2)
            throw bcw::InvalidPair("gaps needs --pair, --max-pq or --p with --q-max");
        if (kind == bcw::Kind::cyclotomic && !bcw::is_prime(a.p))
            throw bcw::InvalidPair("p = " + std::to_string(a.p) + " is not prime");
        for (std::uint64_t q = a.p + 1; q <= a.q_max; ++q) {
            if (std::gcd(a.p, q) != 1 || (kind == bcw::Kind::cyclotomic && !bcw::is_prime(q)))
                continue;
            pairs.push_back({a.p, q, kind});
        }
    }

    Output out(a.common.out);
    out.stream() << bcw::kGapCsvHeader << '\n';
    for (const auto& pc : pairs) {
        const auto report = bcw::gap_report(bcw::compute(pc.p, pc.q, pc.kind));
        out.stream() << bcw::to_csv_row(report) << '\n';
        const auto findings = bcw::gap_claim_findings(report);
        if (findings.empty())
            continue;
        if (a.assert_claims) {
            out.stream().flush();
            std::cerr << "assertion failed: " << findings.front() << '\n';
            return kExitFailed;
        }
        for (const auto& f : findings)
            std::cerr << "warning: " << f << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coefficient words of binary cyclotomic and semigroup polynomials"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "coefficient word of one pair");
    c->add_option("p", compute.p)->required();
    c->add_option("q", compute.q)->required();
    add_kind(c, compute.common);
    c->add_option("--format", compute.format)
        ->check(CLI::IsMember({"dense", "sparse", "compact"}))
        ->capture_default_str();
    c->add_option("--out", compute.common.out, "write to FILE instead of stdout");
    c->add_option("--max-len", compute.max_len, "refuse outputs longer than this")
        ->capture_default_str();

    TableArgs table;
    auto* t = app.add_subcommand("table", "many pairs sharing p0, reusing precomputed tables");
    t->add_option("p0", table.p0)->required();
    t->add_option("--mode", table.mode)->check(CLI::IsMember({"fixed_r", "list", "all_primes"}));
    t->add_option("--r", table.r, "residue for fixed_r mode");
    t->add_option("--q", table.q_list, "q values")->delimiter(',');
    t->add_option("--q-max", table.q_max, "all primes p0 < q <= N");
    t->add_option("--out", table.common.out, "directory for one dense file per pair");
    t->add_option("--tables", table.tables_dir, "table directory (default OUT/tables)");
    t->add_option("--jobs", table.common.jobs)->capture_default_str();
    add_kind(t, table.common);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "check BCW against the three oracles");
    auto* vtarget = v->add_option_group("target");
    vtarget->add_option("--max-pq", verify.max_pq, "all coprime pairs with pq <= N");
    vtarget->add_option("--pair", verify.pair)->expected(2);
    vtarget->require_option(1);
    add_kind(v, verify.common);
    v->add_option("--jobs", verify.common.jobs)->capture_default_str();

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "time both phases over a grid of pairs");
    b->add_option("--p", bench.ps)->delimiter(',');
    b->add_option("--q", bench.qs)->delimiter(',');
    b->add_option("--q-range", bench.q_range, "MIN MAX POINTS, geometrically spaced primes")
        ->expected(3);
    b->add_flag("--oracle", bench.oracle, "also time the division oracle");
    b->add_option("--oracle-max-len", bench.oracle_max_len)->capture_default_str();
    b->add_option("--repeats", bench.repeats)->capture_default_str();
    b->add_option("--out", bench.common.out, "write CSV to FILE");
    add_kind(b, bench.common);

    GapsArgs gaps;
    auto* g = app.add_subcommand("gaps", "maximum-gap report, one CSV row per pair");
    g->add_option("--p", gaps.p);
    g->add_option("--q-max", gaps.q_max);
    g->add_option("--pair", gaps.pair)->expected(2);
    g->add_option("--max-pq", gaps.max_pq);
    g->add_flag("--assert", gaps.assert_claims, "fail on the first deviation");
    g->add_option("--out", gaps.common.out, "write CSV to FILE");
    add_kind(g, gaps.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (c->parsed())
            return run_compute(compute);
        if (t->parsed())
            return run_table(table);
        if (v->parsed())
            return run_verify(verify);
        if (b->parsed())
            return run_bench(bench);
        if (g->parsed())
            return run_gaps(gaps);
    } catch (const bcw::InvalidPair& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const bcw::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const bcw::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
