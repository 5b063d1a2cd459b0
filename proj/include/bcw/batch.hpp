#pragma once

// Batch computation of many pairs sharing p0. A TableCache hands out O_{p0,r}
// tables, computing each at most once; with a directory attached it also loads
// and stores them as "<p>_<r>.tbl", so the directory is O_{p0} on disk.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bcw/engine.hpp"
#include "bcw/io.hpp"
#include "bcw/parallel.hpp"
#include "bcw/primality.hpp"

namespace bcw {

using Nanoseconds = std::chrono::nanoseconds;

inline std::filesystem::path table_file_name(std::uint64_t p, std::uint64_t r)
{
    return std::to_string(p) + "_" + std::to_string(r) + ".tbl";
}

class TableCache {
  public:
    explicit TableCache(std::uint64_t p, std::optional<std::filesystem::path> dir = std::nullopt)
        : p_(p), dir_(std::move(dir))
    {
        if (dir_)
            std::filesystem::create_directories(*dir_);
    }

    std::uint64_t p() const noexcept { return p_; }

    /// O_{p,r}, from memory, from disk, or freshly precomputed (in that order).
    const PrecompTable& get(std::uint64_t r)
    {
        std::lock_guard lock(mutex_);
        if (auto it = tables_.find(r); it != tables_.end())
            return it->second;
        if (dir_) {
            const auto path = *dir_ / table_file_name(p_, r);
            if (std::ifstream in(path); in) {
                auto table = read_table(in);
                if (table.p() != p_ || table.r() != r)
                    throw FormatError("table file " + path.string() + " holds (p=" +
                                      std::to_string(table.p()) + ", r=" +
                                      std::to_string(table.r()) + ")");
                ++disk_loads_;
                return tables_.emplace(r, std::move(table)).first->second;
            }
        }
        const auto start = std::chrono::steady_clock::now();
        auto table = precompute(p_, r);
        precompute_time_ += std::chrono::steady_clock::now() - start;
        ++precompute_calls_;
        if (dir_) {
            std::ofstream out(*dir_ / table_file_name(p_, r));
            write_table(out, table);
        }
        return tables_.emplace(r, std::move(table)).first->second;
    }

    /// Fills in O_p: every residue coprime to p.
    void warm_all()
    {
        for (std::uint64_t r : coprime_residues(p_))
            get(r);
    }

    std::size_t precompute_calls() const noexcept { return precompute_calls_; }
    std::size_t disk_loads() const noexcept { return disk_loads_; }
    Nanoseconds precompute_time() const noexcept { return precompute_time_; }

  private:
    std::uint64_t p_;
    std::optional<std::filesystem::path> dir_;
    std::map<std::uint64_t, PrecompTable> tables_;
    std::size_t precompute_calls_ = 0;
    std::size_t disk_loads_ = 0;
    Nanoseconds precompute_time_{0};
    std::mutex mutex_;
};

enum class TableMode { fixed_r, list, all_primes };

struct TableRequest {
    std::uint64_t p0 = 0;
    Kind kind = Kind::cyclotomic;
    TableMode mode = TableMode::list;
    std::optional<std::uint64_t> r;  // fixed_r only
    std::vector<std::uint64_t> q_list;  // fixed_r and list
    std::uint64_t q_max = 0;  // all_primes
    std::optional<std::filesystem::path> out_dir;  // one dense file per pair
    unsigned jobs = 1;
};

struct TableEntry {
    std::uint64_t q = 0;
    std::optional<std::string> error;
    std::uint64_t output_length = 0;
    Nanoseconds assemble_time{0};
    std::optional<std::filesystem::path> file;
};

struct TableSummary {
    std::uint64_t p0 = 0;
    std::vector<TableEntry> entries;  // ascending q
    std::size_t precompute_calls = 0;
    std::size_t disk_loads = 0;
    Nanoseconds precompute_time{0};
    Nanoseconds compute_time{0};

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& e : entries)
            n += e.error.has_value();
        return n;
    }
};

inline std::filesystem::path word_file_name(Kind kind, std::uint64_t p, std::uint64_t q)
{
    return std::string(kind == Kind::cyclotomic ? "phi_" : "F_") + std::to_string(p) + "_" +
           std::to_string(q) + ".txt";
}

/// The q values a request covers, ascending and deduplicated.
inline std::vector<std::uint64_t> table_q_values(const TableRequest& req)
{
    if (req.mode == TableMode::all_primes)
        return primes_between(req.p0 + 1, req.q_max);
    std::set<std::uint64_t> unique(req.q_list.begin(), req.q_list.end());
    return {unique.begin(), unique.end()};
}

/// Computes every pair of the request against tables from `cache`. Per-pair
/// problems are recorded in the entry and the run continues; only a bad p0
/// (or a missing r in fixed_r mode) aborts with InvalidPair.
inline TableSummary run_table(const TableRequest& req, TableCache& cache)
{
    if (req.p0 != cache.p())
        throw InvalidPair("table cache is for p = " + std::to_string(cache.p()));
    if (!is_prime(req.p0))
        throw InvalidPair("p0 = " + std::to_string(req.p0) + " is not prime");
    if (req.mode == TableMode::fixed_r) {
        if (!req.r)
            throw InvalidPair("fixed_r mode needs r");
        check_residue(req.p0, *req.r);
        cache.get(*req.r);
    }

    TableSummary summary;
    summary.p0 = req.p0;
    const auto qs = table_q_values(req);

    // Resolve pairs and their tables up front, single-threaded; workers then
    // only read shared immutable tables.
    std::vector<std::optional<PairInput>> pairs(qs.size());
    std::vector<const PrecompTable*> tables(qs.size(), nullptr);
    summary.entries.resize(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) {
        auto& entry = summary.entries[i];
        entry.q = qs[i];
        try {
            auto pair = PairInput::make(req.p0, qs[i], req.kind);
            if (req.mode == TableMode::fixed_r && pair.remainder() != *req.r)
                throw InvalidPair("q = " + std::to_string(qs[i]) + " has q mod p0 = " +
                                  std::to_string(pair.remainder()) + ", not r = " +
                                  std::to_string(*req.r));
            tables[i] = &cache.get(pair.remainder());
            pairs[i] = pair;
        } catch (const Error& e) {
            entry.error = e.what();
        }
    }

    if (req.out_dir)
        std::filesystem::create_directories(*req.out_dir);
    const auto start = std::chrono::steady_clock::now();
    auto results = parallel_map(qs.size(), req.jobs, [&](std::size_t i) {
        TableEntry entry = summary.entries[i];
        if (!pairs[i])
            return entry;
        const auto t0 = std::chrono::steady_clock::now();
        const auto word = assemble(*pairs[i], *tables[i]);
        entry.assemble_time = std::chrono::steady_clock::now() - t0;
        entry.output_length = word.word.size();
        if (req.out_dir) {
            const auto path = *req.out_dir / word_file_name(req.kind, req.p0, entry.q);
            std::ofstream out(path);
            write_dense(out, word);
            if (!out)
                entry.error = "could not write " + path.string();
            entry.file = path;
        }
        return entry;
    });
    summary.compute_time = std::chrono::steady_clock::now() - start;
    summary.entries = std::move(results);
    summary.precompute_calls = cache.precompute_calls();
    summary.disk_loads = cache.disk_loads();
    summary.precompute_time = cache.precompute_time();
    return summary;
}

} // namespace bcw
