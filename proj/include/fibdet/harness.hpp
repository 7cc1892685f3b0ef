#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibdet/sequences.hpp"

namespace fibdet {

/// Deterministic generator for sampled cases; identical seeds give identical
/// case lists on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw from [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

struct IntRange {
    long lo = 0;
    long hi = 0;
    bool operator==(const IntRange&) const = default;
};

struct SamplePolicy {
    std::size_t count = 500;
    long lo = -2;
    long hi = 3;
    std::uint64_t seed = 20250811;
};

/// Parameter ranges for a verification campaign. Every target reads only the
/// fields it needs; c2 = 0 is always skipped.
struct GridSpec {
    IntRange a0, a1, c1, c2;
    std::optional<IntRange> b0, b1;  // second sequence for the catalan target
    IntRange r, s, k, n;
    IntRange i, j;  // catalan index offsets
    IntRange p;
    std::vector<std::size_t> dims{3, 4, 5};  // desnanot matrix sizes
    std::size_t cases_per_dim = 200;
    IntRange entry;  // desnanot matrix entries
    SamplePolicy sample;  // thm7 spec sampling

    static GridSpec defaults(const std::string& target);
    static GridSpec from_json(const nlohmann::json& doc, const std::string& target);
    nlohmann::json to_json() const;
};

/// One verified case: the full input tuple, both sides, and wall times.
struct CaseRecord {
    std::string formula;
    nlohmann::json inputs;
    std::string closed_value;
    std::string oracle_value;
    bool equal = false;
    std::uint64_t closed_ns = 0;
    std::uint64_t oracle_ns = 0;
};

struct VerificationReport {
    std::vector<std::string> targets;
    GridSpec grid;
    std::vector<CaseRecord> records;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;

    nlohmann::json to_json() const;
};

/// Canonical target ids, in report order.
const std::vector<std::string>& verification_targets();

/// Runs every requested target over the grid. Case enumeration is
/// deterministic: targets in canonical order, cases in nested loop order.
/// Unknown target ids raise std::invalid_argument.
VerificationReport run_verification(const GridSpec& grid, const std::vector<std::string>& targets);

/// One benchmarked matrix size: closed-form evaluation vs the two
/// elimination engines on the same power matrix.
struct BenchRecord {
    long r = 0;
    std::size_t max_entry_bits = 0;
    std::uint64_t closed_ns = 0;
    std::uint64_t bareiss_ns = 0;
    std::uint64_t dodgson_ns = 0;
    bool values_equal = false;
};

/// Times all three evaluation paths for r = 1..r_max (median of 5 runs each)
/// and checks the values agree before reporting. r_max < 1 gives an empty
/// list.
std::vector<BenchRecord> run_bench(long r_max, const RecurrenceParams& params, long s, long k,
                                   long n);

nlohmann::json bench_to_json(const std::vector<BenchRecord>& records,
                             const RecurrenceParams& params, long s, long k, long n);

}  // namespace fibdet
