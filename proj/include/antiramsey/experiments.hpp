#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"

namespace antiramsey {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial `index` under `master_seed`:
/// splitmix64(master_seed + (index + 1) * 0x9E3779B97F4A7C15).
/// Depends only on the pair, so trials can run in any order or in parallel.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index);

/// G(n, p) driven by std::mt19937_64 seeded with `seed`. Pairs (a, b), a < b,
/// are visited in lexicographic order and each consumes one 64-bit draw x; the
/// edge is kept iff x < floor(p * 2^64) (always kept when p = 1). The output is
/// therefore bit-reproducible across platforms, and for a fixed seed the graph
/// only gains edges as p grows.
Graph sample_gnp(int n, const Rational& p, std::uint64_t seed);

struct TrialConfig {
    int n = 0;
    Rational p;
    int trials = 1;
    std::uint64_t master_seed = 0;
    Graph pattern;
    /// 0 picks RS_THREADS or the hardware concurrency.
    int threads = 0;
};

struct TrialRecord {
    int trial_index = 0;
    std::uint64_t seed = 0;
    int n = 0;
    Rational p;
    int edge_count = 0;
    bool skipped = false;
    bool contains_pattern = false;
    bool coloring_proper = false;
    bool decomposition_ok = false;
    std::optional<bool> rainbow_found;
    std::optional<Rational> m_value;
};

struct TrialRate {
    Rational p;
    int trials = 0;
    int hits = 0;

    double rate() const { return trials == 0 ? 0.0 : static_cast<double>(hits) / trials; }
};

/// A proper colouring of a triangle is always rainbow, so G is anti-Ramsey
/// for K3 exactly when it contains one. Counts trials whose G(n, p) does.
TrialRate triangle_anti_ramsey_trial(const TrialConfig& cfg);
std::vector<TrialRate> triangle_sweep(TrialConfig cfg, const std::vector<Rational>& probabilities);

/// Largest pattern (in edges) for which coloring_sweep runs the rainbow search.
inline constexpr int kMaxSweepPatternEdges = 8;

/// Samples, colours, verifies. Edgeless samples are recorded as skipped and
/// nothing in a trial can abort the sweep. Records are ordered by index.
std::vector<TrialRecord> coloring_sweep(const TrialConfig& cfg);

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);

/// Worker count: `requested` if positive, else RS_THREADS, else hardware.
int resolve_thread_count(int requested);

}  // namespace antiramsey
