#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sclift/counting.hpp"
#include "sclift/window.hpp"

namespace sclift {

/// What the search minimizes: the full-matrix count or the sum over sliding
/// window positions.
struct Objective {
    enum class Kind { Full, Windowed };
    enum class Backend { Line, Brute };

    Kind kind = Kind::Full;
    Backend backend = Backend::Line;
    int p = 0, L = 0;
    WindowSpec window; // Windowed only

    long long evaluate(const ScCode& sc) const;
    /// Restricted to a subset of base columns; monotone in the subset, so a
    /// prefix evaluation is a valid lower bound (Full objective only).
    long long evaluate_prefix(const ScCode& sc, uint64_t active_cols) const;
};

struct SearchConfig {
    int beam = 64;
    int backtrack = 2;       // width of the re-assignment window in refinement
    uint64_t seed = 1;
    long long budget = 1000000; // candidate evaluations
};

struct TracePoint {
    long long evaluations;
    long long value;
};

struct OptimizeResult {
    BmMatrix bm;
    CountReport report;       // verified count of the returned matrix
    std::vector<TracePoint> trace;
    long long evaluations = 0;
    bool budget_exhausted = false;
    bool verified_brute = false; // re-checked against the block oracle (p <= 13)
};

/// Exhaustive sweep over nondecreasing cutting vectors in [0,p]^3; ties break
/// lexicographically.
std::pair<CuttingVector, CountReport> best_cutting_vector(int p, int L,
                                                          const Objective& objective);

/// Beam search over block columns with prefix lower-bound pruning, followed
/// by bounded re-assignment refinement and seeded restarts, all within the
/// evaluation budget. Deterministic for a fixed config.
OptimizeResult optimize_bm(int p, int m, int L, const Objective& objective,
                           const SearchConfig& config);

} // namespace sclift
