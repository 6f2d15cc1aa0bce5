#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sclift/coupler.hpp"
#include "sclift/matrix.hpp"

namespace sclift {

// --- absorbing-set definition ---

struct AbsorbingSetWitness {
    std::vector<int> variables;   // D
    std::vector<int> odd_checks;  // O(D)
    int a = 0;                    // |D|
    int b = 0;                    // |O(D)|
};

/// Checks the strict-majority condition: every v in D has strictly fewer
/// neighbors in O(D) than in N(D) \ O(D).
std::optional<AbsorbingSetWitness> is_absorbing_set(const BinaryMatrix& H,
                                                    const std::vector<int>& D);

// --- block-level 6-cycle oracle over circulant grids ---

/// Grid of b x b circulant blocks; exponent < 0 marks a zero block.
struct CirculantGrid {
    int block_rows = 0, block_cols = 0, block_size = 1;
    std::vector<int> exp; // block_rows * block_cols, -1 for zero

    int exponent(int br, int bc) const { return exp[static_cast<size_t>(br) * block_cols + bc]; }
    bool nonzero(int br, int bc) const { return exponent(br, bc) >= 0; }

    static CirculantGrid from_block_matrix(const BlockMatrix& bm);
    BinaryMatrix expand() const;
};

/// A family of block_size parallel 6-cycles: block rows q1,q2,q3, block
/// columns j1 (shared by q1,q3), j2 (q1,q2), j3 (q2,q3).
struct SixCycleFamily {
    int q1, q2, q3;
    int j1, j2, j3;
};

/// One materialized 6-cycle: three rows and three columns of the expanded
/// matrix (cycle edges are (r1,c1),(r1,c2),(r2,c2),(r2,c3),(r3,c3),(r3,c1)).
struct SixCycle {
    std::array<int, 3> rows;
    std::array<int, 3> cols;
};

std::vector<SixCycleFamily> enumerate_six_cycle_families(const CirculantGrid& g);
std::vector<SixCycle> materialize_cycles(const CirculantGrid& g, const SixCycleFamily& f);
inline long long count_six_cycles_block(const CirculantGrid& g) {
    return static_cast<long long>(enumerate_six_cycle_families(g).size()) * g.block_size;
}

/// Validates that every cycle of every family induces a (3,3)-absorbing set in
/// the expanded matrix; returns human-readable reports of any counterexamples.
std::vector<std::string> validate_families_absorbing(const CirculantGrid& g,
                                                     const std::vector<SixCycleFamily>& fams);

/// Generic bit-level 6-cycle count over column triples. Works on any matrix;
/// quadratic-cubic in columns, intended for small validation instances.
long long count_six_cycles_bitlevel(const BinaryMatrix& m, int threads = 1);

// --- line counting (the fast enumerator) ---

/// Input parameters of the line counting step for one case.
struct RegionSpec {
    int case_l = 1;                  // case in [1,4]
    int alpha = 0, beta = 1;         // block-column window of the third column
    int w1 = 0, w2 = 1;              // c1 in [w1*p, w2*p)
    int w3 = 0, w4 = 1;              // c2 in [w3*p, w4*p)
    int p = 2;

    /// canonical_form additionally enforces the parameter ranges of the
    /// canonical region derivation (w2 <= p-1, w1+1 <= w3, ...); the relaxed
    /// form only requires well-formed intervals within [0, p].
    void validate(bool canonical_form = false) const;
};

/// Number of integer pairs (c1, c2) with c2 - c1 = n*p for some n in
/// [1, w4-w1-1] satisfying the case inequality and the box constraints.
/// Pure integer interval intersection; exact.
long long count_line(const RegionSpec& r);

// --- counting model of block-constant AB-SC codes ---

/// Reordered terminated AB-SC matrix with block-constant offsets:
/// block (gamma*g + i, t*p + j) equals sigma^{(i*j) mod p} iff g = t + B[i][j].
struct ScCode {
    int p = 0;
    int L = 0;
    std::array<std::vector<int>, 3> B; // gamma = 3 rows of offsets
    int m = 0;                         // max offset

    static ScCode from_bm(const BmMatrix& bm, int p, int L);
    static ScCode from_cutting_vector(const CuttingVector& xi, int p, int L);
    /// Requires gamma=3, J=1, identity terminal lift, block-constant offsets.
    static ScCode from_spec(const SCCodeSpec& spec);

    CirculantGrid terminated_grid() const;
    CirculantGrid tailbiting_grid() const; // reordered tailbiting (wrap-around)
    BinaryMatrix expand_terminated() const { return terminated_grid().expand(); }
};

struct RegionCount {
    std::string region; // R1..R7 for cutting vectors, W<d>:e... for strips
    RegionSpec spec;
    long long points = 0;
};

struct CountReport {
    std::string method; // "line" or "brute"
    int p = 0, gamma = 3, L = 0, m = 0;
    long long total = 0;
    /// strip-class counts: total = sum_d (L-d) * mu[d]; mu[0] counts cycles
    /// confined to one coupled position, mu[1] those spanning exactly two.
    std::vector<long long> mu;
    std::vector<RegionCount> per_region;
    std::vector<std::string> discrepancies;
    double seconds = 0.0;
};

/// Exact count of 6-cycles whose three block rows lie in [row_lo, row_hi] and
/// whose variable columns lie in positions [pos_lo, pos_hi], on the
/// terminated matrix. Row and position bounds are clamped to the matrix.
/// active_cols restricts to a subset of base columns (bit j = column j live);
/// used for prefix lower bounds during optimization.
long long count_cycles_in_range(const ScCode& sc, int row_lo, int row_hi, int pos_lo,
                                int pos_hi, std::vector<RegionCount>* regions = nullptr,
                                const std::string& label_prefix = "",
                                uint64_t active_cols = ~0ULL);

/// Full terminated count via strip translation invariance.
long long count_total(const ScCode& sc, std::vector<long long>* mu_out = nullptr,
                      uint64_t active_cols = ~0ULL);

/// The seven canonical region groups of a cutting-vector code: R1-R4 live
/// inside one coupled position, R5-R7 span two. Independent of L.
std::vector<RegionCount> regions_for_cutting_vector(const CuttingVector& xi, int p);

/// Line-counting report for a cutting-vector code, with the seven canonical
/// region groups and the mu_1/mu_2 split.
CountReport count_abs_cutting_vector(const CuttingVector& xi, int p, int L);

/// Piecewise line-counting report for any block-constant assignment.
CountReport count_abs_general(const ScCode& sc);

/// Brute-force report (block-level oracle on the terminated grid).
CountReport count_abs_brute(const ScCode& sc);

} // namespace sclift
