#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sclift/matrix.hpp"
#include "sclift/perm.hpp"
#include "sclift/rng.hpp"

namespace sclift {

/// Diagonal-cut description: block columns j < xi[i] of block row i go to H0,
/// the rest to H1 (memory 1).
struct CuttingVector {
    std::vector<int> xi;

    /// strict = require strictly increasing entries (the classical cut);
    /// default accepts any nondecreasing vector with 0 <= xi_i <= p.
    void validate(int gamma, int p, bool strict = false) const;
};

/// gamma x p grid of coupling offsets, one per AB block. Memory is the
/// largest entry.
struct BmMatrix {
    std::vector<std::vector<int>> entries; // gamma rows, p cols

    int gamma() const { return static_cast<int>(entries.size()); }
    int p() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
    int memory() const;
    int at(int i, int j) const { return entries[i][j]; }
    void validate(int declared_m) const;

    static BmMatrix from_cutting_vector(const CuttingVector& xi, int gamma, int p);
};

/// How terminal-lift permutations are chosen per base block.
struct LambdaPolicy {
    enum class Kind { Identity, Cyclic, Table };
    Kind kind = Kind::Identity;
    int cyclic_exponent = 0;                       // Cyclic: lambda = tau_J^l everywhere
    std::vector<std::vector<Permutation>> table;   // Table: gamma x p explicit lambdas

    static LambdaPolicy identity() { return {}; }
    static LambdaPolicy cyclic(int l) { return {Kind::Cyclic, l, {}}; }
    static LambdaPolicy explicit_table(std::vector<std::vector<Permutation>> t) {
        return {Kind::Table, 0, std::move(t)};
    }
};

/// One lift label per edge (nonzero entry) of the expanded base matrix.
struct EdgeAssignment {
    int m = 0;  // memory: max shift, with at least one edge using it
    int J = 1;  // terminal lift degree
    std::map<std::pair<int, int>, LiftLabel> labels; // (base row, base col) -> label

    void validate(const BinaryMatrix& base) const;
    bool block_constant(const ABBase& base, BmMatrix* out_bm = nullptr) const;
};

EdgeAssignment spread_cutting_vector(const ABBase& base, const CuttingVector& xi);
EdgeAssignment assignment_from_bm(const ABBase& base, const BmMatrix& bm,
                                  const LambdaPolicy& lambda, int J);
/// Method (i): each edge gets an independent uniform offset in {0,...,m}.
EdgeAssignment spread_random_method_i(const BinaryMatrix& base, int m, uint64_t seed);
/// Method (ii): each variable node of degree d gets d distinct offsets,
/// chosen uniformly among subsets and assigned to its edges in random order.
EdgeAssignment spread_random_method_ii(const BinaryMatrix& base, int m, uint64_t seed);

enum class CouplingMode { Tailbiting, Terminated };

/// Full recipe for a spatially coupled code; the matrix is a deterministic
/// function of this value.
struct SCCodeSpec {
    int gamma = 3;
    int p = 0;          // AB base modulus
    int L = 2;          // coupling length
    int m = 1;          // memory
    int J = 1;          // terminal lift degree
    CouplingMode mode = CouplingMode::Terminated;

    enum class Method { CuttingVector, Bm, RandomI, RandomII };
    Method method = Method::CuttingVector;
    CuttingVector xi;          // CuttingVector method
    BmMatrix bm;               // Bm method
    LambdaPolicy lambda;       // Bm method terminal lift
    uint64_t seed = 1;         // Random methods

    void validate() const;
    ABBase base() const { return ABBase(gamma, p); }
    EdgeAssignment assignment() const;

    std::string serialize() const;
    static SCCodeSpec parse(const std::string& text);
    static SCCodeSpec load(const std::string& path);
    void save(const std::string& path) const;
};

/// Single-step lift: every base edge with label (k,lambda) becomes the
/// JL x JL permutation tau_L^k (x) lambda placed at the edge's position.
BlockMatrix lift_tailbiting(const BinaryMatrix& base, const EdgeAssignment& a, int L);

/// Rearranges a lifted matrix into the banded form: vertices ordered first by
/// their index within an L-block, then by block index. J x J terminal blocks
/// move intact. Output block size is J.
BlockMatrix reorder(const BlockMatrix& lifted, int L, int J);

/// Unwraps a reordered tailbiting matrix: wrap-around blocks move to m extra
/// terminating block-row groups.
BlockMatrix terminate(const BlockMatrix& reordered, int L, int m);

/// Convenience: build the expanded parity-check matrix of a spec.
BinaryMatrix build_matrix(const SCCodeSpec& spec);

} // namespace sclift
