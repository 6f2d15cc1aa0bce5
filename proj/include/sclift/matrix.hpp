#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sclift/perm.hpp"

namespace sclift {

/// Sparse binary matrix with both row and column adjacency kept sorted.
class BinaryMatrix {
public:
    BinaryMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long ones() const { return ones_; }

    void set(int r, int c);
    bool get(int r, int c) const;

    const std::vector<int>& row_cols(int r) const { return row_cols_[r]; }
    const std::vector<int>& col_rows(int c) const { return col_rows_[c]; }

    int row_weight(int r) const { return static_cast<int>(row_cols_[r].size()); }
    int col_weight(int c) const { return static_cast<int>(col_rows_[c].size()); }

    bool operator==(const BinaryMatrix& o) const;

    /// True iff some pair of columns shares two or more rows.
    bool has_four_cycle() const;

private:
    int rows_, cols_;
    long long ones_ = 0;
    std::vector<std::vector<int>> row_cols_;
    std::vector<std::vector<int>> col_rows_;
};

/// Entry of a block-structured matrix. Zero blocks are normally absent from
/// the sparse map; the Zero variant only appears when deserializing.
struct BlockEntry {
    enum class Kind { Zero, Circulant, Explicit };
    Kind kind = Kind::Zero;
    int exponent = 0;                        // Circulant: sigma^exponent
    std::optional<Permutation> perm;         // Explicit

    static BlockEntry zero() { return {}; }
    static BlockEntry circulant(int e) { return {Kind::Circulant, e, std::nullopt}; }
    static BlockEntry explicit_perm(Permutation p) {
        return {Kind::Explicit, 0, std::move(p)};
    }
};

/// Sparse matrix of permutation blocks. Circulant exponents are kept symbolic
/// so analysis code can read them without scanning bits.
class BlockMatrix {
public:
    BlockMatrix(int block_rows, int block_cols, int block_size);

    int block_rows() const { return brows_; }
    int block_cols() const { return bcols_; }
    int block_size() const { return bsize_; }

    void set(int br, int bc, BlockEntry e);
    const BlockEntry* find(int br, int bc) const;
    const std::map<std::pair<int, int>, BlockEntry>& entries() const { return entries_; }

    BinaryMatrix expand() const;

private:
    int brows_, bcols_, bsize_;
    std::map<std::pair<int, int>, BlockEntry> entries_;
};

bool is_prime(int p);

/// Array-based base matrix H(gamma,p): block (i,j) is sigma^{(i*j) mod p},
/// sigma the p x p identity left-shifted by 1.
struct ABBase {
    int gamma;
    int p;

    ABBase(int gamma_, int p_);
    int exponent(int i, int j) const { return (i * j) % p; }
    BlockMatrix to_block_matrix() const;
    BinaryMatrix expand() const { return to_block_matrix().expand(); }
};

/// True iff every block_size-aligned block is zero or a circulant (each row
/// the cyclic right-shift of the previous one).
bool is_quasi_cyclic(const BinaryMatrix& m, int block_size);

// --- alist I/O (bit-exact format; see README) ---

void export_alist(const BinaryMatrix& m, std::ostream& out);
std::string export_alist_string(const BinaryMatrix& m);
/// Throws std::runtime_error with a line number on malformed input.
BinaryMatrix import_alist(std::istream& in);
BinaryMatrix import_alist_file(const std::string& path);
void export_alist_file(const BinaryMatrix& m, const std::string& path);

} // namespace sclift
