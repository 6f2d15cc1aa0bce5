#include "sclift/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sclift {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("BinaryMatrix: negative dimensions");
    row_cols_.resize(rows);
    col_rows_.resize(cols);
}

void BinaryMatrix::set(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("BinaryMatrix::set: position out of bounds");
    auto& rc = row_cols_[r];
    auto it = std::lower_bound(rc.begin(), rc.end(), c);
    if (it != rc.end() && *it == c)
        return;
    rc.insert(it, c);
    auto& cr = col_rows_[c];
    cr.insert(std::lower_bound(cr.begin(), cr.end(), r), r);
    ++ones_;
}

bool BinaryMatrix::get(int r, int c) const {
    const auto& rc = row_cols_[r];
    return std::binary_search(rc.begin(), rc.end(), c);
}

bool BinaryMatrix::operator==(const BinaryMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && row_cols_ == o.row_cols_;
}

bool BinaryMatrix::has_four_cycle() const {
    // Two columns sharing >= 2 rows; scan row pairs per column via rows.
    std::vector<std::vector<int>> pair_seen(cols_);
    for (int r = 0; r < rows_; ++r) {
        const auto& cs = row_cols_[r];
        for (size_t a = 0; a < cs.size(); ++a)
            for (size_t b = a + 1; b < cs.size(); ++b) {
                auto& lst = pair_seen[cs[a]];
                if (std::find(lst.begin(), lst.end(), cs[b]) != lst.end())
                    return true;
                lst.push_back(cs[b]);
            }
    }
    return false;
}

BlockMatrix::BlockMatrix(int block_rows, int block_cols, int block_size)
    : brows_(block_rows), bcols_(block_cols), bsize_(block_size) {
    if (block_rows < 1 || block_cols < 1 || block_size < 1)
        throw std::invalid_argument("BlockMatrix: dimensions must be positive");
}

void BlockMatrix::set(int br, int bc, BlockEntry e) {
    if (br < 0 || br >= brows_ || bc < 0 || bc >= bcols_)
        throw std::out_of_range("BlockMatrix::set: block out of bounds");
    if (e.kind == BlockEntry::Kind::Zero) {
        entries_.erase({br, bc});
        return;
    }
    if (e.kind == BlockEntry::Kind::Circulant) {
        e.exponent = ((e.exponent % bsize_) + bsize_) % bsize_;
    } else if (e.perm->degree() != bsize_) {
        throw std::invalid_argument("BlockMatrix::set: permutation degree != block size");
    }
    entries_[{br, bc}] = std::move(e);
}

const BlockEntry* BlockMatrix::find(int br, int bc) const {
    auto it = entries_.find({br, bc});
    return it == entries_.end() ? nullptr : &it->second;
}

BinaryMatrix BlockMatrix::expand() const {
    BinaryMatrix m(brows_ * bsize_, bcols_ * bsize_);
    for (const auto& [pos, e] : entries_) {
        const int r0 = pos.first * bsize_, c0 = pos.second * bsize_;
        if (e.kind == BlockEntry::Kind::Circulant) {
            // sigma^e maps j -> (j-e) mod b; entry (i,j)=1 iff i=(j-e) mod b.
            for (int j = 0; j < bsize_; ++j)
                m.set(r0 + (j - e.exponent % bsize_ + bsize_) % bsize_, c0 + j);
        } else {
            for (int j = 0; j < bsize_; ++j)
                m.set(r0 + (*e.perm)(j), c0 + j);
        }
    }
    return m;
}

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

ABBase::ABBase(int gamma_, int p_) : gamma(gamma_), p(p_) {
    if (!is_prime(p))
        throw std::invalid_argument("ABBase: p must be prime");
    if (gamma < 1 || gamma > p)
        throw std::invalid_argument("ABBase: need 1 <= gamma <= p");
}

BlockMatrix ABBase::to_block_matrix() const {
    BlockMatrix bm(gamma, p, p);
    for (int i = 0; i < gamma; ++i)
        for (int j = 0; j < p; ++j)
            bm.set(i, j, BlockEntry::circulant(exponent(i, j)));
    return bm;
}

bool is_quasi_cyclic(const BinaryMatrix& m, int block_size) {
    if (block_size < 1 || m.rows() % block_size != 0 || m.cols() % block_size != 0)
        throw std::invalid_argument("is_quasi_cyclic: dimensions not divisible by block size");
    const int b = block_size;
    for (int br = 0; br < m.rows() / b; ++br)
        for (int bc = 0; bc < m.cols() / b; ++bc)
            for (int i = 0; i + 1 < b; ++i)
                for (int j = 0; j < b; ++j)
                    if (m.get(br * b + i, bc * b + j) !=
                        m.get(br * b + i + 1, bc * b + (j + 1) % b))
                        return false;
    return true;
}

// --- alist ---

void export_alist(const BinaryMatrix& m, std::ostream& out) {
    const int N = m.cols(), M = m.rows();
    int maxc = 0, maxr = 0;
    for (int c = 0; c < N; ++c)
        maxc = std::max(maxc, m.col_weight(c));
    for (int r = 0; r < M; ++r)
        maxr = std::max(maxr, m.row_weight(r));
    out << N << ' ' << M << '\n';
    out << maxc << ' ' << maxr << '\n';
    for (int c = 0; c < N; ++c)
        out << m.col_weight(c) << (c + 1 < N ? ' ' : '\n');
    for (int r = 0; r < M; ++r)
        out << m.row_weight(r) << (r + 1 < M ? ' ' : '\n');
    for (int c = 0; c < N; ++c) {
        for (int i = 0; i < maxc; ++i) {
            int v = i < m.col_weight(c) ? m.col_rows(c)[i] + 1 : 0;
            out << v << (i + 1 < maxc ? ' ' : '\n');
        }
    }
    for (int r = 0; r < M; ++r) {
        for (int i = 0; i < maxr; ++i) {
            int v = i < m.row_weight(r) ? m.row_cols(r)[i] + 1 : 0;
            out << v << (i + 1 < maxr ? ' ' : '\n');
        }
    }
}

std::string export_alist_string(const BinaryMatrix& m) {
    std::ostringstream ss;
    export_alist(m, ss);
    return ss.str();
}

namespace {

struct LineReader {
    std::istream& in;
    int lineno = 0;

    std::vector<long long> next_ints(const char* what) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            std::istringstream ss(line);
            std::vector<long long> vals;
            long long v;
            while (ss >> v)
                vals.push_back(v);
            if (!ss.eof())
                throw std::runtime_error("alist line " + std::to_string(lineno) +
                                         ": non-integer token while reading " + what);
            return vals;
        }
        throw std::runtime_error("alist: unexpected end of file while reading " +
                                 std::string(what));
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("alist line " + std::to_string(lineno) + ": " + msg);
    }
};

} // namespace

BinaryMatrix import_alist(std::istream& in) {
    LineReader rd{in};
    auto dims = rd.next_ints("dimensions");
    if (dims.size() != 2 || dims[0] < 1 || dims[1] < 1)
        rd.fail("expected 'N M'");
    const int N = static_cast<int>(dims[0]), M = static_cast<int>(dims[1]);
    auto maxs = rd.next_ints("max degrees");
    if (maxs.size() != 2 || maxs[0] < 0 || maxs[1] < 0)
        rd.fail("expected 'max_col_degree max_row_degree'");
    const int maxc = static_cast<int>(maxs[0]), maxr = static_cast<int>(maxs[1]);

    auto cdeg = rd.next_ints("column degrees");
    if (static_cast<int>(cdeg.size()) != N)
        rd.fail("expected " + std::to_string(N) + " column degrees");
    auto rdeg = rd.next_ints("row degrees");
    if (static_cast<int>(rdeg.size()) != M)
        rd.fail("expected " + std::to_string(M) + " row degrees");
    for (long long d : cdeg)
        if (d < 0 || d > maxc)
            rd.fail("column degree out of range");
    for (long long d : rdeg)
        if (d < 0 || d > maxr)
            rd.fail("row degree out of range");

    BinaryMatrix m(M, N);
    for (int c = 0; c < N; ++c) {
        auto vals = rd.next_ints("column neighbor list");
        if (static_cast<int>(vals.size()) != maxc)
            rd.fail("expected " + std::to_string(maxc) + " entries in column list");
        for (int i = 0; i < maxc; ++i) {
            long long v = vals[i];
            if (i < cdeg[c]) {
                if (v < 1 || v > M)
                    rd.fail("check index out of range");
                m.set(static_cast<int>(v - 1), c);
            } else if (v != 0) {
                rd.fail("expected 0 padding");
            }
        }
    }
    for (int r = 0; r < M; ++r) {
        auto vals = rd.next_ints("row neighbor list");
        if (static_cast<int>(vals.size()) != maxr)
            rd.fail("expected " + std::to_string(maxr) + " entries in row list");
        for (int i = 0; i < maxr; ++i) {
            long long v = vals[i];
            if (i < rdeg[r]) {
                if (v < 1 || v > N)
                    rd.fail("variable index out of range");
                if (!m.get(r, static_cast<int>(v - 1)))
                    rd.fail("row list disagrees with column lists");
            } else if (v != 0) {
                rd.fail("expected 0 padding");
            }
        }
    }
    for (int c = 0; c < N; ++c)
        if (m.col_weight(c) != cdeg[c])
            throw std::runtime_error("alist: declared column degree mismatch at column " +
                                     std::to_string(c + 1));
    for (int r = 0; r < M; ++r)
        if (m.row_weight(r) != rdeg[r])
            throw std::runtime_error("alist: declared row degree mismatch at row " +
                                     std::to_string(r + 1));
    return m;
}

BinaryMatrix import_alist_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open alist file: " + path);
    return import_alist(f);
}

void export_alist_file(const BinaryMatrix& m, const std::string& path) {
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write alist file: " + path);
    export_alist(m, f);
}

} // namespace sclift
