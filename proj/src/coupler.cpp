#include "sclift/coupler.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sclift {

void CuttingVector::validate(int gamma, int p, bool strict) const {
    if (static_cast<int>(xi.size()) != gamma)
        throw std::invalid_argument("cutting vector: expected " + std::to_string(gamma) +
                                    " entries");
    for (int v : xi)
        if (v < 0 || v > p)
            throw std::invalid_argument("cutting vector: entries must lie in [0, p]");
    for (size_t i = 0; i + 1 < xi.size(); ++i) {
        if (strict ? xi[i] >= xi[i + 1] : xi[i] > xi[i + 1])
            throw std::invalid_argument(strict ? "cutting vector: entries must be strictly increasing"
                                               : "cutting vector: entries must be nondecreasing");
    }
}

int BmMatrix::memory() const {
    int m = 0;
    for (const auto& row : entries)
        for (int v : row)
            m = std::max(m, v);
    return m;
}

void BmMatrix::validate(int declared_m) const {
    if (entries.empty() || entries[0].empty())
        throw std::invalid_argument("Bm matrix: empty");
    for (const auto& row : entries) {
        if (row.size() != entries[0].size())
            throw std::invalid_argument("Bm matrix: ragged rows");
        for (int v : row)
            if (v < 0 || v > declared_m)
                throw std::invalid_argument("Bm matrix: entry outside [0, m]");
    }
    if (memory() != declared_m)
        throw std::invalid_argument("Bm matrix: no entry equals m; true memory is smaller");
}

BmMatrix BmMatrix::from_cutting_vector(const CuttingVector& xi, int gamma, int p) {
    xi.validate(gamma, p);
    BmMatrix bm;
    bm.entries.assign(gamma, std::vector<int>(p, 0));
    for (int i = 0; i < gamma; ++i)
        for (int j = 0; j < p; ++j)
            bm.entries[i][j] = j < xi.xi[i] ? 0 : 1;
    return bm;
}

void EdgeAssignment::validate(const BinaryMatrix& base) const {
    long long edges = 0;
    for (int r = 0; r < base.rows(); ++r)
        edges += base.row_weight(r);
    if (static_cast<long long>(labels.size()) != edges)
        throw std::invalid_argument("edge assignment: label count differs from edge count");
    for (const auto& [pos, label] : labels) {
        if (!base.get(pos.first, pos.second))
            throw std::invalid_argument("edge assignment: label on a zero base entry");
        if (label.shift < 0 || label.shift > m)
            throw std::invalid_argument("edge assignment: shift outside [0, m]");
        if (label.terminal.degree() != J)
            throw std::invalid_argument("edge assignment: terminal degree != J");
    }
}

bool EdgeAssignment::block_constant(const ABBase& base, BmMatrix* out_bm) const {
    if (J != 1)
        return false;
    BmMatrix bm;
    bm.entries.assign(base.gamma, std::vector<int>(base.p, -1));
    for (const auto& [pos, label] : labels) {
        if (!label.terminal.is_identity())
            return false;
        int bi = pos.first / base.p, bj = pos.second / base.p;
        int& cell = bm.entries[bi][bj];
        if (cell == -1)
            cell = label.shift;
        else if (cell != label.shift)
            return false;
    }
    for (auto& row : bm.entries)
        for (int& v : row)
            if (v == -1)
                v = 0;
    if (out_bm)
        *out_bm = std::move(bm);
    return true;
}

EdgeAssignment spread_cutting_vector(const ABBase& base, const CuttingVector& xi) {
    xi.validate(base.gamma, base.p);
    return assignment_from_bm(base, BmMatrix::from_cutting_vector(xi, base.gamma, base.p),
                              LambdaPolicy::identity(), 1);
}

EdgeAssignment assignment_from_bm(const ABBase& base, const BmMatrix& bm,
                                  const LambdaPolicy& lambda, int J) {
    if (bm.gamma() != base.gamma || bm.p() != base.p)
        throw std::invalid_argument("assignment_from_bm: Bm dimensions do not match base");
    if (J < 1)
        throw std::invalid_argument("assignment_from_bm: J must be >= 1");
    if (lambda.kind == LambdaPolicy::Kind::Table) {
        if (static_cast<int>(lambda.table.size()) != base.gamma)
            throw std::invalid_argument("lambda table: wrong number of rows");
        for (const auto& row : lambda.table) {
            if (static_cast<int>(row.size()) != base.p)
                throw std::invalid_argument("lambda table: wrong number of columns");
            for (const auto& perm : row)
                if (perm.degree() != J)
                    throw std::invalid_argument("lambda table: permutation degree != J");
        }
    }
    EdgeAssignment a;
    a.m = bm.memory();
    a.J = J;
    BinaryMatrix expanded = base.expand();
    for (int r = 0; r < expanded.rows(); ++r) {
        int bi = r / base.p;
        for (int c : expanded.row_cols(r)) {
            int bj = c / base.p;
            Permutation lam = Permutation::identity(J);
            if (lambda.kind == LambdaPolicy::Kind::Cyclic)
                lam = Permutation::cyclic_shift(J, lambda.cyclic_exponent);
            else if (lambda.kind == LambdaPolicy::Kind::Table)
                lam = lambda.table[bi][bj];
            a.labels.emplace(std::make_pair(r, c), LiftLabel(bm.at(bi, bj), std::move(lam)));
        }
    }
    return a;
}

EdgeAssignment spread_random_method_i(const BinaryMatrix& base, int m, uint64_t seed) {
    if (m < 0)
        throw std::invalid_argument("spread_random_method_i: m must be >= 0");
    EdgeAssignment a;
    a.m = m;
    a.J = 1;
    for (int r = 0; r < base.rows(); ++r)
        for (int c : base.row_cols(r)) {
            SplitMix64 rng = seed_stream(seed, static_cast<uint64_t>(r) * base.cols() + c);
            a.labels.emplace(std::make_pair(r, c),
                             LiftLabel(static_cast<int>(rng.below(m + 1)),
                                       Permutation::identity(1)));
        }
    return a;
}

EdgeAssignment spread_random_method_ii(const BinaryMatrix& base, int m, uint64_t seed) {
    if (m < 0)
        throw std::invalid_argument("spread_random_method_ii: m must be >= 0");
    EdgeAssignment a;
    a.m = m;
    a.J = 1;
    for (int c = 0; c < base.cols(); ++c) {
        const auto& rows = base.col_rows(c);
        const int d = static_cast<int>(rows.size());
        if (d > m + 1)
            throw std::invalid_argument(
                "spread_random_method_ii: variable degree exceeds m+1 at column " +
                std::to_string(c));
        SplitMix64 rng = seed_stream(seed, static_cast<uint64_t>(c));
        std::vector<int> offsets(m + 1);
        std::iota(offsets.begin(), offsets.end(), 0);
        // partial Fisher-Yates: first d entries are a uniform ordered sample
        for (int i = 0; i < d; ++i) {
            int j = i + static_cast<int>(rng.below(m + 1 - i));
            std::swap(offsets[i], offsets[j]);
        }
        for (int i = 0; i < d; ++i)
            a.labels.emplace(std::make_pair(rows[i], c),
                             LiftLabel(offsets[i], Permutation::identity(1)));
    }
    return a;
}

void SCCodeSpec::validate() const {
    ABBase b(gamma, p); // checks primality and gamma range
    (void)b;
    if (L < 1)
        throw std::invalid_argument("spec: L must be >= 1");
    if (J < 1)
        throw std::invalid_argument("spec: J must be >= 1");
    if (m < 0 || m > std::max(0, L - 1))
        throw std::invalid_argument("spec: need 0 <= m <= L-1");
    switch (method) {
    case Method::CuttingVector: {
        xi.validate(gamma, p);
        BmMatrix b01 = BmMatrix::from_cutting_vector(xi, gamma, p);
        if (b01.memory() != m)
            throw std::invalid_argument("spec: m does not match the cutting vector's memory");
        break;
    }
    case Method::Bm:
        bm.validate(m);
        if (bm.gamma() != gamma || bm.p() != p)
            throw std::invalid_argument("spec: Bm dimensions do not match gamma x p");
        break;
    case Method::RandomI:
    case Method::RandomII:
        break;
    }
}

EdgeAssignment SCCodeSpec::assignment() const {
    validate();
    switch (method) {
    case Method::CuttingVector:
        return spread_cutting_vector(base(), xi);
    case Method::Bm:
        return assignment_from_bm(base(), bm, lambda, J);
    case Method::RandomI:
        return spread_random_method_i(base().expand(), m, seed);
    case Method::RandomII:
        return spread_random_method_ii(base().expand(), m, seed);
    }
    throw std::logic_error("unreachable");
}

namespace {

const char* mode_name(CouplingMode m) {
    return m == CouplingMode::Tailbiting ? "tailbiting" : "terminated";
}

const char* method_name(SCCodeSpec::Method m) {
    switch (m) {
    case SCCodeSpec::Method::CuttingVector: return "cutting-vector";
    case SCCodeSpec::Method::Bm: return "bm";
    case SCCodeSpec::Method::RandomI: return "random-i";
    case SCCodeSpec::Method::RandomII: return "random-ii";
    }
    return "?";
}

} // namespace

std::string SCCodeSpec::serialize() const {
    std::ostringstream out;
    out << "sclift-spec v1\n";
    out << "gamma=" << gamma << "\n";
    out << "p=" << p << "\n";
    out << "L=" << L << "\n";
    out << "m=" << m << "\n";
    out << "J=" << J << "\n";
    out << "mode=" << mode_name(mode) << "\n";
    out << "method=" << method_name(method) << "\n";
    if (method == Method::CuttingVector) {
        out << "xi=";
        for (size_t i = 0; i < xi.xi.size(); ++i)
            out << xi.xi[i] << (i + 1 < xi.xi.size() ? "," : "");
        out << "\n";
    } else if (method == Method::Bm) {
        for (int i = 0; i < bm.gamma(); ++i) {
            out << "bm." << i << "=";
            for (int j = 0; j < bm.p(); ++j)
                out << bm.at(i, j) << (j + 1 < bm.p() ? " " : "");
            out << "\n";
        }
        if (lambda.kind == LambdaPolicy::Kind::Identity) {
            out << "lambda=identity\n";
        } else if (lambda.kind == LambdaPolicy::Kind::Cyclic) {
            out << "lambda=cyclic:" << lambda.cyclic_exponent << "\n";
        } else {
            out << "lambda=table\n";
            for (int i = 0; i < gamma; ++i)
                for (int j = 0; j < p; ++j) {
                    out << "lambda." << i << "." << j << "=";
                    const auto& im = lambda.table[i][j].images();
                    for (size_t u = 0; u < im.size(); ++u)
                        out << im[u] << (u + 1 < im.size() ? "," : "");
                    out << "\n";
                }
        }
    } else {
        out << "seed=" << seed << "\n";
    }
    return out.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& s, char sep) {
    std::vector<int> out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, sep)) {
        if (tok.empty() && sep == ' ')
            continue;
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("spec: bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

SCCodeSpec SCCodeSpec::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "sclift-spec v1")
        throw std::invalid_argument("spec: missing 'sclift-spec v1' header");
    SCCodeSpec s;
    std::map<std::string, std::string> kv;
    std::vector<std::pair<std::string, std::string>> ordered;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("spec: expected key=value, got '" + line + "'");
        ordered.emplace_back(line.substr(0, eq), line.substr(eq + 1));
        kv[ordered.back().first] = ordered.back().second;
    }
    auto need = [&](const std::string& k) {
        auto it = kv.find(k);
        if (it == kv.end())
            throw std::invalid_argument("spec: missing key '" + k + "'");
        return it->second;
    };
    s.gamma = std::stoi(need("gamma"));
    s.p = std::stoi(need("p"));
    s.L = std::stoi(need("L"));
    s.m = std::stoi(need("m"));
    s.J = std::stoi(need("J"));
    std::string mode = need("mode");
    if (mode == "tailbiting")
        s.mode = CouplingMode::Tailbiting;
    else if (mode == "terminated")
        s.mode = CouplingMode::Terminated;
    else
        throw std::invalid_argument("spec: mode must be tailbiting or terminated");
    std::string method = need("method");
    if (method == "cutting-vector") {
        s.method = Method::CuttingVector;
        s.xi.xi = parse_int_list(need("xi"), ',');
    } else if (method == "bm") {
        s.method = Method::Bm;
        s.bm.entries.clear();
        for (int i = 0; i < s.gamma; ++i)
            s.bm.entries.push_back(parse_int_list(need("bm." + std::to_string(i)), ' '));
        std::string lam = need("lambda");
        if (lam == "identity") {
            s.lambda = LambdaPolicy::identity();
        } else if (lam.rfind("cyclic:", 0) == 0) {
            s.lambda = LambdaPolicy::cyclic(std::stoi(lam.substr(7)));
        } else if (lam == "table") {
            std::vector<std::vector<Permutation>> table(
                s.gamma, std::vector<Permutation>(s.p, Permutation::identity(s.J)));
            for (int i = 0; i < s.gamma; ++i)
                for (int j = 0; j < s.p; ++j) {
                    auto im = parse_int_list(
                        need("lambda." + std::to_string(i) + "." + std::to_string(j)), ',');
                    table[i][j] = Permutation(im);
                }
            s.lambda = LambdaPolicy::explicit_table(std::move(table));
        } else {
            throw std::invalid_argument("spec: lambda must be identity, cyclic:<l>, or table");
        }
    } else if (method == "random-i") {
        s.method = Method::RandomI;
        s.seed = std::stoull(need("seed"));
    } else if (method == "random-ii") {
        s.method = Method::RandomII;
        s.seed = std::stoull(need("seed"));
    } else {
        throw std::invalid_argument("spec: unknown method '" + method + "'");
    }
    s.validate();
    return s;
}

SCCodeSpec SCCodeSpec::load(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

void SCCodeSpec::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write spec file: " + path);
    f << serialize();
}

BlockMatrix lift_tailbiting(const BinaryMatrix& base, const EdgeAssignment& a, int L) {
    a.validate(base);
    if (a.m > std::max(0, L - 1))
        throw std::invalid_argument("lift_tailbiting: memory exceeds L-1");
    const int J = a.J;
    BlockMatrix out(base.rows(), base.cols(), J * L);
    for (const auto& [pos, label] : a.labels) {
        if (J == 1)
            out.set(pos.first, pos.second, BlockEntry::circulant(label.shift));
        else
            out.set(pos.first, pos.second, BlockEntry::explicit_perm(realize_label(label, L)));
    }
    return out;
}

namespace {

// Splits a JL-degree permutation into tau_L^k (x) lambda; throws if it is not
// of that form.
std::pair<int, Permutation> split_kron(const Permutation& pi, int L, int J) {
    const int t0 = pi(0) / J;
    const int k = (L - t0) % L; // tau_L^k maps 0 to (0-k) mod L = L-k
    std::vector<int> lam(J);
    for (int u = 0; u < J; ++u) {
        int img = pi(u);
        if (img / J != t0)
            throw std::invalid_argument("reorder: block is not a Kronecker lift product");
        lam[u] = img % J;
    }
    Permutation lambda(lam);
    if (!(realize_label(LiftLabel(k, lambda), L) == pi))
        throw std::invalid_argument("reorder: block is not a Kronecker lift product");
    return {k, lambda};
}

} // namespace

BlockMatrix reorder(const BlockMatrix& lifted, int L, int J) {
    if (lifted.block_size() != J * L)
        throw std::invalid_argument("reorder: block size is not J*L");
    const int R = lifted.block_rows(), C = lifted.block_cols();
    BlockMatrix out(R * L, C * L, J);
    for (const auto& [pos, e] : lifted.entries()) {
        int k;
        Permutation lambda = Permutation::identity(J);
        if (e.kind == BlockEntry::Kind::Circulant) {
            if (J != 1)
                throw std::invalid_argument("reorder: circulant block with J > 1");
            k = e.exponent;
        } else {
            auto [kk, lam] = split_kron(*e.perm, L, J);
            k = kk;
            lambda = std::move(lam);
        }
        // tau_L^k sends variable copy t to check copy (t-k) mod L
        for (int t = 0; t < L; ++t) {
            int g = (t - k % L + L) % L;
            out.set(g * R + pos.first, t * C + pos.second,
                    J == 1 ? BlockEntry::circulant(0) : BlockEntry::explicit_perm(lambda));
        }
    }
    return out;
}

BlockMatrix terminate(const BlockMatrix& reordered, int L, int m) {
    if (reordered.block_rows() % L != 0 || reordered.block_cols() % L != 0)
        throw std::invalid_argument("terminate: dimensions not divisible by L");
    const int R = reordered.block_rows() / L, C = reordered.block_cols() / L;
    BlockMatrix out((L + m) * R, L * C, reordered.block_size());
    for (const auto& [pos, e] : reordered.entries()) {
        const int g = pos.first / R, r = pos.first % R;
        const int t = pos.second / C;
        const int k = ((t - g) % L + L) % L; // coupling offset of this block
        if (k > m)
            throw std::invalid_argument("terminate: input is not in banded form for memory m");
        out.set((t + k) * R + r, pos.second, e);
    }
    return out;
}

BinaryMatrix build_matrix(const SCCodeSpec& spec) {
    EdgeAssignment a = spec.assignment();
    BlockMatrix lifted = lift_tailbiting(spec.base().expand(), a, spec.L);
    BlockMatrix ordered = reorder(lifted, spec.L, spec.J);
    if (spec.mode == CouplingMode::Terminated)
        ordered = terminate(ordered, spec.L, spec.m);
    return ordered.expand();
}

} // namespace sclift
