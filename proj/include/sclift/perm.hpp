#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sclift {

/// Immutable permutation on {0,...,n-1}. The matrix of a permutation pi has
/// entry (i,j) = 1 iff pi(j) = i, so composition matches matrix product.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Cyclic shift tau_n^k with tau_n(j) = (j-1) mod n ("identity left-shifted
    /// by 1" under the column convention above). k is reduced mod n.
    static Permutation cyclic_shift(int n, long long k);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int j) const { return images_[j]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
    std::vector<int> images_;
};

/// compose(p,q)(x) = p(q(x)); q acts first.
Permutation compose(const Permutation& p, const Permutation& q);
/// p^t for t >= 0.
Permutation perm_power(const Permutation& p, long long t);

/// Counts of i-cycles, counts[i-1] = number of cycles of length i.
struct CycleStructure {
    std::vector<long long> counts;
    int degree() const { return static_cast<int>(counts.size()); }
};

CycleStructure cycle_structure(const Permutation& p);
/// Order = lcm of cycle lengths.
unsigned long long perm_order(const Permutation& p);

/// Kronecker product: index a = i*J + u maps to p(i)*J + q(u), where J is the
/// degree of q. The matrix equals the Kronecker product of the two
/// permutation matrices.
Permutation kronecker(const Permutation& p, const Permutation& q);

/// Edge labels allowed on a tailbiting lift of coupling length L: tau_L^k for
/// 0 <= k <= m. Throws if m >= L.
std::vector<Permutation> enumerate_shift_family(int L, int m);

/// One edge label of the combined spreading + terminal lift: tau_L^shift (x) terminal.
struct LiftLabel {
    int shift = 0;          // k, coupling offset in [0, m]
    Permutation terminal;   // lambda in S_J

    LiftLabel() : terminal(Permutation::identity(1)) {}
    LiftLabel(int k, Permutation lambda) : shift(k), terminal(std::move(lambda)) {}
    int terminal_degree() const { return terminal.degree(); }

    friend bool operator==(const LiftLabel& a, const LiftLabel& b) = default;
};

/// kronecker(tau_L^shift, terminal); throws if shift is outside [0, L-1].
Permutation realize_label(const LiftLabel& label, int L);

/// Closed-form order expression for tau_L^k (x) lambda, evaluated verbatim.
/// Known to disagree with the true order for some inputs; see OrderCheck.
unsigned long long shift_kron_order_formula(long long L, long long k, long long lambda_order);
/// Closed-form order expression for tau_L^k (x) tau_J^l, evaluated verbatim.
unsigned long long cyclic_kron_order_formula(long long L, long long k, long long J, long long l);

/// Compares the closed-form order against direct computation. The direct
/// value is ground truth; a disagreement is data, not an error.
struct OrderCheck {
    long long L = 0, k = 0, lambda_order = 0;
    unsigned long long formula = 0;
    unsigned long long direct = 0;
    bool agree = false;
};
OrderCheck check_order_formula(int L, int k, const Permutation& lambda);

/// One step of a path: the edge label and whether the edge is traversed in
/// its assigned direction (reverse traversal contributes the inverse).
struct OrientedLabel {
    Permutation label;
    bool forward = true;
};

/// Ordered product of oriented edge labels along a path (first edge acts first).
Permutation net_permutation(const std::vector<OrientedLabel>& path);

/// Lengths of the cycles a base k-cycle lifts to: c_i cycles of length k*i,
/// where (c_1,...,c_J) is the cycle structure of the net permutation.
/// Returned as a sorted flat list of lengths.
std::vector<long long> lifted_cycle_lengths(long long k, const Permutation& net);

} // namespace sclift
