#include "sclift/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sclift {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n == 0)
        throw std::invalid_argument("permutation degree must be positive");
    std::vector<char> seen(n, 0);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("images are not a bijection on {0,...,n-1}");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::cyclic_shift(int n, long long k) {
    if (n < 1)
        throw std::invalid_argument("cyclic_shift: n must be >= 1");
    long long r = ((k % n) + n) % n;
    std::vector<int> im(n);
    for (int j = 0; j < n; ++j)
        im[j] = static_cast<int>((j - r + n) % n);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int j = 0; j < degree(); ++j)
        im[images_[j]] = j;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int j = 0; j < degree(); ++j)
        if (images_[j] != j)
            return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(p.degree());
    for (int j = 0; j < p.degree(); ++j)
        im[j] = p(q(j));
    return Permutation(std::move(im));
}

Permutation perm_power(const Permutation& p, long long t) {
    if (t < 0)
        throw std::invalid_argument("perm_power: negative exponent");
    Permutation acc = Permutation::identity(p.degree());
    Permutation base = p;
    while (t > 0) {
        if (t & 1)
            acc = compose(acc, base);
        base = compose(base, base);
        t >>= 1;
    }
    return acc;
}

CycleStructure cycle_structure(const Permutation& p) {
    const int n = p.degree();
    CycleStructure cs;
    cs.counts.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        int len = 0;
        for (int x = start; !seen[x]; x = p(x)) {
            seen[x] = 1;
            ++len;
        }
        ++cs.counts[len - 1];
    }
    return cs;
}

unsigned long long perm_order(const Permutation& p) {
    CycleStructure cs = cycle_structure(p);
    unsigned long long ord = 1;
    for (int i = 0; i < cs.degree(); ++i)
        if (cs.counts[i] > 0)
            ord = std::lcm<unsigned long long>(ord, i + 1);
    return ord;
}

Permutation kronecker(const Permutation& p, const Permutation& q) {
    const int L = p.degree(), J = q.degree();
    std::vector<int> im(static_cast<size_t>(L) * J);
    for (int i = 0; i < L; ++i)
        for (int u = 0; u < J; ++u)
            im[static_cast<size_t>(i) * J + u] = p(i) * J + q(u);
    return Permutation(std::move(im));
}

std::vector<Permutation> enumerate_shift_family(int L, int m) {
    if (m < 0 || m >= L)
        throw std::invalid_argument("enumerate_shift_family: need 0 <= m <= L-1");
    std::vector<Permutation> fam;
    fam.reserve(m + 1);
    for (int k = 0; k <= m; ++k)
        fam.push_back(Permutation::cyclic_shift(L, k));
    return fam;
}

Permutation realize_label(const LiftLabel& label, int L) {
    if (label.shift < 0 || label.shift >= L)
        throw std::invalid_argument("realize_label: shift exponent out of range");
    return kronecker(Permutation::cyclic_shift(L, label.shift), label.terminal);
}

unsigned long long shift_kron_order_formula(long long L, long long k, long long lambda_order) {
    const long long g3 = std::gcd(std::gcd(k, L), lambda_order);
    const long long num = L * lambda_order * g3;
    const long long den = std::gcd(k, L) * std::gcd(L, lambda_order);
    return static_cast<unsigned long long>(num / den);
}

unsigned long long cyclic_kron_order_formula(long long L, long long k, long long J, long long l) {
    const long long num = J * L * std::gcd(std::gcd(k, J), L) * std::gcd(std::gcd(l, J), L);
    const long long den = std::gcd(l, J) * std::gcd(k, L) * std::gcd(J, L) *
                          std::gcd(std::gcd(k, l), std::gcd(J, L));
    return static_cast<unsigned long long>(num / den);
}

OrderCheck check_order_formula(int L, int k, const Permutation& lambda) {
    OrderCheck c;
    c.L = L;
    c.k = k;
    c.lambda_order = static_cast<long long>(perm_order(lambda));
    c.formula = shift_kron_order_formula(L, k, c.lambda_order);
    c.direct = perm_order(realize_label(LiftLabel(k, lambda), L));
    c.agree = (c.formula == c.direct);
    return c;
}

Permutation net_permutation(const std::vector<OrientedLabel>& path) {
    if (path.empty())
        throw std::invalid_argument("net_permutation: empty path");
    const int J = path.front().label.degree();
    Permutation net = Permutation::identity(J);
    for (const auto& step : path) {
        if (step.label.degree() != J)
            throw std::invalid_argument("net_permutation: degree mismatch along path");
        net = compose(step.forward ? step.label : step.label.inverse(), net);
    }
    return net;
}

std::vector<long long> lifted_cycle_lengths(long long k, const Permutation& net) {
    CycleStructure cs = cycle_structure(net);
    std::vector<long long> lengths;
    for (int i = 0; i < cs.degree(); ++i)
        for (long long c = 0; c < cs.counts[i]; ++c)
            lengths.push_back(k * (i + 1));
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

} // namespace sclift
