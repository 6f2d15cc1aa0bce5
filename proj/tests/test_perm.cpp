#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sclift/perm.hpp"
#include "sclift/rng.hpp"

using namespace sclift;

namespace {

Permutation random_perm(int n, SplitMix64& rng) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(im[i], im[static_cast<size_t>(rng.below(i + 1))]);
    return Permutation(std::move(im));
}

std::vector<Permutation> all_perms(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

unsigned long long order_by_iteration(const Permutation& p) {
    Permutation acc = p;
    unsigned long long t = 1;
    while (!acc.is_identity()) {
        acc = compose(p, acc);
        ++t;
    }
    return t;
}

} // namespace

TEST_CASE("cyclic shift convention") {
    CHECK(Permutation::cyclic_shift(4, 0) == Permutation::identity(4));
    CHECK(Permutation::cyclic_shift(4, 1).images() == std::vector<int>{3, 0, 1, 2});
    // order of tau_6^4 is 6/gcd(4,6) = 3
    CHECK(perm_order(Permutation::cyclic_shift(6, 4)) == 3);
    CHECK(Permutation::cyclic_shift(5, -1) == Permutation::cyclic_shift(5, 4));
}

TEST_CASE("compose, inverse, cycle structure, order") {
    auto t4 = Permutation::cyclic_shift(4, 1);
    CHECK(compose(t4, Permutation::cyclic_shift(4, 3)).is_identity());

    auto cs = cycle_structure(Permutation::cyclic_shift(6, 2));
    CHECK(cs.counts == std::vector<long long>{0, 0, 2, 0, 0, 0});

    // degree-5 permutation with one fixed point and two 2-cycles
    Permutation p({0, 2, 1, 4, 3});
    auto c = cycle_structure(p);
    CHECK(c.counts[0] == 1);
    CHECK(c.counts[1] == 2);
    CHECK(perm_order(p) == 2);

    CHECK_THROWS(compose(Permutation::identity(3), Permutation::identity(4)));
    CHECK_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("kronecker product") {
    CHECK(kronecker(Permutation::identity(3), Permutation::identity(4)) ==
          Permutation::identity(12));
    CHECK(kronecker(Permutation::cyclic_shift(2, 1), Permutation::identity(2)).images() ==
          std::vector<int>{2, 3, 0, 1});

    // order of tau_9^3 (x) lambda with o(lambda)=6, computed directly
    auto lam = Permutation::cyclic_shift(6, 1);
    auto k = kronecker(Permutation::cyclic_shift(9, 3), lam);
    CHECK(perm_order(k) == 6);
    CHECK(order_by_iteration(k) == 6);
}

TEST_CASE("kronecker power identity") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int L = 2 + static_cast<int>(rng.below(7));
        int J = 2 + static_cast<int>(rng.below(7));
        int k = static_cast<int>(rng.below(L));
        long long t = 1 + static_cast<long long>(rng.below(20));
        auto lam = random_perm(J, rng);
        auto lhs = perm_power(kronecker(Permutation::cyclic_shift(L, k), lam), t);
        auto rhs = kronecker(Permutation::cyclic_shift(L, k * t), perm_power(lam, t));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bijectivity preserved under the algebra") {
    // exhaustive on small degrees, randomized on larger ones; the
    // Permutation constructor rejects any non-bijection
    for (int n = 1; n <= 4; ++n) {
        auto perms = all_perms(n);
        for (const auto& a : perms)
            for (const auto& b : perms) {
                CHECK(compose(a, b).degree() == n);
                CHECK(compose(a, a.inverse()).is_identity());
            }
    }
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + static_cast<int>(rng.below(60));
        auto a = random_perm(n, rng);
        auto b = random_perm(n, rng);
        CHECK(compose(a, b).degree() == n);
        CHECK(compose(b.inverse(), b).is_identity());
        CHECK(kronecker(a, b).degree() == n * n);
    }
}

TEST_CASE("shift family") {
    auto fam = enumerate_shift_family(6, 3);
    REQUIRE(fam.size() == 4);
    for (int k = 0; k <= 3; ++k)
        CHECK(fam[k] == Permutation::cyclic_shift(6, k));
    CHECK(enumerate_shift_family(7, 3).size() == 4);
    auto trivial = enumerate_shift_family(5, 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].is_identity());
    CHECK_THROWS(enumerate_shift_family(4, 4));
}

TEST_CASE("realize_label") {
    CHECK(realize_label(LiftLabel(0, Permutation::identity(2)), 5) ==
          Permutation::identity(10));
    CHECK(realize_label(LiftLabel(1, Permutation::identity(1)), 3) ==
          Permutation::cyclic_shift(3, 1));
    CHECK_THROWS(realize_label(LiftLabel(3, Permutation::identity(1)), 3));
}

TEST_CASE("lift label family is a subgroup (exhaustive L,J <= 4)") {
    for (int L = 2; L <= 4; ++L)
        for (int J = 1; J <= 4; ++J) {
            std::set<std::vector<int>> family;
            std::vector<Permutation> members;
            for (int k = 0; k < L; ++k)
                for (const auto& lam : all_perms(J)) {
                    auto g = realize_label(LiftLabel(k, lam), L);
                    family.insert(g.images());
                    members.push_back(g);
                }
            // size (m+1) * J! with m = L-1
            unsigned long long fact = 1;
            for (int i = 2; i <= J; ++i)
                fact *= i;
            CHECK(family.size() == static_cast<size_t>(L) * fact);
            for (const auto& a : members) {
                CHECK(family.count(a.inverse().images()) == 1);
                for (const auto& b : members)
                    CHECK(family.count(compose(a, b).images()) == 1);
            }
        }
}

TEST_CASE("order formula vs direct order") {
    auto lam2 = Permutation({1, 0});
    auto c1 = check_order_formula(4, 1, lam2);
    CHECK(c1.formula == 4);
    CHECK(c1.direct == 4);
    CHECK(c1.agree);

    auto c2 = check_order_formula(6, 2, lam2);
    CHECK(c2.formula == 6);
    CHECK(c2.direct == 6);
    CHECK(c2.agree);

    // the known disagreement: formula 18, direct 6; direct is ground truth
    auto c3 = check_order_formula(9, 3, Permutation::cyclic_shift(6, 1));
    CHECK(c3.formula == 18);
    CHECK(c3.direct == 6);
    CHECK_FALSE(c3.agree);
}

TEST_CASE("cyclic order formula evaluates verbatim") {
    // tau_L^k (x) tau_J^l direct order vs the closed-form expression; check agreement
    // and the general direct value lcm(L/gcd(k,L), J/gcd(l,J))
    for (int L = 2; L <= 8; ++L)
        for (int J = 2; J <= 6; ++J)
            for (int k = 0; k < L; ++k)
                for (int l = 0; l < J; ++l) {
                    auto g = kronecker(Permutation::cyclic_shift(L, k),
                                       Permutation::cyclic_shift(J, l));
                    unsigned long long direct = perm_order(g);
                    unsigned long long expect =
                        std::lcm<unsigned long long>(L / std::gcd(k, L), J / std::gcd(l, J));
                    CHECK(direct == expect);
                    (void)cyclic_kron_order_formula(L, k, J, l);
                }
}

TEST_CASE("net permutation and lifted cycle lengths") {
    auto a = Permutation::cyclic_shift(4, 1);
    auto b = Permutation({1, 0, 3, 2});
    // reverse orientation contributes the inverse
    auto net = net_permutation({{a, true}, {b, true}, {a, false}});
    CHECK(net == compose(a.inverse(), compose(b, a)));

    CHECK(lifted_cycle_lengths(6, Permutation::identity(4)) ==
          std::vector<long long>{6, 6, 6, 6});
    CHECK(lifted_cycle_lengths(6, Permutation({0, 2, 1})) == std::vector<long long>{6, 12});
    CHECK(lifted_cycle_lengths(6, Permutation::cyclic_shift(3, 1)) ==
          std::vector<long long>{18});
}

TEST_CASE("cycle lifting matches explicit tracing (k <= 8, J <= 6)") {
    // lift a k-cycle edge by edge and trace the components
    SplitMix64 rng(99);
    for (int k = 3; k <= 8; ++k)
        for (int J = 2; J <= 6; ++J)
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<Permutation> labels;
                std::vector<OrientedLabel> path;
                for (int e = 0; e < k; ++e) {
                    labels.push_back(random_perm(J, rng));
                    path.push_back({labels.back(), true});
                }
                Permutation net = net_permutation(path);

                // explicit lift: vertex (v,u), edge v->v+1 with label pi_v
                std::vector<char> seen(static_cast<size_t>(k) * J, 0);
                std::multiset<long long> traced;
                for (int u0 = 0; u0 < J; ++u0) {
                    if (seen[u0])
                        continue;
                    long long len = 0;
                    int v = 0, u = u0;
                    do {
                        seen[static_cast<size_t>(v) * J + u] = 1;
                        u = labels[v](u);
                        v = (v + 1) % k;
                        ++len;
                    } while (!(v == 0 && seen[static_cast<size_t>(v) * J + u]));
                    traced.insert(len);
                }
                auto expect = lifted_cycle_lengths(k, net);
                std::multiset<long long> expect_set(expect.begin(), expect.end());
                CHECK(traced == expect_set);
                long long sum = 0;
                for (long long x : expect)
                    sum += x;
                CHECK(sum == static_cast<long long>(k) * J);
            }
}
