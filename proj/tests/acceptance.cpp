// Acceptance suite: one line per criterion, [PASS]/[FAIL], exit code equals
// the number of failed criteria. Each criterion prints its wall time.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "sclift/counting.hpp"
#include "sclift/coupler.hpp"
#include "sclift/optimize.hpp"
#include "sclift/window.hpp"

using namespace sclift;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, bool pass, const std::string& what, double secs) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), secs);
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

void note(const std::string& s) {
    std::printf("       %s\n", s.c_str());
    std::fflush(stdout);
}

std::vector<CuttingVector> all_nondecreasing_xi(int p) {
    std::vector<CuttingVector> out;
    for (int a = 0; a <= p; ++a)
        for (int b = a; b <= p; ++b)
            for (int c = b; c <= p; ++c)
                out.push_back(CuttingVector{{a, b, c}});
    return out;
}

BmMatrix random_bm(int p, int m, SplitMix64& rng) {
    BmMatrix bm;
    bm.entries.assign(3, std::vector<int>(p, 0));
    for (auto& row : bm.entries)
        for (int& v : row)
            v = static_cast<int>(rng.below(m + 1));
    bm.entries[static_cast<size_t>(rng.below(3))][static_cast<size_t>(rng.below(p))] = m;
    return bm;
}

long long line_count_of(const CuttingVector& xi, int p, int L) {
    return count_abs_cutting_vector(xi, p, L).total;
}

// ---- criterion 1 ----
void criterion1() {
    Timer t;
    BmMatrix zeros;
    zeros.entries.assign(3, std::vector<int>(17, 0));
    ScCode unc = ScCode::from_bm(zeros, 17, 1);
    long long brute = count_six_cycles_block(unc.terminated_grid());
    long long line = count_abs_general(unc).total;
    bool pass = brute == 4624 && line == 4624 && t.seconds() < 1.0;
    report(1, pass,
           "uncoupled H(3,17): brute=" + std::to_string(brute) +
               " line=" + std::to_string(line) + " expected 4624",
           t.seconds());
}

// ---- criterion 2 ----
void criterion2() {
    Timer t;
    long long checked = 0, mismatches = 0;
    for (int p : {5, 7, 11}) {
        for (const auto& xi : all_nondecreasing_xi(p)) {
            for (int L = 2; L <= 5; ++L) {
                ScCode sc = ScCode::from_cutting_vector(xi, p, L);
                long long line = line_count_of(xi, p, L);
                long long block = count_six_cycles_block(sc.terminated_grid());
                long long bits = count_six_cycles_bitlevel(sc.expand_terminated(), 2);
                ++checked;
                if (line != bits || block != bits)
                    ++mismatches;
            }
        }
    }
    SplitMix64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        int p = i % 2 ? 5 : 7;
        int m = 1 + static_cast<int>(rng.below(2));
        int L = m + 1 + static_cast<int>(rng.below(5 - m));
        ScCode sc = ScCode::from_bm(random_bm(p, m, rng), p, L);
        long long line = count_abs_general(sc).total;
        long long block = count_six_cycles_block(sc.terminated_grid());
        long long bits = count_six_cycles_bitlevel(sc.expand_terminated(), 2);
        ++checked;
        if (line != bits || block != bits)
            ++mismatches;
    }
    bool pass = mismatches == 0 && t.seconds() < 600.0;
    report(2, pass,
           "oracle equivalence on " + std::to_string(checked) +
               " instances, mismatches=" + std::to_string(mismatches),
           t.seconds());
}

// ---- criterion 3 ----
void criterion3() {
    Timer t;
    const int p = 17;
    const std::vector<long long> table = {19108, 39508, 59908, 80308};
    auto xis = all_nondecreasing_xi(p);

    // exhaustive minimum at L=10 (ties broken lexicographically)
    CuttingVector best{{0, 0, 0}};
    long long best_val = -1;
    for (const auto& xi : xis) {
        long long v = line_count_of(xi, p, 10);
        if (best_val < 0 || v < best_val) {
            best_val = v;
            best = xi;
        }
    }
    // the uniform diagonal cut attains the reference totals
    CuttingVector table_xi{{4, 8, 12}};
    bool table_ok = true;
    std::vector<int> Ls = {10, 20, 30, 40};
    for (size_t i = 0; i < Ls.size(); ++i)
        table_ok &= line_count_of(table_xi, p, Ls[i]) == table[i];
    long long l50 = line_count_of(table_xi, p, 50);
    long long l50_brute = count_six_cycles_block(
        ScCode::from_cutting_vector(table_xi, p, 50).terminated_grid());
    bool min_matches_table = true;
    for (size_t i = 0; i < Ls.size(); ++i) {
        long long mn = -1;
        for (const auto& xi : xis) {
            long long v = line_count_of(xi, p, Ls[i]);
            if (mn < 0 || v < mn)
                mn = v;
        }
        min_matches_table &= mn == table[i];
    }
    long long best_brute =
        count_six_cycles_block(ScCode::from_cutting_vector(best, p, 10).terminated_grid());

    bool l50_ok = (l50 == 100708 || l50 == 100710) && l50 == l50_brute;
    bool pass = min_matches_table && table_ok && l50_ok && t.seconds() < 60.0;
    std::ostringstream what;
    what << "reference totals (19108..80308): min-over-xi matches them: " << (min_matches_table ? "yes" : "NO")
         << "; xi=(4,8,12) reproduces 19108/39508/59908/80308: " << (table_ok ? "yes" : "NO")
         << "; L=50 -> " << l50;
    report(3, pass, what.str(), t.seconds());
    note("exhaustive minimum at L=10 is " + std::to_string(best_val) + " at xi=(" +
         std::to_string(best.xi[0]) + "," + std::to_string(best.xi[1]) + "," +
         std::to_string(best.xi[2]) + "), brute-force confirmed " +
         std::to_string(best_brute) +
         "; the published optimal-cut premise holds only within the uniform cut family");
    note("L=50 line count " + std::to_string(l50) +
         " (linear extrapolation 100708; reference lists 100710); brute force arbiter agrees with " +
         std::to_string(l50_brute));
}

// ---- criterion 4 ----
void criterion4() {
    Timer t;
    CuttingVector xi{{4, 8, 12}};
    bool linear = true;
    std::vector<long long> totals;
    for (int L = 2; L <= 8; ++L)
        totals.push_back(line_count_of(xi, 17, L));
    for (size_t i = 2; i < totals.size(); ++i)
        linear &= totals[i] - totals[i - 1] == totals[1] - totals[0];
    auto rep = count_abs_cutting_vector(xi, 17, 10);
    bool mus = rep.mu.size() == 2 && rep.mu[0] == 748 && rep.mu[1] == 1292;
    bool slope = totals[1] - totals[0] == rep.mu[0] + rep.mu[1];
    bool pass = linear && mus && slope;
    report(4, pass,
           "linearity in L with (mu1,mu2)=(" + std::to_string(rep.mu[0]) + "," +
               std::to_string(rep.mu[1]) + ") expected (748,1292)",
           t.seconds());
}

// ---- criterion 5 ----
void criterion5() {
    Timer t;
    Objective obj;
    obj.p = 17;
    obj.L = 10;
    SearchConfig cfg;
    cfg.beam = 64;
    cfg.backtrack = 2;
    cfg.budget = 1000000;
    cfg.seed = 1;
    auto r1 = optimize_bm(17, 1, 10, obj, cfg);
    auto r2 = optimize_bm(17, 2, 10, obj, cfg);
    bool pass = r1.report.total < 19108 && r2.report.total <= 646 && t.seconds() < 1800.0;
    report(5, pass,
           "optimizer: m=1 -> " + std::to_string(r1.report.total) + " (< 19108), m=2 -> " +
               std::to_string(r2.report.total) + " (<= 646)",
           t.seconds());
    note(std::string("stretch targets: m=1 ") +
         (r1.report.total <= 5644 ? "reached" : "missed") + " 5644, m=2 " +
         (r2.report.total <= 442 ? "reached" : "missed") + " 442");
}

// ---- criterion 6 ----
void criterion6() {
    Timer t;
    const int p = 5, L = 3;
    long long best = -1;
    ScCode sc;
    sc.p = p;
    sc.L = L;
    sc.m = 1;
    for (int i = 0; i < 3; ++i)
        sc.B[i].assign(p, 0);
    for (uint32_t bits = 1; bits < (1u << 15); ++bits) {
        for (int idx = 0; idx < 15; ++idx)
            sc.B[idx % 3][idx / 3] = (bits >> idx) & 1;
        long long v = count_total(sc);
        if (best < 0 || v < best)
            best = v;
    }
    Objective obj;
    obj.p = p;
    obj.L = L;
    SearchConfig cfg;
    cfg.beam = 40000;
    cfg.backtrack = 1;
    cfg.budget = 150000;
    auto r = optimize_bm(p, 1, L, obj, cfg);
    bool pass = r.report.total == best && t.seconds() < 300.0;
    report(6, pass,
           "toy exhaustive optimum " + std::to_string(best) + ", optimizer found " +
               std::to_string(r.report.total),
           t.seconds());
}

// ---- criterion 7 ----
void criterion7() {
    Timer t;
    bool full_ok = true, disjoint_ok = true, interior_ok = true;
    SplitMix64 rng(99);
    for (int p : {5, 7}) {
        for (int m : {1, 2}) {
            ScCode sc = ScCode::from_bm(random_bm(p, m, rng), p, 9);
            // (a) full-length window
            auto full = count_abs_windowed(sc, WindowSpec{9, m, 0});
            full_ok &= full.total == full.standard_total && full.r2_num == full.r2_den;
            // (b) disjointness across sliding positions, via the oracle
            std::vector<int> sizes = m == 1 ? std::vector<int>{2, 3} : std::vector<int>{4, 5};
            for (int S : sizes) {
                auto positions = window_positions(sc, WindowSpec{S, m, 0});
                auto grid = sc.terminated_grid();
                auto fams = enumerate_six_cycle_families(grid);
                std::set<std::array<int, 6>> seen;
                long long dup = 0, sum = 0;
                for (const auto& pos : positions) {
                    for (const auto& f : fams) {
                        if (f.q1 < pos.row_lo || f.q3 > pos.row_hi)
                            continue;
                        bool cols_ok = true;
                        for (int j : {f.j1, f.j2, f.j3}) {
                            int tt = j / sc.p;
                            cols_ok &= tt >= pos.pos_lo && tt <= pos.pos_hi;
                        }
                        if (!cols_ok)
                            continue;
                        ++sum;
                        if (!seen.insert({f.q1, f.q2, f.q3, f.j1, f.j2, f.j3}).second)
                            ++dup;
                    }
                }
                disjoint_ok &= dup == 0;
                // line counts agree with the oracle restriction
                auto rep = count_abs_windowed(sc, WindowSpec{S, m, 0});
                disjoint_ok &= rep.total == sum * sc.p;
                // (c) interior equality
                for (size_t i = 1; i + 1 < rep.per_position.size(); ++i)
                    interior_ok &= rep.per_position[i] == rep.per_position[1];
            }
        }
    }
    bool pass = full_ok && disjoint_ok && interior_ok;
    report(7, pass,
           std::string("windows: full-length r2=1 ") + (full_ok ? "ok" : "VIOLATED") +
               ", overlap disjointness " + (disjoint_ok ? "ok" : "VIOLATED") +
               ", interior equality " + (interior_ok ? "ok" : "VIOLATED"),
           t.seconds());

    // reference windowed totals (reported, not required): per-sliding-position counts
    // for Code 1 at p=17 are L-invariant at interior positions
    ScCode code1 = ScCode::from_cutting_vector(CuttingVector{{4, 8, 12}}, 17, 15);
    std::vector<long long> got;
    for (int S : {2, 3, 4, 5})
        got.push_back(count_abs_windowed(code1, WindowSpec{S, 1, 0}).per_position[1]);
    std::ostringstream ss;
    ss << "windowed reference totals (per interior sliding position, uniform cut): got ";
    for (long long v : got)
        ss << v << " ";
    ss << "vs reference 1700 3740 5780 7820"
       << (got == std::vector<long long>{1700, 3740, 5780, 7820}
               ? " -- reproduced; the reference totals are per-position counts"
               : " -- not reproduced");
    note(ss.str());
}

// ---- criterion 8 ----
void criterion8() {
    Timer t;
    // subgroup closure for L,J <= 4
    bool closure = true;
    for (int L = 2; L <= 4; ++L)
        for (int J = 1; J <= 4; ++J) {
            std::vector<Permutation> members;
            std::set<std::vector<int>> images;
            std::vector<int> base(J);
            std::iota(base.begin(), base.end(), 0);
            std::vector<int> perm = base;
            do {
                for (int k = 0; k < L; ++k) {
                    auto g = realize_label(LiftLabel(k, Permutation(perm)), L);
                    members.push_back(g);
                    images.insert(g.images());
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            for (const auto& a : members) {
                closure &= images.count(a.inverse().images()) == 1;
                for (const auto& b : members)
                    closure &= images.count(compose(a, b).images()) == 1;
            }
        }

    // cycle lifting verified by explicit tracing for k <= 8, J <= 6
    bool lifting = true;
    SplitMix64 rng(8);
    for (int k = 3; k <= 8; ++k)
        for (int J = 2; J <= 6; ++J) {
            std::vector<Permutation> labels;
            for (int e = 0; e < k; ++e) {
                std::vector<int> im(J);
                std::iota(im.begin(), im.end(), 0);
                for (int i = J - 1; i > 0; --i)
                    std::swap(im[i], im[static_cast<size_t>(rng.below(i + 1))]);
                labels.push_back(Permutation(im));
            }
            std::vector<OrientedLabel> path;
            for (const auto& l : labels)
                path.push_back({l, true});
            auto expect = lifted_cycle_lengths(k, net_permutation(path));
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
            lifting &= traced == std::multiset<long long>(expect.begin(), expect.end());
        }

    // quasi-cyclicity of cyclic-lambda lifts, J in {2,3,4}
    bool qc = true;
    ABBase ab(3, 5);
    BmMatrix bm = random_bm(5, 1, rng);
    for (int J : {2, 3, 4})
        for (int l = 0; l < J; ++l) {
            auto assn = assignment_from_bm(ab, bm, LambdaPolicy::cyclic(l), J);
            auto lifted = lift_tailbiting(ab.expand(), assn, 4);
            qc &= is_quasi_cyclic(lifted.expand(), J);
            qc &= is_quasi_cyclic(reorder(lifted, 4, J).expand(), J);
        }

    // order formula sweep, L <= 12
    long long agreements = 0;
    std::vector<std::string> disagreements;
    bool direct_always_lcm = true;
    for (int L = 2; L <= 12; ++L)
        for (int k = 0; k < L; ++k)
            for (int J = 1; J <= 12; ++J) {
                auto lambda = Permutation::cyclic_shift(J, 1); // order J
                auto chk = check_order_formula(L, k, lambda);
                unsigned long long lcm_direct =
                    std::lcm<unsigned long long>(L / std::gcd(k, L), J);
                direct_always_lcm &= chk.direct == lcm_direct;
                if (chk.agree) {
                    ++agreements;
                } else {
                    std::ostringstream d;
                    d << "(L=" << L << ",k=" << k << ",o=" << J << "): formula "
                      << chk.formula << " direct " << chk.direct;
                    disagreements.push_back(d.str());
                }
            }
    bool found_936 = false;
    for (const auto& d : disagreements)
        found_936 |= d.find("(L=9,k=3,o=6)") != std::string::npos;

    bool pass = closure && lifting && qc && direct_always_lcm && found_936;
    report(8, pass,
           "lift algebra: closure " + std::string(closure ? "ok" : "VIOLATED") +
               ", cycle lifting " + (lifting ? "ok" : "VIOLATED") + ", quasi-cyclic " +
               (qc ? "ok" : "VIOLATED") + ", order formula agreements " +
               std::to_string(agreements) + ", discrepancies " +
               std::to_string(disagreements.size()),
           t.seconds());
    note("order-formula discrepancies are logged; direct computation is ground truth; "
         "(9,3,6) found: " +
         std::string(found_936 ? "yes" : "no") + "; sample: " +
         (disagreements.empty() ? "none" : disagreements.front()));
}

// ---- criterion 9 ----
void criterion9() {
    Timer t;
    SplitMix64 rng(909);
    ABBase ab5(3, 5), ab7(3, 7);
    bool reorder_ok = true, strips_ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        int p = trial % 2 ? 5 : 7;
        const ABBase& ab = p == 5 ? ab5 : ab7;
        int m = 1 + static_cast<int>(rng.below(2));
        int L = m + 2 + static_cast<int>(rng.below(3));
        BmMatrix bm = random_bm(p, m, rng);
        ScCode sc = ScCode::from_bm(bm, p, L);

        auto assn = assignment_from_bm(ab, bm, LambdaPolicy::identity(), 1);
        auto lifted = lift_tailbiting(ab.expand(), assn, L);
        long long before = count_six_cycles_block(CirculantGrid::from_block_matrix(lifted));
        long long after = count_six_cycles_block(sc.tailbiting_grid());
        reorder_ok &= before == after;

        auto in_strip = [&](const SixCycleFamily& f) {
            for (int j : {f.j1, f.j2, f.j3})
                if (j / p < m || j / p > L - 1)
                    return false;
            return true;
        };
        long long tb = 0, term = 0;
        for (const auto& f : enumerate_six_cycle_families(sc.tailbiting_grid()))
            if (in_strip(f))
                ++tb;
        for (const auto& f : enumerate_six_cycle_families(sc.terminated_grid()))
            if (in_strip(f))
                ++term;
        strips_ok &= tb == term;
    }
    bool pass = reorder_ok && strips_ok;
    report(9, pass,
           std::string("structural invariance: reorder ") + (reorder_ok ? "ok" : "VIOLATED") +
               ", tailbiting strips vs terminated strips " + (strips_ok ? "ok" : "VIOLATED"),
           t.seconds());
}

} // namespace

int main() {
    std::printf("sclift acceptance suite\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
