// Acceptance suite: every criterion below runs exactly and prints one
// PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "symca/census.hpp"
#include "symca/fractal.hpp"
#include "symca/grid.hpp"
#include "symca/quadrature.hpp"
#include "symca/rational.hpp"
#include "symca/rules.hpp"

using namespace symca;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool ok, const std::string& detail = "") {
    std::printf("%s  %d  %s%s%s\n", ok ? "PASS" : "FAIL", id, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

struct Check {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

BigRat rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

BigRat abs_rat(const BigRat& q) { return q < 0 ? BigRat(-q) : q; }

void criterion_1_rule_resolution() {
    Check c;
    const auto search = [](BigInt (*closed)(std::uint64_t)) {
        return rules::search_rules([closed](int t) { return closed(std::uint64_t(t)); }, 32);
    };
    const auto ma = search(&census::num_a);
    const auto mb = search(&census::num_b);
    const auto ms = search(&census::num_s0);
    c.expect(!ma.empty(), "no table matches num_a at horizon 32");
    c.expect(!mb.empty(), "no table matches num_b at horizon 32");
    c.expect(!ms.empty(), "no table matches num_s0 at horizon 32");
    c.expect(!ma.empty() && ma.front().outputs == rules::pinned("ta").outputs,
             "stored pinned ta is not the lexicographic minimum");
    c.expect(!mb.empty() && mb.front().outputs == rules::pinned("tb").outputs,
             "stored pinned tb is not the lexicographic minimum");
    c.expect(!ms.empty() && ms.front().outputs == rules::pinned("ts0").outputs,
             "stored pinned ts0 is not the lexicographic minimum");

    const census::CensusSeries a =
        census::census_sim(rules::expand(rules::pinned("ta"), 0), 4, "ta");
    const census::CensusSeries s =
        census::census_sim(rules::expand(rules::pinned("ts0"), 0), 4, "ts0");
    c.expect(a.cum[4] == 26, "pinned ta cum(4) != 26");
    c.expect(s.cum[4] == 25, "pinned ts0 cum(4) != 25");
    c.expect(a.cum[4] != s.cum[4], "pinned ta and ts0 orbits coincide at t = 4");
    report(1, "rule resolution by exhaustive search (4096 tables, horizon 32)", c.ok, c.detail);
}

void criterion_2_census_equivalence() {
    Check c;
    struct Row {
        const char* name;
        BigInt (*closed)(std::uint64_t);
    };
    const Row rows[] = {
        {"ta", &census::num_a}, {"tb", &census::num_b}, {"ts0", &census::num_s0}};
    for (const Row& row : rows) {
        const census::CensusSeries s =
            census::census_sim(rules::expand(rules::pinned(row.name), 0), 256, row.name);
        BigInt cum = 0;
        for (std::uint64_t t = 0; t <= 256; ++t) {
            cum += row.closed(t);
            c.expect(s.num[t] == row.closed(t),
                     std::string(row.name) + " num mismatch at t=" + std::to_string(t));
            c.expect(s.cum[t] == cum,
                     std::string(row.name) + " cum mismatch at t=" + std::to_string(t));
        }
    }
    const long na[] = {1, 4, 5, 16}, nb[] = {1, 5, 9, 21};
    for (int t = 1; t <= 4; ++t) {
        c.expect(census::num_a(std::uint64_t(t)) == na[t - 1], "num_a spot value");
        c.expect(census::num_b(std::uint64_t(t)) == nb[t - 1], "num_b spot value");
    }
    c.expect(census::cum_a(2) == 26, "cum_a(4) != 26");
    c.expect(census::cum_b(2) == 36, "cum_b(4) != 36");
    c.expect(census::cum_s0(2) == 25, "cum_s0(4) != 25");
    report(2, "simulated census equals the closed forms for t <= 256", c.ok, c.detail);
}

void criterion_3_function_values() {
    Check c;
    using fractal::Dyadic;
    const std::pair<Dyadic, BigRat> f_table[] = {
        {Dyadic(0, 0), BigRat(0)}, {Dyadic(1, 0), BigRat(1)},   {Dyadic(1, 1), rat(1, 4)},
        {Dyadic(1, 2), rat(1, 16)}, {Dyadic(3, 2), rat(5, 16)},
    };
    for (const auto& [x, want] : f_table) c.expect(fractal::F_eval(x) == want, "F value table");
    const std::pair<Dyadic, BigRat> g_table[] = {
        {Dyadic(0, 0), BigRat(0)}, {Dyadic(1, 0), BigRat(1)},   {Dyadic(1, 1), rat(1, 4)},
        {Dyadic(1, 2), rat(1, 16)}, {Dyadic(3, 2), rat(11, 32)},
    };
    for (const auto& [x, want] : g_table) c.expect(fractal::G_eval(x) == want, "G value table");
    c.expect(fractal::H_eval(2, Dyadic(1, 1)) == rat(1, 4), "H_2(1/2) != 1/4");
    c.expect(fractal::salem_eval(rat(1, 5), Dyadic(1, 1)) == rat(1, 5), "L_{1/5}(1/2) != 1/5");
    c.expect(fractal::salem_eval(rat(1, 5), Dyadic(3, 2)) == rat(9, 25), "L_{1/5}(3/4) != 9/25");

    for (unsigned k = 0; k <= 10 && c.ok; ++k) {
        for (std::uint64_t t = 0; t <= (std::uint64_t(1) << k); ++t) {
            c.expect(fractal::F_eval(Dyadic(t, k)) * BigRat(pow4(k)) == BigRat(census::num_a(t)),
                     "F(t/2^k) 4^k != num_a(t) at k=" + std::to_string(k) +
                         ", t=" + std::to_string(t));
            c.expect(make_rat(census::cum_s0_at(t), int_pow(5, k)) ==
                         fractal::salem_eval(rat(1, 5), Dyadic(t, k)),
                     "cum_s0(t)/5^k != L_{1/5}(t/2^k) at k=" + std::to_string(k) +
                         ", t=" + std::to_string(t));
        }
    }
    report(3, "exact function values and the census/Salem bridges (k <= 10)", c.ok, c.detail);
}

void criterion_4_integrals() {
    Check c;
    for (unsigned k = 1; k <= 20; ++k) {
        const quad::RiemannReport r = quad::riemann_sum_F(k);
        c.expect(r.sum == make_rat(census::cum_a(k), int_pow(8, k)),
                 "riemann_sum_F(k) != cum_a(2^k)/8^k at k=" + std::to_string(k));
        const BigRat closed = (8 * make_rat(int_pow(5, k), int_pow(8, k)) +
                               make_rat(BigInt(9), pow2(k)) - make_rat(BigInt(1), pow4(k))) /
                              18;
        c.expect(abs_rat(r.sum - rat(1, 9)) == closed,
                 "error formula mismatch at k=" + std::to_string(k));
    }
    const quad::RiemannReport g12 = quad::riemann_sum_G(12);
    c.expect(g12.error < rat(1, 100), "riemann_sum_G(12) not within 1/100 of 1/6");
    BigRat prev = quad::riemann_sum_G(2).error;
    for (unsigned k = 3; k <= 12; ++k) {
        const BigRat err = quad::riemann_sum_G(k).error;
        c.expect(err < prev, "G errors not strictly decreasing at k=" + std::to_string(k));
        prev = err;
    }
    c.expect(quad::integral_f_piece(1) == rat(1, 24), "integral of f_1 != 1/24");
    BigRat sum = 0;
    for (unsigned i = 1; i <= 12; ++i) {
        if (i > 1)
            c.expect(quad::integral_f_piece(i) / quad::integral_f_piece(i - 1) == rat(5, 8),
                     "piece ratio != 5/8 at i=" + std::to_string(i));
        sum += quad::integral_f_piece(i);
    }
    c.expect(sum < rat(1, 9), "partial piece sum does not stay below 1/9");
    c.expect(rat(1, 9) - sum < make_rat(int_pow(5, 12), int_pow(8, 12)),
             "partial piece sum further than (5/8)^12 from 1/9");
    report(4, "integral reproduction: exact errors, G convergence, piece ratios", c.ok, c.detail);
}

void criterion_5_gfh_identity() {
    Check c;
    for (std::uint64_t t = 0; t <= (std::uint64_t(1) << 10); ++t) {
        const fractal::Dyadic d(t, 10);
        c.expect(fractal::gfh_identity_residual(d) == 0,
                 "corrected identity residual nonzero at t=" + std::to_string(t) + "/2^10");
    }
    const auto literal = fractal::gfh_published_residual(fractal::Dyadic(1, 1));
    c.expect(literal.has_value() && *literal != 0,
             "published-form residual unexpectedly vanished at 1/2");
    std::string detail = c.detail;
    if (c.ok && literal)
        detail = "published form leaves residual " + rat_str(*literal) + " at x = 1/2 (erratum)";
    report(5, "corrected G-F-H identity exact on dyadics of level <= 10", c.ok, detail);
}

void criterion_6_discontinuity_and_bounds() {
    Check c;
    for (unsigned m = 1; m <= 20; ++m) {
        const fractal::Dyadic x((std::uint64_t(1) << (m - 1)) - 1, m);
        c.expect(fractal::F_eval(x) == rat(1, 12) - make_rat(BigInt(1), 3 * pow4(m)),
                 "left-limit family fails at m=" + std::to_string(m));
    }
    const BigRat four_ninths = rat(4, 9), two_thirds = rat(2, 3);
    for (std::uint64_t t = 0; t <= (std::uint64_t(1) << 12); ++t) {
        const fractal::Dyadic d(t, 12);
        const BigRat f = fractal::F_eval(d), g = fractal::G_eval(d);
        c.expect(f >= 0 && f <= 1 && g >= 0 && g <= 1,
                 "F or G leaves [0,1] at t=" + std::to_string(t) + "/2^12");
        if (t != 0 && t != (std::uint64_t(1) << 12)) {
            c.expect(f < four_ninths, "F >= 4/9 at t=" + std::to_string(t) + "/2^12");
            c.expect(g < two_thirds, "G >= 2/3 at t=" + std::to_string(t) + "/2^12");
        }
    }
    report(6, "discontinuity gap family and interior bounds (level <= 12)", c.ok, c.detail);
}

void criterion_7_tail_bounds() {
    Check c;
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> bits(40);
        for (auto& b : bits) b = int(rng() & 1);
        const fractal::BitSeq x = fractal::BitSeq::prefix(bits);
        const fractal::TruncResult a = fractal::F_trunc(x, 10);
        const fractal::TruncResult b = fractal::F_trunc(x, 20);
        const fractal::TruncResult d = fractal::F_trunc(x, 40);
        c.expect(a.partial <= b.partial && b.partial <= d.partial,
                 "partial sums not monotone in N (trial " + std::to_string(trial) + ")");
        c.expect(b.partial <= a.partial + a.tail_bound && d.partial <= b.partial + b.tail_bound,
                 "tail bound violated (trial " + std::to_string(trial) + ")");
    }
    std::vector<fractal::BitSeq> probes;
    for (long den : {3L, 5L, 7L}) probes.push_back(fractal::BitSeq::canonical(rat(1, den)));
    {
        BigInt two_shifted = BigInt(2) << 80;
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), two_shifted.get_mpz_t());
        root -= pow2(40);  // floor((sqrt(2)-1) * 2^40)
        std::vector<int> bits(40);
        for (unsigned i = 0; i < 40; ++i)
            bits[i] = mpz_tstbit(root.get_mpz_t(), 39 - i) ? 1 : 0;
        probes.push_back(fractal::BitSeq::prefix(bits));
    }
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const fractal::TruncResult f = fractal::F_trunc(probes[p], 40);
        const fractal::TruncResult g = fractal::G_trunc(probes[p], 40);
        c.expect(abs_rat(g.partial - rat(3, 2) * f.partial) <=
                     rat(3, 2) * f.tail_bound + g.tail_bound,
                 "G vs (3/2)F outside combined tail bounds at probe " + std::to_string(p));
    }
    report(7, "tail-bound soundness on 1000 random 40-bit prefixes", c.ok, c.detail);
}

}  // namespace

int main() {
    criterion_1_rule_resolution();
    criterion_2_census_equivalence();
    criterion_3_function_values();
    criterion_4_integrals();
    criterion_5_gfh_identity();
    criterion_6_discontinuity_and_bounds();
    criterion_7_tail_bounds();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
