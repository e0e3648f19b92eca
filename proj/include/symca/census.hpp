#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "symca/grid.hpp"
#include "symca/rational.hpp"

namespace symca::census {

// Binary digits of t, least significant first, with t_i = 0 for i > top.
struct BinaryDigits {
    std::vector<int> bits;
    unsigned top = 0;  // index of the highest set bit; only meaningful for t > 0

    static BinaryDigits of(std::uint64_t t);
    int at(std::uint64_t i) const { return i < bits.size() ? bits[i] : 0; }
};

// --- closed forms ---------------------------------------------------------
//
// num(t) counts live cells of the spatial pattern at step t-1; cum(t) is the
// running sum. num(0) = cum(0) = 0 by convention.

// Orbit of the pinned rule ta. Recurrence on the top bit k of t:
//   num_a(t) = 4^{t_k} num_a(t - t_k 2^k) + t_k (2^{k+1} - t)^2.
BigInt num_a(std::uint64_t t);
// The same value as an explicit sum over digits; dual implementation kept
// deliberately independent of the recurrence.
BigInt num_a_explicit(std::uint64_t t);
// cum_a(2^k) = (2*8^k + 8*5^k + 9*4^k - 2^k) / 18, always an exact integer.
BigInt cum_a(unsigned k);
// Pyramid recursion pair (u_k, v_k): u_0 = 1, v_{k+1} = (2*8^k - 3*4^k + 2^k)/6,
// u_{k+1} = 5 u_k + v_{k+1}; u_k equals cum_a(2^k).
std::pair<BigInt, BigInt> pyramid_counts_a(unsigned k);

// Central-square census correction for the tb orbit, defined for
// 2^k <= t < 2^{k+1}:
//   A(t) = 2 (2^{k+1}-t+1)(2^{k+1}-t) + 1 - (2/3)(2^k+1)(2^k+2) prod_{j<k}(1-t_j).
// Computed in rationals and checked integral. Throws std::domain_error when t
// is outside [2^k, 2^{k+1}).
BigInt A_b(std::uint64_t t, unsigned k);
// num_b(t) = 4^{t_k} num_b(t - t_k 2^k) + t_k A(t).
BigInt num_b(std::uint64_t t);
BigInt num_b_explicit(std::uint64_t t);
// cum_b(2^k) = (8*5^k + 2*8^k - 2^k) / 9, exact.
BigInt cum_b(unsigned k);

// Orbit of the pinned rule ts0: num_s0(t) = 4^{popcount(t-1)} for t >= 1.
BigInt num_s0(std::uint64_t t);
// cum_s0 at an arbitrary argument: sum_{m < t} 4^{popcount(m)}.
BigInt cum_s0_at(std::uint64_t t);
// cum_s0(2^k) = 5^k.
BigInt cum_s0(unsigned k);

// Prefix tables of num values in machine words for fast grid sums. Values
// must stay below 2^63 (t_max <= 2^20 is comfortably safe for both).
std::vector<std::uint64_t> num_a_table(std::uint64_t t_max);
std::vector<std::uint64_t> num_b_table(std::uint64_t t_max);

// --- simulation ------------------------------------------------------------

struct CensusSeries {
    std::string rule_name;
    std::vector<BigInt> num;  // indexed 0..t_max, num[0] = 0
    std::vector<BigInt> cum;
};

// num[t] = population(evolve(rule, seed, t-1)) for 1 <= t <= t_max, with the
// cumulative sums alongside.
CensusSeries census_sim(const rules::FullRuleTable& rule, int t_max, std::string rule_name = "");

// CSV export: t, num_sim, num_closed, cum_sim, cum_closed, match. Returns
// true when every row matches.
bool write_census_csv(std::ostream& os, const CensusSeries& sim,
                      const std::function<BigInt(std::uint64_t)>& num_closed);

}  // namespace symca::census
