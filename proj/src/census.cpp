#include "symca/census.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace symca::census {

namespace {

BigInt bi(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

unsigned top_bit(std::uint64_t t) { return 63u - unsigned(std::countl_zero(t)); }

}  // namespace

BinaryDigits BinaryDigits::of(std::uint64_t t) {
    BinaryDigits d;
    while (t) {
        d.bits.push_back(int(t & 1));
        t >>= 1;
    }
    if (!d.bits.empty()) d.top = unsigned(d.bits.size()) - 1;
    return d;
}

BigInt num_a(std::uint64_t t) {
    if (t == 0) return 0;
    if (t == 1) return 1;
    unsigned k = top_bit(t);
    BigInt side = pow2(k + 1) - bi(t);
    return 4 * num_a(t - (std::uint64_t(1) << k)) + side * side;
}

BigInt num_a_explicit(std::uint64_t t) {
    if (t == 0) return 0;
    const BinaryDigits d = BinaryDigits::of(t);
    const unsigned k = d.top;
    BigInt total = 0;
    for (unsigned i = 0; i <= k; ++i) {
        if (d.at(k - i) == 0) continue;
        unsigned ones = 0;
        BigInt shifted = 0;  // sum_{j<=i} t_{k-j+1} 2^{k-j+1}
        for (unsigned j = 0; j <= i; ++j) {
            if (d.at(std::uint64_t(k) - j + 1)) {
                ++ones;
                shifted += pow2(k - j + 1);
            }
        }
        BigInt base = pow2(k - i + 1) - bi(t) + shifted;
        total += pow4(ones) * base * base;
    }
    return total;
}

BigInt cum_a(unsigned k) {
    return exact_div(2 * int_pow(8, k) + 8 * int_pow(5, k) + 9 * pow4(k) - pow2(k), 18);
}

std::pair<BigInt, BigInt> pyramid_counts_a(unsigned k) {
    BigInt u = 1, v = 0;
    for (unsigned m = 1; m <= k; ++m) {
        v = exact_div(2 * int_pow(8, m - 1) - 3 * pow4(m - 1) + pow2(m - 1), 6);
        u = 5 * u + v;
    }
    return {u, v};
}

BigInt A_b(std::uint64_t t, unsigned k) {
    const std::uint64_t lo = std::uint64_t(1) << k, hi = lo << 1;
    if (t < lo || t >= hi) throw std::domain_error("A_b: t outside [2^k, 2^{k+1})");
    const BigInt m = pow2(k + 1) - bi(t);
    BigRat val(2 * (m + 1) * m + 1);
    // prod_{j<k} (1 - t_j) is 1 exactly when all low bits vanish (empty
    // product for k = 0).
    const bool low_bits_zero = (k == 0) || (t & (lo - 1)) == 0;
    if (low_bits_zero) val -= make_rat(2 * (pow2(k) + 1) * (pow2(k) + 2), 3);
    return rat_to_int(val);
}

BigInt num_b(std::uint64_t t) {
    if (t == 0) return 0;
    if (t == 1) return 1;
    unsigned k = top_bit(t);
    return 4 * num_b(t - (std::uint64_t(1) << k)) + A_b(t, k);
}

BigInt num_b_explicit(std::uint64_t t) {
    if (t == 0) return 0;
    const BinaryDigits d = BinaryDigits::of(t);
    const unsigned k = d.top;
    BigInt total = 0;
    for (unsigned i = 0; i <= k; ++i) {
        if (d.at(k - i) == 0) continue;
        unsigned ones = 0;
        for (unsigned j = 0; j <= i; ++j) ones += unsigned(d.at(std::uint64_t(k) - j + 1));
        // reduced argument keeps digits 0..k-i; its own top bit index is k-i
        const std::uint64_t arg = t & ((std::uint64_t(2) << (k - i)) - 1);
        total += pow4(ones) * A_b(arg, k - i);
    }
    return total;
}

BigInt cum_b(unsigned k) {
    return exact_div(8 * int_pow(5, k) + 2 * int_pow(8, k) - pow2(k), 9);
}

BigInt num_s0(std::uint64_t t) {
    if (t == 0) return 0;
    return pow4(unsigned(std::popcount(t - 1)));
}

BigInt cum_s0_at(std::uint64_t t) {
    // sum_{m<t} 4^{popcount(m)}: split by the highest bit where m differs
    // from t; below a set bit i the free digits contribute 5^i.
    BigInt total = 0;
    unsigned ones_above = 0;
    for (int i = 63; i >= 0; --i) {
        if (t >> i & 1) {
            total += pow4(ones_above) * int_pow(5, unsigned(i));
            ++ones_above;
        }
    }
    return total;
}

BigInt cum_s0(unsigned k) { return int_pow(5, k); }

std::vector<std::uint64_t> num_a_table(std::uint64_t t_max) {
    if (t_max > (std::uint64_t(1) << 21))
        throw std::invalid_argument("num_a_table: t_max too large for 64-bit values");
    std::vector<std::uint64_t> v(t_max + 1, 0);
    if (t_max >= 1) v[1] = 1;
    for (std::uint64_t t = 2; t <= t_max; ++t) {
        unsigned k = top_bit(t);
        std::uint64_t side = (std::uint64_t(2) << k) - t;
        v[t] = 4 * v[t - (std::uint64_t(1) << k)] + side * side;
    }
    return v;
}

std::vector<std::uint64_t> num_b_table(std::uint64_t t_max) {
    if (t_max > (std::uint64_t(1) << 21))
        throw std::invalid_argument("num_b_table: t_max too large for 64-bit values");
    std::vector<std::uint64_t> v(t_max + 1, 0);
    if (t_max >= 1) v[1] = 1;
    for (std::uint64_t t = 2; t <= t_max; ++t) {
        unsigned k = top_bit(t);
        std::uint64_t m = (std::uint64_t(2) << k) - t;
        std::uint64_t a = 2 * (m + 1) * m + 1;
        if ((t & ((std::uint64_t(1) << k) - 1)) == 0) {
            std::uint64_t p = (std::uint64_t(1) << k) + 1;
            a -= 2 * p * (p + 1) / 3;
        }
        v[t] = 4 * v[t - (std::uint64_t(1) << k)] + a;
    }
    return v;
}

CensusSeries census_sim(const rules::FullRuleTable& rule, int t_max, std::string rule_name) {
    if (t_max < 0) throw std::invalid_argument("census_sim: negative t_max");
    CensusSeries s;
    s.rule_name = std::move(rule_name);
    s.num.assign(std::size_t(t_max) + 1, 0);
    s.cum.assign(std::size_t(t_max) + 1, 0);
    if (t_max >= 1) {
        grid::DenseOrbit orbit(rule, t_max - 1);
        for (int t = 1; t <= t_max; ++t) {
            if (t > 1) orbit.advance();
            s.num[t] = bi(orbit.population());
            s.cum[t] = s.cum[t - 1] + s.num[t];
        }
    }
    return s;
}

bool write_census_csv(std::ostream& os, const CensusSeries& sim,
                      const std::function<BigInt(std::uint64_t)>& num_closed) {
    os << "t,num_sim,num_closed,cum_sim,cum_closed,match\n";
    bool all_match = true;
    BigInt cum_closed = 0;
    for (std::size_t t = 0; t < sim.num.size(); ++t) {
        const BigInt nc = num_closed(t);
        cum_closed += nc;
        const bool match = sim.num[t] == nc && sim.cum[t] == cum_closed;
        all_match = all_match && match;
        os << t << ',' << sim.num[t] << ',' << nc << ',' << sim.cum[t] << ',' << cum_closed << ','
           << (match ? 1 : 0) << '\n';
    }
    return all_match;
}

}  // namespace symca::census
