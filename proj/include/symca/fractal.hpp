#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symca/rational.hpp"

namespace symca::fractal {

// Dyadic rational t / 2^k in [0, 1].
class Dyadic {
public:
    Dyadic() = default;  // zero
    Dyadic(std::uint64_t t, unsigned k);

    // Accepts "t/d" with d an exact power of two, or the integers "0" / "1".
    // Decimal notation is rejected.
    static Dyadic parse(const std::string& text);

    std::uint64_t numerator() const { return t_; }
    unsigned level() const { return k_; }
    BigRat value() const { return make_rat(BigInt(static_cast<unsigned long>(t_)), pow2(k_)); }
    bool is_zero() const { return t_ == 0; }
    bool is_one() const { return t_ == (std::uint64_t(1) << k_); }

    Dyadic normalized() const;
    // Level of the normalized form: the position of the last 1 in the binary
    // expansion (0 for the value 1). Throws for zero.
    unsigned last_one_level() const;

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        Dyadic na = a.normalized(), nb = b.normalized();
        return na.t_ == nb.t_ && na.k_ == nb.k_;
    }

private:
    std::uint64_t t_ = 0;
    unsigned k_ = 0;
};

// Binary expansion x = sum_i x_i 2^{-i} of a value in [0, 1]; x_0 is the
// integer bit (set only for x = 1). The bits always expand to value(): tails
// of the series are evaluated through the exact value, so any representation
// whose digits sum to the value is usable, including the trailing-ones one.
class BitSeq {
public:
    // Canonical expansion; finite (trailing zeros) exactly for dyadics.
    static BitSeq canonical(const BigRat& x);
    static BitSeq canonical(const Dyadic& d);
    // Open prefix x_1..x_N: value is the zero extension, but the tail is
    // treated as unknown (bits past N are unavailable).
    static BitSeq prefix(const std::vector<int>& bits);
    // Trailing-ones representation of a dyadic d > 0: the last canonical 1
    // becomes 0 followed by all ones. Same value, different digits.
    static BitSeq trailing_ones(const Dyadic& d);

    // x_i; throws std::out_of_range past the known bits of an open prefix.
    int bit(unsigned i) const;
    const BigRat& value() const { return value_; }

    // True when the expansion is known to end in zeros (canonical dyadic).
    bool terminates() const { return tail_ == Tail::Zeros; }
    // True when bits past every index are known (everything but open prefixes).
    bool tail_known() const { return tail_ != Tail::Open; }
    // Index of the last 1 bit of a terminating expansion; requires value > 0.
    unsigned last_one() const;
    unsigned known_bits() const { return n_known_; }

private:
    enum class Tail { Zeros, Ones, Expand, Open };
    BitSeq() = default;

    void ensure(unsigned i) const;

    BigRat value_;
    Tail tail_ = Tail::Zeros;
    unsigned n_known_ = 0;            // prefix length for Tail::Open / Ones
    mutable std::vector<int> bits_;   // cache of produced bits
    mutable BigRat rem_;              // expansion state for Tail::Expand
};

BitSeq bits_of(const Dyadic& d);

// i-th series term of F:
//   f_i(x) = x_i 4^{sum_{j<i} x_j} (sum_{j>=i} (1-x_j)/2^j)^2,
// with the tail evaluated exactly through the value of x.
BigRat f_piece(const BitSeq& x, unsigned i);

// F on a dyadic via its finite canonical expansion; exact rational.
BigRat F_eval(const Dyadic& d);

struct TruncResult {
    BigRat partial;     // sum of the series terms i <= N
    BigRat tail_bound;  // upper bound on every term past N, for any extension
};

// Partial sum of the F series over i <= n_bits plus a certified tail bound
// (64/9) * 4^{-z}, z = number of zero bits among x_1..x_N. The bound covers
// every extension of the first N bits.
TruncResult F_trunc(const BitSeq& x, unsigned n_bits);

// Same for the G series; the bound adds the product-term envelope
// (1/8) * 4^{-z} and, for open prefixes, the one undetermined product term.
TruncResult G_trunc(const BitSeq& x, unsigned n_bits);

// True iff F(d) < 4/9 for an interior dyadic (0 < d < 1).
bool F_interior_bound_check(const Dyadic& d);

// G on a dyadic via its series:
//   G(x) = sum_i x_i 4^{sum_{j<i} x_j} ( (3/2) tail_i^2 - (1/(2*4^i)) prod_{j>i}(1-x_j) ).
BigRat G_eval(const Dyadic& d);

// Finite-level normalized census ratio num_b(d*2^k) / num_b(2^k); converges
// to G(d) as k grows. Requires k >= level of d.
BigRat G_limit_probe(const Dyadic& d, unsigned k);

// H_k: 4^{(number of 1 digits among the first k binary digits of x)} / 4^k
// for dyadics of level <= k except 0; H_k(0) = 0; 0 on deeper-level or
// non-dyadic points; H_k(1) = 1 (all k digits set).
BigRat H_eval(unsigned k, const BigRat& x);
BigRat H_eval(unsigned k, const Dyadic& d);

// Salem's singular function L_alpha on a dyadic, 0 < alpha < 1; the de Rham
// recursion terminates in exactly level(d) halvings.
BigRat salem_eval(const BigRat& alpha, const Dyadic& d);

// Residual of the corrected G-F-H identity
//   G(d) = (3/2) F(d) - correction(d),
// correction = 0 at 0, 1/2 at 1, (1/8) H_{k_x}(d) at interior dyadics
// (k_x = level of the last 1 bit). Exactly zero for every dyadic.
BigRat gfh_identity_residual(const Dyadic& d);

// Residual of the identity in its published form, which shifts the H
// argument: G(d) - ((3/2) F(d) - (1/2) H_{k_x}(d + 2^{-k_x})). Nonzero at
// interior dyadics (reported, not asserted); nullopt when the shifted
// argument leaves [0, 1] (d = 1) or k_x is undefined (d = 0).
std::optional<BigRat> gfh_published_residual(const Dyadic& d);

// CSV sample export over the level-`grid_level` dyadic grid: columns
// x_num, x_den, then exact fraction and 17-significant-digit decimal for
// F, G, H_k and L_alpha.
void write_sample_csv(std::ostream& os, unsigned grid_level, unsigned h_k, const BigRat& alpha);

}  // namespace symca::fractal
