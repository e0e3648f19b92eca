#include "symca/fractal.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

#include "symca/census.hpp"

namespace symca::fractal {

namespace {

BigInt bi(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// 2^{1-i} as an exact rational (i = 0 gives 2).
BigRat two_pow_1mi(unsigned i) {
    if (i == 0) return BigRat(2);
    return make_rat(BigInt(1), pow2(i - 1));
}

BigRat inv_pow2(unsigned i) { return make_rat(BigInt(1), pow2(i)); }

}  // namespace

Dyadic::Dyadic(std::uint64_t t, unsigned k) : t_(t), k_(k) {
    if (k > 62) throw std::invalid_argument("Dyadic: level above 62 unsupported");
    if (t > (std::uint64_t(1) << k)) throw std::invalid_argument("Dyadic: value outside [0,1]");
}

Dyadic Dyadic::parse(const std::string& text) {
    if (text.find('.') != std::string::npos)
        throw std::invalid_argument("Dyadic::parse: decimal input rejected, use t/2^k form like 3/8");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            const std::uint64_t v = std::stoull(text);
            if (v > 1) throw std::invalid_argument("integer dyadic must be 0 or 1");
            return Dyadic(v, 0);
        }
        const std::uint64_t num = std::stoull(text.substr(0, slash));
        const std::uint64_t den = std::stoull(text.substr(slash + 1));
        if (den == 0 || (den & (den - 1)) != 0)
            throw std::invalid_argument("denominator must be a power of two");
        return Dyadic(num, unsigned(std::countr_zero(den)));
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("Dyadic::parse: cannot parse '" + text + "'");
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("Dyadic::parse: cannot parse '" + text + "': " + e.what());
    }
}

Dyadic Dyadic::normalized() const {
    if (t_ == 0) return Dyadic(0, 0);
    std::uint64_t t = t_;
    unsigned k = k_;
    while ((t & 1) == 0 && k > 0) {
        t >>= 1;
        --k;
    }
    return Dyadic(t, k);
}

unsigned Dyadic::last_one_level() const {
    if (t_ == 0) throw std::domain_error("last_one_level: zero has no 1 bit");
    return normalized().level();
}

BitSeq BitSeq::canonical(const BigRat& x) {
    if (x < 0 || x > 1) throw std::domain_error("BitSeq: value outside [0,1]");
    BitSeq b;
    b.value_ = x;
    const bool dyadic = mpz_popcount(x.get_den().get_mpz_t()) == 1;
    b.tail_ = dyadic ? Tail::Zeros : Tail::Expand;
    b.bits_.push_back(x == 1 ? 1 : 0);
    b.rem_ = x - b.bits_.front();
    if (dyadic) {
        while (b.rem_ != 0) {
            b.rem_ *= 2;
            const int bit = b.rem_ >= 1 ? 1 : 0;
            b.bits_.push_back(bit);
            b.rem_ -= bit;
        }
    }
    return b;
}

BitSeq BitSeq::canonical(const Dyadic& d) { return canonical(d.value()); }

BitSeq BitSeq::prefix(const std::vector<int>& bits) {
    BitSeq b;
    b.tail_ = Tail::Open;
    b.bits_.push_back(0);
    BigRat v = 0;
    for (std::size_t n = 0; n < bits.size(); ++n) {
        if (bits[n] != 0 && bits[n] != 1) throw std::invalid_argument("BitSeq::prefix: bits must be 0/1");
        b.bits_.push_back(bits[n]);
        if (bits[n]) v += inv_pow2(unsigned(n) + 1);
    }
    b.value_ = v;
    b.n_known_ = unsigned(b.bits_.size());
    return b;
}

BitSeq BitSeq::trailing_ones(const Dyadic& d) {
    const Dyadic dn = d.normalized();
    if (dn.is_zero()) throw std::domain_error("BitSeq::trailing_ones: needs a positive dyadic");
    const BitSeq canon = canonical(dn);
    BitSeq b;
    b.value_ = dn.value();
    b.tail_ = Tail::Ones;
    b.bits_ = canon.bits_;
    b.bits_.back() = 0;  // the final canonical 1 becomes 0 + all ones
    b.n_known_ = unsigned(b.bits_.size());
    return b;
}

void BitSeq::ensure(unsigned i) const {
    while (bits_.size() <= i) {
        rem_ *= 2;
        const int bit = rem_ >= 1 ? 1 : 0;
        bits_.push_back(bit);
        rem_ -= bit;
    }
}

int BitSeq::bit(unsigned i) const {
    switch (tail_) {
        case Tail::Zeros: return i < bits_.size() ? bits_[i] : 0;
        case Tail::Ones: return i < bits_.size() ? bits_[i] : 1;
        case Tail::Open:
            if (i >= bits_.size()) throw std::out_of_range("BitSeq: bit beyond the known prefix");
            return bits_[i];
        case Tail::Expand: ensure(i); return bits_[i];
    }
    return 0;
}

unsigned BitSeq::last_one() const {
    if (tail_ != Tail::Zeros || value_ == 0)
        throw std::domain_error("BitSeq::last_one: expansion does not terminate");
    unsigned last = 0;
    for (unsigned i = 0; i < bits_.size(); ++i)
        if (bits_[i]) last = i;
    return last;
}

BitSeq bits_of(const Dyadic& d) { return BitSeq::canonical(d); }

BigRat f_piece(const BitSeq& x, unsigned i) {
    if (x.bit(i) == 0) return BigRat(0);
    unsigned ones = 0;
    BigRat prefix = 0;
    for (unsigned j = 0; j < i; ++j) {
        if (x.bit(j)) {
            ++ones;
            prefix += inv_pow2(j);
        }
    }
    const BigRat tail = two_pow_1mi(i) - (x.value() - prefix);
    return BigRat(pow4(ones)) * tail * tail;
}

BigRat F_eval(const Dyadic& d) {
    const Dyadic dn = d.normalized();
    if (dn.is_zero()) return BigRat(0);
    const BitSeq x = BitSeq::canonical(dn);
    const unsigned last = x.last_one();
    const BigRat v = x.value();
    BigRat acc = 0, prefix = 0;
    BigInt fourpow = 1;
    for (unsigned i = 0; i <= last; ++i) {
        if (!x.bit(i)) continue;
        const BigRat tail = two_pow_1mi(i) - (v - prefix);
        acc += BigRat(fourpow) * tail * tail;
        prefix += inv_pow2(i);
        fourpow *= 4;
    }
    return acc;
}

TruncResult F_trunc(const BitSeq& x, unsigned n_bits) {
    const BigRat v = x.value();
    BigRat partial = 0, prefix = 0;
    BigInt fourpow = 1;
    unsigned zeros = 0;
    for (unsigned i = 0; i <= n_bits; ++i) {
        if (x.bit(i)) {
            const BigRat tail = two_pow_1mi(i) - (v - prefix);
            partial += BigRat(fourpow) * tail * tail;
            prefix += inv_pow2(i);
            fourpow *= 4;
        } else if (i >= 1) {
            ++zeros;
        }
    }
    return {partial, make_rat(BigInt(64), 9 * pow4(zeros))};
}

TruncResult G_trunc(const BitSeq& x, unsigned n_bits) {
    const BigRat v = x.value();
    // position of the last 1 among x_0..x_N; the only candidate for an
    // undetermined vanishing product on an open prefix
    int last = -1;
    for (unsigned i = 0; i <= n_bits; ++i)
        if (x.bit(i)) last = int(i);

    BigRat partial = 0, prefix = 0, slack = 0;
    BigInt fourpow = 1;
    unsigned zeros = 0;
    for (unsigned i = 0; i <= n_bits; ++i) {
        if (x.bit(i)) {
            const BigRat tail = two_pow_1mi(i) - (v - prefix);
            BigRat term = make_rat(BigInt(3), BigInt(2)) * tail * tail;
            const BigRat product_part = make_rat(BigInt(1), 2 * pow4(i));
            if (x.terminates()) {
                if (i == x.last_one()) term -= product_part;
            } else if (!x.tail_known() && int(i) == last) {
                // tail unknown: the product may or may not vanish; account
                // for it on the bound side
                slack = BigRat(fourpow) * product_part;
            }
            partial += BigRat(fourpow) * term;
            prefix += inv_pow2(i);
            fourpow *= 4;
        } else if (i >= 1) {
            ++zeros;
        }
    }
    // (3/2) * (64/9) for the squared-tail part + (1/8) for the at-most-one
    // surviving product term past N
    const BigRat bound = make_rat(BigInt(259), 24 * pow4(zeros)) + slack;
    return {partial, bound};
}

bool F_interior_bound_check(const Dyadic& d) {
    if (d.is_zero() || d.is_one())
        throw std::domain_error("F_interior_bound_check: needs 0 < d < 1");
    return F_eval(d) < make_rat(BigInt(4), BigInt(9));
}

BigRat G_eval(const Dyadic& d) {
    const Dyadic dn = d.normalized();
    if (dn.is_zero()) return BigRat(0);
    const BitSeq x = BitSeq::canonical(dn);
    const unsigned last = x.last_one();
    const BigRat v = x.value();
    BigRat acc = 0, prefix = 0;
    BigInt fourpow = 1;
    for (unsigned i = 0; i <= last; ++i) {
        if (!x.bit(i)) continue;
        const BigRat tail = two_pow_1mi(i) - (v - prefix);
        BigRat term = make_rat(BigInt(3), BigInt(2)) * tail * tail;
        if (i == last) term -= make_rat(BigInt(1), 2 * pow4(i));
        acc += BigRat(fourpow) * term;
        prefix += inv_pow2(i);
        fourpow *= 4;
    }
    return acc;
}

BigRat G_limit_probe(const Dyadic& d, unsigned k) {
    const Dyadic dn = d.normalized();
    if (k < dn.level()) throw std::invalid_argument("G_limit_probe: k below the level of d");
    if (k > 62) throw std::invalid_argument("G_limit_probe: k above 62 unsupported");
    const std::uint64_t t = dn.numerator() << (k - dn.level());
    return make_rat(census::num_b(t), census::num_b(std::uint64_t(1) << k));
}

BigRat H_eval(unsigned k, const BigRat& x) {
    if (x < 0 || x > 1) throw std::domain_error("H_eval: x outside [0,1]");
    if (x == 0) return BigRat(0);
    if (x == 1) return BigRat(1);  // all k digits set
    if (mpz_popcount(x.get_den().get_mpz_t()) != 1) return BigRat(0);  // not dyadic
    const std::size_t level = mpz_sizeinbase(x.get_den().get_mpz_t(), 2) - 1;
    if (level > k) return BigRat(0);  // deeper than k digits
    BigInt scaled = x.get_num() << (k - unsigned(level));
    const unsigned ones = unsigned(mpz_popcount(scaled.get_mpz_t()));
    return make_rat(pow4(ones), pow4(k));
}

BigRat H_eval(unsigned k, const Dyadic& d) { return H_eval(k, d.value()); }

namespace {

BigRat salem_rec(const BigRat& alpha, std::uint64_t t, unsigned k) {
    if (t == 0) return BigRat(0);
    if (t == (std::uint64_t(1) << k)) return BigRat(1);
    const std::uint64_t half = std::uint64_t(1) << (k - 1);
    if (t < half) return alpha * salem_rec(alpha, t, k - 1);
    return (1 - alpha) * salem_rec(alpha, t - half, k - 1) + alpha;
}

}  // namespace

BigRat salem_eval(const BigRat& alpha, const Dyadic& d) {
    if (alpha <= 0 || alpha >= 1) throw std::domain_error("salem_eval: alpha outside (0,1)");
    const Dyadic dn = d.normalized();
    return salem_rec(alpha, dn.numerator(), dn.level());
}

BigRat gfh_identity_residual(const Dyadic& d) {
    const Dyadic dn = d.normalized();
    BigRat correction(0);
    if (dn.is_one())
        correction = make_rat(BigInt(1), BigInt(2));
    else if (!dn.is_zero())
        correction = make_rat(BigInt(1), BigInt(8)) * H_eval(dn.last_one_level(), dn);
    return G_eval(dn) - make_rat(BigInt(3), BigInt(2)) * F_eval(dn) + correction;
}

std::optional<BigRat> gfh_published_residual(const Dyadic& d) {
    const Dyadic dn = d.normalized();
    if (dn.is_zero() || dn.is_one()) return std::nullopt;  // shifted argument leaves [0,1]
    const unsigned kx = dn.last_one_level();
    const Dyadic shifted(dn.numerator() + 1, kx);
    const BigRat rhs = make_rat(BigInt(3), BigInt(2)) * F_eval(dn) -
                       make_rat(BigInt(1), BigInt(2)) * H_eval(kx, shifted);
    return G_eval(dn) - rhs;
}

void write_sample_csv(std::ostream& os, unsigned grid_level, unsigned h_k, const BigRat& alpha) {
    os << "x_num,x_den,F,F_decimal,G,G_decimal,H" << h_k << ",H" << h_k
       << "_decimal,L_alpha,L_alpha_decimal\n";
    const std::uint64_t n = std::uint64_t(1) << grid_level;
    for (std::uint64_t t = 0; t <= n; ++t) {
        const Dyadic d = Dyadic(t, grid_level).normalized();
        const BigRat f = F_eval(d), g = G_eval(d), h = H_eval(h_k, d), l = salem_eval(alpha, d);
        os << bi(d.numerator()) << ',' << pow2(d.level()) << ',' << rat_str(f) << ','
           << decimal_str(f) << ',' << rat_str(g) << ',' << decimal_str(g) << ',' << rat_str(h)
           << ',' << decimal_str(h) << ',' << rat_str(l) << ',' << decimal_str(l) << '\n';
    }
}

}  // namespace symca::fractal
